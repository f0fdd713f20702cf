#pragma once

#include <string>
#include <vector>

#include "dowling/gstirling.hpp"
#include "dowling/hurwitz.hpp"
#include "dowling/identity_runner.hpp"
#include "dowling/report.hpp"

namespace dowling {

/// Parameters of the higher-order r-Dowling polynomial D^{lambda,x}_{m,r}(n; alpha).
/// alpha = 0 is the non-degenerate case.
struct DowlingParams {
  long m = 1;
  long r = 0;
  long alpha = 0;

  std::string to_string() const;
};

/// Exact polynomial in (x, lambda); the coefficient of (x lambda)^k is S(n,k; alpha, m, r).
struct DowlingValue {
  int n = 0;
  DowlingParams params;
  BiPoly poly;
};

/// Throws std::invalid_argument unless m >= 1, r >= 0, alpha >= 0.
DowlingValue dowling_poly(int n, DowlingParams params);

/// sum_k S(n,k; alpha, m, r) (x lambda)^k for arbitrary integer parameters.
BiPoly dowling(TriangleCache& cache, int n, long m, long r, long alpha);

/// e_alpha^r(z) exp(xl (e_alpha^m(z) - 1) / m), with xl the product x * lambda.
HurwitzSeries dowling_egf(DowlingParams params, const Integer& xl, int order);

/// c_0..c_{n_max} of the generating function at x = x0, lambda = l0.
/// Throws NonIntegralError if a coefficient is not an integer.
std::vector<Integer> dowling_via_egf(int n_max, DowlingParams params, long x0, long l0);

/// Identity ids D1..D11 (alpha = 0) and G1..G3 (alpha from the grid).
std::vector<IdentitySpec> dowling_identity_catalog(const ParamGrid& grid, TriangleCache& cache);

/// Runs the selected identities (all when `ids` is empty). When D9 is checked, the report
/// carries an adjudication comparing it with D1 at every instance.
IdentityReport check_dowling_identities(const std::vector<std::string>& ids, int n_max,
                                        const ParamGrid& grid);

}  // namespace dowling
