#pragma once

#include <string>
#include <vector>

#include "dowling/gstirling.hpp"
#include "dowling/hurwitz.hpp"
#include "dowling/identity_runner.hpp"
#include "dowling/report.hpp"

namespace dowling {

/// B_n(x; alpha, beta, r) = sum_k S(n,k; alpha, beta, r) x^k, held as a BiPoly of
/// lambda-degree 0.
struct BellPoly {
  int n = 0;
  GStirlingParams params;
  BiPoly poly;
};

BellPoly gbell_poly(int n, GStirlingParams params);

/// Same polynomial through a shared triangle cache.
BiPoly gbell(TriangleCache& cache, int n, GStirlingParams params);

/// e_alpha^r(z) * exp(x0 (e_alpha^beta(z) - 1) / beta); requires beta != 0.
HurwitzSeries gbell_egf(GStirlingParams params, const Integer& x0, int order);

/// The generating function exactly as it is commonly printed:
/// (1 + alpha z)^{r/alpha} exp[r z + ((1 + alpha z)^{beta/alpha} - 1) / beta],
/// with (1 + alpha z)^{r/alpha} read as e^{rz} at alpha = 0.
HurwitzSeries gbell_egf_printed(GStirlingParams params, int order);

/// Identity ids B1..B7.
std::vector<IdentitySpec> bell_identity_catalog(int n_max, const ParamGrid& grid,
                                                TriangleCache& cache);

IdentityReport check_bell_identities(const std::vector<std::string>& ids, int n_max,
                                     const ParamGrid& grid);

/// Printed generating function versus gbell_poly at x = 1.
Adjudication adjudicate_bell_egf(int n_max, const ParamGrid& grid);

}  // namespace dowling
