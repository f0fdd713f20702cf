#pragma once

#include <map>
#include <string>
#include <vector>

#include "dowling/dowling.hpp"
#include "dowling/exact.hpp"
#include "dowling/report.hpp"

namespace dowling {

/// Partition of n by multiplicities: g[i] copies of part i (g[0] unused).
struct IntegerPartition {
  std::vector<int> g;

  int size() const;   // sum i * g_i
  int parts() const;  // sum g_i
};

/// Every partition of n into exactly `parts` parts.
std::vector<IntegerPartition> partitions_with_parts(int n, int parts);

/// Polynomial in the ordinary coefficients m_1, m_2, ... of Theta: monomial exponent
/// vector (index j holds the power of m_j) to rational coefficient.
using MomentPoly = std::map<std::vector<int>, Rational>;

/// W(n,e) symbolically: sum over partitions of n with n-e parts of prod m_i^{g_i} / g_i!.
MomentPoly w_symbolic(int n, int e);

/// The W(n,e) formulas for e = 0..4 as they are commonly transcribed (including their
/// typographical slips). Throws std::out_of_range for other e.
MomentPoly w_transcribed(int n, int e);

std::string to_string(const MomentPoly& p);

/// m_j = D^{1,x0}_{m,r}(j;alpha) / j! for j = 0..n.
std::vector<Rational> theta_coefficients(int n, DowlingParams base, long x0);

/// Exact W(n,e) with m_j from theta_coefficients. Requires 0 <= e <= n-1 (n >= 1).
Rational w_value(int n, int e, DowlingParams base, long x0);

struct AsymptoticEstimate {
  int n = 0;
  long lambda = 0;
  int terms_used = 0;
  Rational estimate;
  Rational exact;
  Rational rel_error;
  std::string value;            // 40 significant digits
  std::string exact_value;      // 40 significant digits
  std::string rel_error_value;  // 40 significant digits
};

/// n! (lambda)_n sum_{e=0}^{e_max} W(n,e) / (lambda-n+e)_e against the exact n![z^n] Theta^lambda
/// (binary powering). Terms with e > n-1 are empty sums. Requires lambda > n.
AsymptoticEstimate dowling_asymptotic(int n, long lambda, int e_max, DowlingParams base,
                                      long x0);

/// n! [z^n] Theta(z)^lambda.
Integer theta_power_coefficient(int n, long lambda, DowlingParams base, long x0);

/// Transcribed W(n,e) formulas versus the generic partition sum, n <= n_max.
Adjudication adjudicate_w_formulas(int n_max);

/// Theta^lambda versus D^{lambda,x}_{m,r}(n;alpha) at integer lambda.
Adjudication adjudicate_lambda_overload(int n_max, const std::vector<DowlingParams>& bases,
                                        const std::vector<long>& x_values,
                                        const std::vector<long>& lambda_values);

}  // namespace dowling
