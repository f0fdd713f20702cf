#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "dowling/report.hpp"

namespace dowling {

inline constexpr int kQuadraturePoints = 16;     // Gauss-Legendre rule per panel
inline constexpr int kDefaultQuadNodes = 256;    // coarse grid; the fine grid doubles it
inline constexpr long kMaxCasadoJ = 10;
inline constexpr long kMaxCasadoN = 12;
inline constexpr long kMaxIntegralN = 10;
inline constexpr long kMaxIntegralR = 3;

struct QuadratureResult {
  double value = 0.0;
  int nodes_used = 0;
  double est_abs_error = 0.0;
};

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// q-point Gauss-Legendre rule by Newton iteration on P_q.
GaussRule gauss_legendre(int q);

/// Composite rule on [a, b] with `panels` equal panels of a q-point rule.
double integrate(const std::function<double(double)>& f, double a, double b, int panels,
                 int q = kQuadraturePoints);

/// Integral over [0, pi] on `nodes` and 2*nodes points; value from the finer grid,
/// error estimate from the difference.
QuadratureResult integrate_doubling(const std::function<double(double)>& f,
                                    int nodes = kDefaultQuadNodes);

/// Im int_0^pi exp(j e^{i t}) sin(n t) dt.
QuadratureResult casado_check(long j, long n, int nodes = kDefaultQuadNodes);
/// (pi/2) j^n / n!
double casado_closed_form(long j, long n);

/// 2 n! / (pi e^{x/m}) Im int_0^pi exp((x/m) e^{m e^{it}}) e^{r e^{it}} sin(nt) dt.
QuadratureResult bell_integral(long n, double x0, long m, long r, int nodes = kDefaultQuadNodes);
/// Same with x replaced by x0 * l0.
QuadratureResult dowling_integral(long n, double x0, double l0, long m, long r,
                                  int nodes = kDefaultQuadNodes);

/// The integrands exactly as typeset: exp(e^{i x t}) for the Bell form and
/// exp(e^{i x l m t} / m) for the Dowling form, each times e^{r e^{it}}.
QuadratureResult bell_integral_printed(long n, double x0, long m, long r,
                                       int nodes = kDefaultQuadNodes);
QuadratureResult dowling_integral_printed(long n, double x0, double l0, long m, long r,
                                          int nodes = kDefaultQuadNodes);

double relative_error(double value, double exact);

/// Printed versus corrected integrands against the exact polynomials, alpha = 0.
Adjudication adjudicate_integrands(int n_max);

}  // namespace dowling
