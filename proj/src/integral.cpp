#include "dowling/integral.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dowling/dowling.hpp"

namespace dowling {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

GaussRule gauss_legendre(int q) {
  if (q < 1) throw std::invalid_argument("gauss_legendre: q must be positive");
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(q));
  rule.weights.resize(static_cast<std::size_t>(q));
  for (int i = 0; i < (q + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (q + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 1; j <= q; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = q * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0, p1 = 0.0;
    for (int j = 1; j <= q; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
    }
    dp = q * (z * p0 - p1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -z;
    rule.nodes[static_cast<std::size_t>(q - 1 - i)] = z;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(q - 1 - i)] = w;
  }
  return rule;
}

namespace {

const GaussRule& cached_rule(int q) {
  static const GaussRule rule16 = gauss_legendre(kQuadraturePoints);
  if (q == kQuadraturePoints) return rule16;
  thread_local GaussRule other;
  other = gauss_legendre(q);
  return other;
}

double factorial_d(long n) {
  double f = 1.0;
  for (long i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

void check_caps(long n, long r) {
  if (n < 0 || n > kMaxIntegralN) {
    throw std::out_of_range("integral: n=" + std::to_string(n) + " outside the cap 0 <= n <= " +
                            std::to_string(kMaxIntegralN));
  }
  if (r < 0 || r > kMaxIntegralR) {
    throw std::out_of_range("integral: r=" + std::to_string(r) + " outside the cap 0 <= r <= " +
                            std::to_string(kMaxIntegralR));
  }
}

// 2 n! / (pi e^{scale}) * Im int F(t) sin(nt) dt
QuadratureResult sine_transform(long n, double scale, const std::function<cplx(double)>& F,
                                int nodes) {
  if (n == 0) return {1.0, 0, 0.0};
  const auto nd = static_cast<double>(n);
  auto res = integrate_doubling([&](double t) { return F(t).imag() * std::sin(nd * t); }, nodes);
  const double pre = 2.0 * factorial_d(n) / (kPi * std::exp(scale));
  res.value *= pre;
  res.est_abs_error *= pre;
  return res;
}

cplx unit(double t) { return {std::cos(t), std::sin(t)}; }

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, int panels, int q) {
  if (panels < 1) throw std::invalid_argument("integrate: panels must be positive");
  const GaussRule& rule = cached_rule(q);
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      s += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    }
    total += 0.5 * h * s;
  }
  return total;
}

QuadratureResult integrate_doubling(const std::function<double(double)>& f, int nodes) {
  if (nodes < kQuadraturePoints || nodes % kQuadraturePoints != 0) {
    throw std::invalid_argument("integrate_doubling: nodes must be a positive multiple of " +
                                std::to_string(kQuadraturePoints));
  }
  const int panels = nodes / kQuadraturePoints;
  const double coarse = integrate(f, 0.0, kPi, panels);
  const double fine = integrate(f, 0.0, kPi, 2 * panels);
  return {fine, 2 * nodes, std::abs(fine - coarse)};
}

QuadratureResult casado_check(long j, long n, int nodes) {
  if (j < 0 || j > kMaxCasadoJ) {
    throw std::out_of_range("casado_check: j=" + std::to_string(j) + " outside the cap 0 <= j <= " +
                            std::to_string(kMaxCasadoJ));
  }
  if (n < 1 || n > kMaxCasadoN) {
    throw std::out_of_range("casado_check: n=" + std::to_string(n) + " outside the cap 1 <= n <= " +
                            std::to_string(kMaxCasadoN));
  }
  const auto jd = static_cast<double>(j);
  const auto nd = static_cast<double>(n);
  return integrate_doubling(
      [&](double t) { return std::exp(jd * unit(t)).imag() * std::sin(nd * t); }, nodes);
}

double casado_closed_form(long j, long n) {
  return 0.5 * kPi * std::pow(static_cast<double>(j), static_cast<double>(n)) / factorial_d(n);
}

QuadratureResult bell_integral(long n, double x0, long m, long r, int nodes) {
  check_caps(n, r);
  if (m < 1) throw std::invalid_argument("bell_integral: m must be >= 1");
  const double a = x0 / static_cast<double>(m);
  const auto md = static_cast<double>(m);
  const auto rd = static_cast<double>(r);
  return sine_transform(
      n, a,
      [&](double t) {
        const cplx z = unit(t);
        return std::exp(a * std::exp(md * z) + rd * z);
      },
      nodes);
}

QuadratureResult dowling_integral(long n, double x0, double l0, long m, long r, int nodes) {
  return bell_integral(n, x0 * l0, m, r, nodes);
}

QuadratureResult bell_integral_printed(long n, double x0, long m, long r, int nodes) {
  check_caps(n, r);
  if (m < 1) throw std::invalid_argument("bell_integral_printed: m must be >= 1");
  const auto rd = static_cast<double>(r);
  return sine_transform(
      n, x0 / static_cast<double>(m),
      [&](double t) { return std::exp(std::exp(cplx(0.0, x0 * t)) + rd * unit(t)); }, nodes);
}

QuadratureResult dowling_integral_printed(long n, double x0, double l0, long m, long r,
                                          int nodes) {
  check_caps(n, r);
  if (m < 1) throw std::invalid_argument("dowling_integral_printed: m must be >= 1");
  const auto md = static_cast<double>(m);
  const auto rd = static_cast<double>(r);
  return sine_transform(
      n, x0 * l0 / md,
      [&](double t) {
        return std::exp(std::exp(cplx(0.0, x0 * l0 * md * t)) / md + rd * unit(t));
      },
      nodes);
}

double relative_error(double value, double exact) {
  const double diff = std::abs(value - exact);
  return exact == 0.0 ? diff : diff / std::abs(exact);
}

Adjudication adjudicate_integrands(int n_max) {
  Adjudication adj;
  adj.id = "integrands";
  adj.subject = "typeset integrands exp(e^{ixt}) and exp(e^{ixlmt}/m) versus "
                "exp((x/m) e^{m e^{it}})";
  adj.resolution = "the corrected integrand exp((x/m) e^{m e^{it}}) e^{r e^{it}} is used; the "
                   "typeset forms are evaluated alongside";
  long corrected_ok = 0, checked = 0;
  auto fmt = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
  };
  for (long m : {1L, 2L}) {
    for (long r : {0L, 1L, 2L}) {
      for (long x0 : {1L, 2L}) {
        for (long l0 : {1L, 2L}) {
          for (int n = 1; n <= n_max; ++n) {
            const DowlingParams p{m, r, 0};
            const double exact = dowling_poly(n, p).poly.eval(x0, l0).get_d();
            const double printed = l0 == 1 ? bell_integral_printed(n, x0, m, r).value
                                           : dowling_integral_printed(n, x0, l0, m, r).value;
            const double corrected = dowling_integral(n, x0, l0, m, r).value;
            ++checked;
            if (relative_error(corrected, exact) <= 1e-7) ++corrected_ok;
            adj.add({"n=" + std::to_string(n) + ",x=" + std::to_string(x0) + ",l=" +
                         std::to_string(l0) + ",m=" + std::to_string(m) + ",r=" + std::to_string(r),
                     fmt(printed), fmt(exact), relative_error(printed, exact) <= 1e-7});
          }
        }
      }
    }
  }
  adj.facts.emplace_back("corrected_within_1e-7", std::to_string(corrected_ok) + "/" +
                                                      std::to_string(checked));
  return adj;
}

}  // namespace dowling
