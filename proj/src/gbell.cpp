#include "dowling/gbell.hpp"

#include <stdexcept>

namespace dowling {

BiPoly gbell(TriangleCache& cache, int n, GStirlingParams params) {
  const auto& tri = cache.get(params, n);
  BiPoly out;
  for (int k = 0; k <= n; ++k) out += BiPoly::monomial(k, 0, tri.at(n, k));
  return out;
}

BellPoly gbell_poly(int n, GStirlingParams params) {
  if (n < 0) throw std::invalid_argument("gbell_poly: n must be non-negative");
  TriangleCache cache;
  return {n, params, gbell(cache, n, params)};
}

HurwitzSeries gbell_egf(GStirlingParams p, const Integer& x0, int order) {
  if (p.beta == 0) throw std::invalid_argument("gbell_egf: beta must be nonzero");
  HurwitzSeries inner = hz_deg_exp(p.alpha, p.beta, order) - HurwitzSeries::constant(order, 1);
  inner *= Rational(x0, p.beta);
  return hz_mul(hz_deg_exp(p.alpha, p.r, order), hz_exp(inner));
}

HurwitzSeries gbell_egf_printed(GStirlingParams p, int order) {
  if (p.beta == 0) throw std::invalid_argument("gbell_egf_printed: beta must be nonzero");
  HurwitzSeries inner = hz_deg_exp(p.alpha, p.beta, order) - HurwitzSeries::constant(order, 1);
  inner *= Rational(1, p.beta);
  inner += HurwitzSeries::identity(order) * Rational(p.r);
  return hz_mul(hz_deg_exp(p.alpha, p.r, order), hz_exp(inner));
}

namespace {

std::vector<GridPoint> nondegenerate_points(const ParamGrid& grid) {
  std::vector<GridPoint> pts;
  if (grid.alpha.empty()) return pts;
  for (long m : grid.m) {
    for (long r : grid.r) pts.push_back({.alpha = 0, .m = m, .r = r});
  }
  return pts;
}

std::vector<GridPoint> degenerate_points(const ParamGrid& grid) {
  std::vector<GridPoint> pts;
  for (long a : grid.alpha) {
    for (long m : grid.m) {
      for (long r : grid.r) pts.push_back({.alpha = a, .m = m, .r = r});
    }
  }
  return pts;
}

const BiPoly kX = BiPoly::x();

}  // namespace

std::vector<IdentitySpec> bell_identity_catalog(int n_max, const ParamGrid& grid,
                                                TriangleCache& cache) {
  (void)n_max;
  auto B = [&cache](int n, long alpha, long beta, long r) {
    return gbell(cache, n, {alpha, beta, r});
  };
  const auto nondeg = nondegenerate_points(grid);
  const auto deg = degenerate_points(grid);
  std::vector<IdentitySpec> cat;

  cat.push_back({
      .id = "B1",
      .statement = "B_{n+1}(x;0,m,r) = r B_n(x;0,m,r) + x B_n(x;0,m,m+r)",
      .points = nondeg,
      .sides =
          [B](int n, const GridPoint& p, const Binding&) {
            return std::pair{B(n + 1, 0, p.m, p.r),
                             p.r * B(n, 0, p.m, p.r) + kX * B(n, 0, p.m, p.m + p.r)};
          },
  });

  cat.push_back({
      .id = "B2",
      .statement = "B_n(x;0,m,r) = sum_k C(n,k) B_k(x;0,m,0) r^{n-k}",
      .points = nondeg,
      .sides =
          [B](int n, const GridPoint& p, const Binding&) {
            BiPoly rhs;
            for (int k = 0; k <= n; ++k) {
              rhs += binomial(n, k) * ipow(p.r, static_cast<unsigned long>(n - k)) *
                     B(k, 0, p.m, 0);
            }
            return std::pair{B(n, 0, p.m, p.r), rhs};
          },
  });

  cat.push_back({
      .id = "B3",
      .statement = "B_{n+1}(x;0,m,r) = r B_n(x;0,m,r) + x sum_k C(n,k) m^k B_{n-k}(x;0,m,r)",
      .points = nondeg,
      .sides =
          [B](int n, const GridPoint& p, const Binding&) {
            BiPoly sum;
            for (int k = 0; k <= n; ++k) {
              sum += binomial(n, k) * ipow(p.m, static_cast<unsigned long>(k)) *
                     B(n - k, 0, p.m, p.r);
            }
            return std::pair{B(n + 1, 0, p.m, p.r), p.r * B(n, 0, p.m, p.r) + kX * sum};
          },
  });

  cat.push_back({
      .id = "B4",
      .statement = "B_{n+1}(x;a,m,r) = (r - a n) B_n(x;a,m,r) + x sum_k C(n,k) (m|a)_k "
                   "B_{n-k}(x;a,m,r)",
      .points = deg,
      .sides =
          [B](int n, const GridPoint& p, const Binding&) {
            BiPoly sum;
            for (int k = 0; k <= n; ++k) {
              sum += binomial(n, k) * gen_falling(p.m, p.alpha, k) *
                     B(n - k, p.alpha, p.m, p.r);
            }
            return std::pair{B(n + 1, p.alpha, p.m, p.r),
                             Integer(p.r - p.alpha * n) * B(n, p.alpha, p.m, p.r) + kX * sum};
          },
  });

  cat.push_back({
      .id = "B5",
      .statement = "B_{n+1}(x;a,m,r) = r B_n(x;a,m,r-a) + x B_n(x;a,m,m+r-a)",
      .points = deg,
      .sides =
          [B](int n, const GridPoint& p, const Binding&) {
            return std::pair{B(n + 1, p.alpha, p.m, p.r),
                             p.r * B(n, p.alpha, p.m, p.r - p.alpha) +
                                 kX * B(n, p.alpha, p.m, p.m + p.r - p.alpha)};
          },
  });

  auto b6 = [&cache, B](long shift) {
    return [&cache, B, shift](int n, const GridPoint& p, const Binding& b) {
      const GStirlingParams bp = b.map(p.m, p.alpha);
      BiPoly sum;
      for (int j = 0; j <= n; ++j) {
        sum += binomial(n, j) * gen_falling(p.m + p.r - shift * p.alpha, p.alpha, j) *
               gbell(cache, n - j, bp);
      }
      return std::pair{B(n + 1, p.alpha, p.m, p.r),
                       p.r * B(n, p.alpha, p.m, p.r - p.alpha) + kX * sum};
    };
  };
  cat.push_back({
      .id = "B6",
      .statement = "B_{n+1}(x;a,m,r) = r B_n(x;a,m,r-a) + x sum_j C(n,j) (m+r|a)_j "
                   "B_{n-j}(x,m,a)",
      .points = deg,
      .candidates = two_parameter_bindings(),
      .frozen_binding = "B(x;alpha=q,beta=p,r=0)",
      .sides = b6(0),
      .corrected_statement = "falling factorial (m+r-a|a)_j in place of (m+r|a)_j",
      .corrected_sides = b6(1),
      .note = "the factor written B_{n-j}(x,m,a) is read with (p,q) = (m,a)",
  });

  cat.push_back({
      .id = "B7",
      .statement = "B_n(x;a,m,r) = sum_j C(n,j) (r|a)_j B_{n-j}(x,a,m)",
      .points = deg,
      .candidates = two_parameter_bindings(),
      .frozen_binding = "B(x;alpha=p,beta=q,r=0)",
      .sides =
          [&cache, B](int n, const GridPoint& p, const Binding& b) {
            const GStirlingParams bp = b.map(p.alpha, p.m);
            BiPoly sum;
            for (int j = 0; j <= n; ++j) {
              sum += binomial(n, j) * gen_falling(p.r, p.alpha, j) * gbell(cache, n - j, bp);
            }
            return std::pair{B(n, p.alpha, p.m, p.r), sum};
          },
      .note = "the factor written B_{n-j}(x,a,m) is read with (p,q) = (a,m)",
  });
  return cat;
}

IdentityReport check_bell_identities(const std::vector<std::string>& ids, int n_max,
                                     const ParamGrid& grid) {
  TriangleCache cache;
  const auto catalog = bell_identity_catalog(n_max, grid, cache);
  IdentityReport report;
  for (const IdentitySpec* spec : select_identities(catalog, ids)) {
    if (spec->points.empty()) continue;
    report.identities.push_back(run_identity(*spec, n_max));
  }
  return report;
}

Adjudication adjudicate_bell_egf(int n_max, const ParamGrid& grid) {
  Adjudication adj;
  adj.id = "eq8_bell_egf";
  adj.subject = "printed generating function of B_n(x;alpha,beta,r) (extra e^{rz}, no x)";
  adj.resolution =
      "implemented e_alpha^r(z) exp(x (e_alpha^beta(z) - 1)/beta); the printed form is "
      "compared with B_n(1;alpha,beta,r)";
  TriangleCache cache;
  for (long a : grid.alpha) {
    for (long m : grid.m) {
      for (long r : grid.r) {
        const GStirlingParams p{a, m, r};
        const auto printed = gbell_egf_printed(p, n_max);
        for (int n = 0; n <= n_max; ++n) {
          Integer ref = gbell(cache, n, p).eval(1, 0);
          adj.add({p.to_string() + ",n=" + std::to_string(n), printed[n].get_str(),
                   ref.get_str(), printed[n] == Rational(ref)});
        }
      }
    }
  }
  return adj;
}

}  // namespace dowling
