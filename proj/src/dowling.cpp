#include "dowling/dowling.hpp"

#include <functional>
#include <stdexcept>

#include "dowling/gbell.hpp"

namespace dowling {

std::string DowlingParams::to_string() const {
  return "m=" + std::to_string(m) + ",r=" + std::to_string(r) + ",alpha=" + std::to_string(alpha);
}

BiPoly dowling(TriangleCache& cache, int n, long m, long r, long alpha) {
  const auto& tri = cache.get({alpha, m, r}, n);
  BiPoly out;
  for (int k = 0; k <= n; ++k) out += BiPoly::monomial(k, k, tri.at(n, k));
  return out;
}

DowlingValue dowling_poly(int n, DowlingParams params) {
  if (n < 0) throw std::invalid_argument("dowling_poly: n must be non-negative");
  if (params.m < 1) throw std::invalid_argument("dowling_poly: m must be >= 1");
  if (params.r < 0) throw std::invalid_argument("dowling_poly: r must be >= 0");
  if (params.alpha < 0) throw std::invalid_argument("dowling_poly: alpha must be >= 0");
  TriangleCache cache;
  return {n, params, dowling(cache, n, params.m, params.r, params.alpha)};
}

HurwitzSeries dowling_egf(DowlingParams p, const Integer& xl, int order) {
  if (p.m == 0) throw std::invalid_argument("dowling_egf: m must be nonzero");
  HurwitzSeries inner = hz_deg_exp(p.alpha, p.m, order) - HurwitzSeries::constant(order, 1);
  inner *= Rational(xl, p.m);
  return hz_mul(hz_deg_exp(p.alpha, p.r, order), hz_exp(inner));
}

std::vector<Integer> dowling_via_egf(int n_max, DowlingParams params, long x0, long l0) {
  if (n_max < 0) throw std::invalid_argument("dowling_via_egf: n_max must be non-negative");
  return dowling_egf(params, Integer(x0) * l0, n_max)
      .integer_coeffs("dowling_via_egf(" + params.to_string() + ")");
}

namespace {

const BiPoly kX = BiPoly::x();
const BiPoly kL = BiPoly::lambda();
const BiPoly kXL = kX * kL;

BiPoly lambda_pow(long e) { return BiPoly::monomial(0, static_cast<int>(e)); }

template <typename Visit>
void for_each_weak_composition(int total, int parts, std::vector<long>& sizes, int idx,
                               Visit&& visit) {
  if (idx == parts - 1) {
    sizes[static_cast<std::size_t>(idx)] = total;
    visit(sizes);
    return;
  }
  for (int s = 0; s <= total; ++s) {
    sizes[static_cast<std::size_t>(idx)] = s;
    for_each_weak_composition(total - s, parts, sizes, idx + 1, visit);
  }
}

// Complete homogeneous symmetric polynomial h_d(r, r+m, ..., r+km) by listing every
// weak composition e_0 + ... + e_k = d.
Integer complete_homogeneous(int d, long m, long r, int k) {
  Integer total = 0;
  std::vector<long> sizes(static_cast<std::size_t>(k) + 1, 0);
  for_each_weak_composition(d, k + 1, sizes, 0, [&](const std::vector<long>& e) {
    Integer term = 1;
    for (std::size_t j = 0; j < e.size(); ++j) {
      term *= ipow(Integer(r) + Integer(m) * static_cast<long>(j),
                   static_cast<unsigned long>(e[j]));
    }
    total += term;
  });
  return total;
}

}  // namespace

std::vector<IdentitySpec> dowling_identity_catalog(const ParamGrid& grid, TriangleCache& cache) {
  using Sides = std::pair<BiPoly, BiPoly>;
  auto D = [&cache](int n, long m, long r, long alpha = 0) {
    return dowling(cache, n, m, r, alpha);
  };
  auto B = [&cache](int n, GStirlingParams p) { return gbell(cache, n, p); };

  std::vector<GridPoint> nondeg;
  std::vector<GridPoint> with_s;
  std::vector<GridPoint> with_lambda;
  std::vector<GridPoint> with_x_lambda;
  std::vector<GridPoint> deg;
  if (!grid.alpha.empty()) {
    for (long m : grid.m) {
      for (long r : grid.r) {
        nondeg.push_back({.m = m, .r = r});
        for (long s = 0; s <= r; ++s) with_s.push_back({.m = m, .r = r, .s = s, .uses_s = true});
        for (long l : grid.lambda) {
          if (l >= 1) {
            with_lambda.push_back({.m = m, .r = r, .lambda = l, .uses_lambda = true});
          }
        }
        for (long x : grid.x) {
          for (long l : grid.lambda) {
            with_x_lambda.push_back(
                {.m = m, .r = r, .lambda = l, .x = x, .uses_lambda = true, .uses_x = true});
          }
        }
      }
    }
  }
  for (long a : grid.alpha) {
    for (long m : grid.m) {
      for (long r : grid.r) deg.push_back({.alpha = a, .m = m, .r = r});
    }
  }

  std::vector<IdentitySpec> cat;

  auto first_order_recurrence = [D](long lead_lambda_power) {
    return [D, lead_lambda_power](int n, const GridPoint& p, const Binding&) {
      BiPoly sum;
      for (int j = 0; j <= n; ++j) {
        sum += binomial(n, j) * ipow(p.m, static_cast<unsigned long>(n - j)) * D(j, p.m, p.r);
      }
      return Sides{D(n + 1, p.m, p.r),
                   p.r * lambda_pow(lead_lambda_power) * D(n, p.m, p.r) + kXL * sum};
    };
  };

  cat.push_back({
      .id = "D1",
      .statement = "D(n+1) = r D(n) + x l sum_i C(n,i) m^i D(n-i)",
      .free_lambda = true,
      .points = nondeg,
      .sides =
          [D](int n, const GridPoint& p, const Binding&) {
            BiPoly sum;
            for (int i = 0; i <= n; ++i) {
              sum += binomial(n, i) * ipow(p.m, static_cast<unsigned long>(i)) *
                     D(n - i, p.m, p.r);
            }
            return Sides{D(n + 1, p.m, p.r), p.r * D(n, p.m, p.r) + kXL * sum};
          },
  });

  cat.push_back({
      .id = "D2",
      .statement = "D_{m,r}(n+1) = r D_{m,r}(n) + x l D_{m,m+r}(n)",
      .free_lambda = true,
      .points = nondeg,
      .sides =
          [D](int n, const GridPoint& p, const Binding&) {
            return Sides{D(n + 1, p.m, p.r),
                         p.r * D(n, p.m, p.r) + kXL * D(n, p.m, p.m + p.r)};
          },
  });

  cat.push_back({
      .id = "D3",
      .statement = "D_{m,r}(n+1) = r D_{m,r}(n) + l x sum_i C(n,i) (m+r)^i D_{m,0}(n-i)",
      .free_lambda = true,
      .points = nondeg,
      .sides =
          [D](int n, const GridPoint& p, const Binding&) {
            BiPoly sum;
            for (int i = 0; i <= n; ++i) {
              sum += binomial(n, i) * ipow(p.m + p.r, static_cast<unsigned long>(i)) *
                     D(n - i, p.m, 0);
            }
            return Sides{D(n + 1, p.m, p.r), p.r * D(n, p.m, p.r) + kXL * sum};
          },
  });

  cat.push_back({
      .id = "D4",
      .statement = "D(n) = sum_{e_1+...+e_{l+1}=n} multinomial(n; e) r^{e_1} "
                   "B_{e_2}(0,m,x) ... B_{e_{l+1}}(0,m,x), lambda = l a positive integer",
      .points = with_lambda,
      .candidates = two_parameter_bindings(),
      .frozen_binding = "B(x;alpha=p,beta=q,r=0)",
      .sides =
          [D, B](int n, const GridPoint& p, const Binding& b) {
            const GStirlingParams bp = b.map(0, p.m);
            const int parts = static_cast<int>(p.lambda) + 1;
            std::vector<BiPoly> bell(static_cast<std::size_t>(n) + 1);
            for (int e = 0; e <= n; ++e) bell[static_cast<std::size_t>(e)] = B(e, bp);
            BiPoly rhs;
            std::vector<long> sizes(static_cast<std::size_t>(parts), 0);
            for_each_weak_composition(n, parts, sizes, 0, [&](const std::vector<long>& e) {
              BiPoly term{multinomial(n, e) * ipow(p.r, static_cast<unsigned long>(e[0]))};
              for (std::size_t j = 1; j < e.size(); ++j) {
                term *= bell[static_cast<std::size_t>(e[j])];
              }
              rhs += term;
            });
            return Sides{D(n, p.m, p.r).eval_lambda(p.lambda), rhs};
          },
      .note = "the factor written B_e(0,m,x) is read with (p,q) = (0,m)",
  });

  cat.push_back({
      .id = "D5",
      .statement = "D(n) = sum_i C(n,i) B_i(0,m,0,x) l^i r^{n-i}",
      .free_lambda = true,
      .points = nondeg,
      .candidates = two_parameter_bindings(),
      .frozen_binding = "B(x;alpha=p,beta=q,r=0)",
      .sides =
          [D, B](int n, const GridPoint& p, const Binding& b) {
            const GStirlingParams bp = b.map(0, p.m);
            BiPoly rhs;
            for (int i = 0; i <= n; ++i) {
              rhs += binomial(n, i) * ipow(p.r, static_cast<unsigned long>(n - i)) *
                     lambda_pow(i) * B(i, bp);
            }
            return Sides{D(n, p.m, p.r), rhs};
          },
      .corrected_statement = "D(n) = sum_i C(n,i) B_i(x l;0,m,0) r^{n-i}",
      .corrected_sides =
          [D, B](int n, const GridPoint& p, const Binding&) {
            BiPoly rhs;
            for (int i = 0; i <= n; ++i) {
              rhs += binomial(n, i) * ipow(p.r, static_cast<unsigned long>(n - i)) *
                     B(i, {0, p.m, 0}).x_times_lambda();
            }
            return Sides{D(n, p.m, p.r), rhs};
          },
      .note = "the factor written B_i(0,m,0,x) is read with (p,q) = (0,m)",
  });

  cat.push_back({
      .id = "D6",
      .statement = "D(n) = sum_i (l x)^i S(n,i;0,m,r), S by the alternating-sum formula",
      .free_lambda = true,
      .points = nondeg,
      .sides =
          [D](int n, const GridPoint& p, const Binding&) {
            BiPoly rhs;
            for (int i = 0; i <= n; ++i) {
              rhs += BiPoly::monomial(i, i, gstirling_explicit(n, i, {0, p.m, p.r}));
            }
            return Sides{D(n, p.m, p.r), rhs};
          },
  });

  cat.push_back({
      .id = "D7",
      .statement = "D(n) at (x0, l0) = n! [z^n] exp(r z + x0 l0 (e^{m z} - 1)/m)",
      .points = with_x_lambda,
      .sides =
          [D](int n, const GridPoint& p, const Binding&) {
            Integer lhs = D(n, p.m, p.r).eval(p.x, p.lambda);
            Integer rhs = dowling_via_egf(n, {p.m, p.r, 0}, p.x, p.lambda).back();
            return Sides{BiPoly(lhs), BiPoly(rhs)};
          },
  });

  cat.push_back({
      .id = "D8",
      .statement = "D_{m,r}(n) = sum_j C(n,j) l^{n-j} (r-s)^{n-j} D_{m,s}(j), 0 <= s <= r",
      .free_lambda = true,
      .points = with_s,
      .sides =
          [D](int n, const GridPoint& p, const Binding&) {
            BiPoly rhs;
            for (int j = 0; j <= n; ++j) {
              rhs += binomial(n, j) * ipow(p.r - p.s, static_cast<unsigned long>(n - j)) *
                     lambda_pow(n - j) * D(j, p.m, p.s);
            }
            return Sides{D(n, p.m, p.r), rhs};
          },
      .corrected_statement = "D_{m,r}(n) = sum_j C(n,j) (r-s)^{n-j} D_{m,s}(j)",
      .corrected_sides =
          [D](int n, const GridPoint& p, const Binding&) {
            BiPoly rhs;
            for (int j = 0; j <= n; ++j) {
              rhs += binomial(n, j) * ipow(p.r - p.s, static_cast<unsigned long>(n - j)) *
                     D(j, p.m, p.s);
            }
            return Sides{D(n, p.m, p.r), rhs};
          },
  });

  cat.push_back({
      .id = "D9",
      .statement = "D(n+1) = r l D(n) + x l sum_j C(n,j) D(j) m^{n-j}",
      .flagged = true,
      .free_lambda = true,
      .points = nondeg,
      .sides = first_order_recurrence(1),
      .corrected_statement = "D(n+1) = r D(n) + x l sum_j C(n,j) D(j) m^{n-j}",
      .corrected_sides = first_order_recurrence(0),
      .note = "verdict cross-referenced against D1 in the d9 adjudication",
  });

  auto d10 = [&cache, D](bool corrected) {
    return [&cache, D, corrected](int n, const GridPoint& p, const Binding&) {
      BiPoly rhs;
      for (int i = 0; i <= n; ++i) {
        Integer inner = 0;
        for (int s = i; s <= n; ++s) {
          const long r_exp = corrected ? n - s : n - i;
          inner += binomial(n, s) * ipow(p.r, static_cast<unsigned long>(r_exp)) *
                   ipow(p.m, static_cast<unsigned long>(s - i)) * cache.at({0, 1, 0}, s, i);
        }
        rhs += BiPoly::monomial(i, corrected ? i : 0, inner);
      }
      return Sides{D(n, p.m, p.r), rhs};
    };
  };
  cat.push_back({
      .id = "D10",
      .statement = "D(n) = sum_i [sum_{s=i}^{n} C(n,s) r^{n-i} m^{s-i} S(s,i)] x^i",
      .free_lambda = true,
      .points = nondeg,
      .sides = d10(false),
      .corrected_statement = "D(n) = sum_i [sum_{s=i}^{n} C(n,s) r^{n-s} m^{s-i} S(s,i)] (x l)^i",
      .corrected_sides = d10(true),
  });

  auto d11 = [D](bool corrected) {
    return [D, corrected](int n, const GridPoint& p, const Binding&) {
      BiPoly rhs;
      for (int k = 0; k <= n; ++k) {
        rhs += BiPoly::monomial(k, corrected ? k : 0, complete_homogeneous(n - k, p.m, p.r, k));
      }
      return Sides{D(n, p.m, p.r), rhs};
    };
  };
  cat.push_back({
      .id = "D11",
      .statement = "D(n) = sum_k [sum_{e_0+...+e_k=n-k} r^{e_0} (r+m)^{e_1} ... (r+km)^{e_k}] x^k",
      .free_lambda = true,
      .points = nondeg,
      .sides = d11(false),
      .corrected_statement = "same inner sum with (x l)^k in place of x^k",
      .corrected_sides = d11(true),
  });

  auto g1 = [D](bool corrected) {
    return [D, corrected](int n, const GridPoint& p, const Binding&) {
      const long a = p.alpha;
      BiPoly second = corrected ? D(n, p.m, p.m + p.r - a, a) : D(n, p.m + p.r - a, p.r, a);
      return Sides{D(n + 1, p.m, p.r, a), p.r * D(n, p.m, p.r - a, a) + kXL * second};
    };
  };
  cat.push_back({
      .id = "G1",
      .statement = "D_{m,r}(n+1;a) = r D_{m,r-a}(n;a) + x l D_{m+r-a,r}(n;a)",
      .free_lambda = true,
      .points = deg,
      .sides = g1(false),
      .corrected_statement = "D_{m,r}(n+1;a) = r D_{m,r-a}(n;a) + x l D_{m,m+r-a}(n;a)",
      .corrected_sides = g1(true),
  });

  cat.push_back({
      .id = "G2",
      .statement = "D_{m,r}(n+1;a) = r D_{m,r-a}(n;a) + x l sum_i C(n,i) (m+r|a)_i "
                   "B_{n-i}(a,m,0,x)",
      .free_lambda = true,
      .points = deg,
      .candidates = two_parameter_bindings(),
      .frozen_binding = "B(x;alpha=p,beta=q,r=0)",
      .sides =
          [D, B](int n, const GridPoint& p, const Binding& b) {
            const long a = p.alpha;
            const GStirlingParams bp = b.map(a, p.m);
            BiPoly sum;
            for (int i = 0; i <= n; ++i) {
              sum += binomial(n, i) * gen_falling(p.m + p.r, a, i) * B(n - i, bp);
            }
            return Sides{D(n + 1, p.m, p.r, a), p.r * D(n, p.m, p.r - a, a) + kXL * sum};
          },
      .corrected_statement = "(m+r-a|a)_i in place of (m+r|a)_i and B_{n-i}(x l;a,m,0)",
      .corrected_sides =
          [D, B](int n, const GridPoint& p, const Binding&) {
            const long a = p.alpha;
            BiPoly sum;
            for (int i = 0; i <= n; ++i) {
              sum += binomial(n, i) * gen_falling(p.m + p.r - a, a, i) *
                     B(n - i, {a, p.m, 0}).x_times_lambda();
            }
            return Sides{D(n + 1, p.m, p.r, a), p.r * D(n, p.m, p.r - a, a) + kXL * sum};
          },
      .note = "the factor written B_{n-i}(a,m,0,x) is read with (p,q) = (a,m)",
  });

  cat.push_back({
      .id = "G3",
      .statement = "D_{m,r}(n;a) = sum_i C(n,i) l^i B_i(a,m,0,x) (r|a)_{n-i}",
      .free_lambda = true,
      .points = deg,
      .candidates = two_parameter_bindings(),
      .frozen_binding = "B(x;alpha=p,beta=q,r=0)",
      .sides =
          [D, B](int n, const GridPoint& p, const Binding& b) {
            const long a = p.alpha;
            const GStirlingParams bp = b.map(a, p.m);
            BiPoly rhs;
            for (int i = 0; i <= n; ++i) {
              rhs += binomial(n, i) * gen_falling(p.r, a, n - i) * lambda_pow(i) * B(i, bp);
            }
            return Sides{D(n, p.m, p.r, a), rhs};
          },
      .corrected_statement = "D_{m,r}(n;a) = sum_i C(n,i) B_i(x l;a,m,0) (r|a)_{n-i}",
      .corrected_sides =
          [D, B](int n, const GridPoint& p, const Binding&) {
            const long a = p.alpha;
            BiPoly rhs;
            for (int i = 0; i <= n; ++i) {
              rhs += binomial(n, i) * gen_falling(p.r, a, n - i) *
                     B(i, {a, p.m, 0}).x_times_lambda();
            }
            return Sides{D(n, p.m, p.r, a), rhs};
          },
      .note = "the unbound index in the printed (r|a)_{n-k} is read as i; the factor written "
              "B_i(a,m,0,x) is read with (p,q) = (a,m)",
  });

  return cat;
}

IdentityReport check_dowling_identities(const std::vector<std::string>& ids, int n_max,
                                        const ParamGrid& grid) {
  TriangleCache cache;
  const auto catalog = dowling_identity_catalog(grid, cache);
  IdentityReport report;
  for (const IdentitySpec* spec : select_identities(catalog, ids)) {
    if (spec->points.empty()) continue;
    report.identities.push_back(run_identity(*spec, n_max));

    if (spec->id != "D9") continue;
    const IdentitySpec* d1 = select_identities(catalog, {"D1"}).front();
    Adjudication adj;
    adj.id = "d9";
    adj.subject = "leading term r*l*D(n) of D9 versus r*D(n) in D1 and the generating function";
    adj.resolution =
        "D9's right side is compared with D1's at every instance; D9 is reported as "
        "observed and its verdict must coincide with agreement with D1";
    bool consistent = true;
    long holds = 0;
    for (const auto& point : spec->points) {
      for (int n = 0; n <= n_max; ++n) {
        auto [lhs9, rhs9] = spec->sides(n, point, Binding{});
        auto [lhs1, rhs1] = d1->sides(n, point, Binding{});
        const bool d9_holds = lhs9 == rhs9;
        const bool matches_d1 = rhs9 == rhs1;
        if (d9_holds != matches_d1 || lhs1 != rhs1) consistent = false;
        if (d9_holds) ++holds;
        adj.add({point.label() + ",n=" + std::to_string(n), rhs9.to_string(), rhs1.to_string(),
                 d9_holds});
      }
    }
    adj.facts.emplace_back("grid_consistent_with_D1", consistent ? "true" : "false");
    adj.facts.emplace_back("instances_holding", std::to_string(holds));
    report.adjudications.push_back(std::move(adj));
  }
  return report;
}

}  // namespace dowling
