#include "dowling/gstirling.hpp"

#include <algorithm>
#include <stdexcept>

namespace dowling {

std::string GStirlingParams::to_string() const {
  return "alpha=" + std::to_string(alpha) + ",beta=" + std::to_string(beta) +
         ",r=" + std::to_string(r);
}

GStirlingTriangle::GStirlingTriangle(GStirlingParams params, int n_max) : params_(params) {
  if (n_max < 0) throw std::invalid_argument("gstirling_table: n_max must be non-negative");
  if (params.alpha == 0 && params.beta == 0 && params.r == 0) {
    throw std::invalid_argument("gstirling_table: (alpha, beta, r) must not be (0,0,0)");
  }
  rows_.reserve(static_cast<std::size_t>(n_max) + 1);
  rows_.push_back({Integer(1)});
  for (int n = 0; n < n_max; ++n) {
    const auto& prev = rows_.back();
    std::vector<Integer> next(static_cast<std::size_t>(n) + 2);
    for (int k = 0; k <= n + 1; ++k) {
      Integer v = 0;
      if (k >= 1) v += prev[static_cast<std::size_t>(k - 1)];
      if (k <= n) {
        v += Integer(static_cast<long>(k) * params.beta - static_cast<long>(n) * params.alpha +
                     params.r) *
             prev[static_cast<std::size_t>(k)];
      }
      next[static_cast<std::size_t>(k)] = std::move(v);
    }
    rows_.push_back(std::move(next));
  }
}

Integer GStirlingTriangle::at(int n, int k) const {
  if (n < 0 || n > n_max()) {
    throw std::out_of_range("GStirlingTriangle: row " + std::to_string(n) + " not computed");
  }
  if (k < 0 || k > n) return 0;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

GStirlingTriangle gstirling_table(GStirlingParams params, int n_max) {
  return GStirlingTriangle(params, n_max);
}

Integer gstirling_explicit(int n, int k, GStirlingParams params) {
  if (params.beta < 1) {
    throw std::invalid_argument("gstirling_explicit: beta must be >= 1 (got " +
                                std::to_string(params.beta) + ")");
  }
  if (n < 0) throw std::invalid_argument("gstirling_explicit: n must be non-negative");
  if (k < 0 || k > n) return 0;
  Integer sum = 0;
  for (int j = 0; j <= k; ++j) {
    Integer term = binomial(k, j) *
                   gen_falling(Integer(params.beta) * j + params.r, params.alpha, n);
    if ((k - j) % 2 != 0) term = -term;
    sum += term;
  }
  Rational value(sum, ipow(params.beta, static_cast<unsigned long>(k)) * factorial(k));
  value.canonicalize();
  return to_integer(value, "gstirling_explicit(" + std::to_string(n) + "," +
                               std::to_string(k) + "," + params.to_string() + ")");
}

const GStirlingTriangle& TriangleCache::get(GStirlingParams params, int n_max) {
  auto it = cache_.find(params);
  if (it != cache_.end() && it->second.n_max() >= n_max) return it->second;
  int target = std::max(n_max, it == cache_.end() ? 0 : 2 * it->second.n_max());
  auto [pos, inserted] = cache_.insert_or_assign(params, GStirlingTriangle(params, target));
  return pos->second;
}

SpecialKind parse_special_kind(std::string_view name) {
  if (name == "stirling2") return SpecialKind::Stirling2;
  if (name == "translated-whitney") return SpecialKind::TranslatedWhitney;
  if (name == "howard") return SpecialKind::Howard;
  if (name == "carlitz") return SpecialKind::Carlitz;
  if (name == "r-stirling") return SpecialKind::RStirling;
  if (name == "whitney") return SpecialKind::Whitney;
  if (name == "r-whitney") return SpecialKind::RWhitney;
  if (name == "binomial") return SpecialKind::Binomial;
  throw std::invalid_argument("unsupported special case kind: " + std::string(name));
}

std::string to_string(SpecialKind kind) {
  switch (kind) {
    case SpecialKind::Stirling2: return "stirling2";
    case SpecialKind::TranslatedWhitney: return "translated-whitney";
    case SpecialKind::Howard: return "howard";
    case SpecialKind::Carlitz: return "carlitz";
    case SpecialKind::RStirling: return "r-stirling";
    case SpecialKind::Whitney: return "whitney";
    case SpecialKind::RWhitney: return "r-whitney";
    case SpecialKind::Binomial: return "binomial";
  }
  throw std::logic_error("unreachable SpecialKind");
}

GStirlingParams special_case_params(SpecialKind kind, SpecialArgs a) {
  switch (kind) {
    case SpecialKind::Stirling2: return {0, 1, 0};
    case SpecialKind::TranslatedWhitney: return {-a.alpha, 0, 0};
    case SpecialKind::Howard: return {a.alpha, 1, -a.r};
    case SpecialKind::Carlitz: return {a.alpha, 1, 0};
    case SpecialKind::RStirling: return {0, -1, a.r};
    case SpecialKind::Whitney: return {0, a.beta, 1};
    // W_{beta,r}(n,k) counts colored partitions with r distinguished blocks, which
    // the recurrence reproduces with +r (the colored-partition oracle agrees).
    case SpecialKind::RWhitney: return {0, a.beta, a.r};
    case SpecialKind::Binomial: return {0, 0, 1};
  }
  throw std::logic_error("unreachable SpecialKind");
}

Integer special_case(SpecialKind kind, int n, int k, SpecialArgs args) {
  if (n < 0) throw std::invalid_argument("special_case: n must be non-negative");
  return gstirling_table(special_case_params(kind, args), n).at(n, k);
}

Integer broder_r_stirling(int n, int k, int r) {
  if (r < 0) throw std::invalid_argument("broder_r_stirling: r must be non-negative");
  if (n < r || k < r || k > n) return 0;
  // rows indexed from n = r; S_r(r, k) = [k == r]
  std::vector<Integer> row(static_cast<std::size_t>(n) + 1, Integer(0));
  row[static_cast<std::size_t>(r)] = 1;
  for (int cur = r + 1; cur <= n; ++cur) {
    std::vector<Integer> next(row.size(), Integer(0));
    for (int j = r; j <= cur; ++j) {
      Integer v = Integer(j) * row[static_cast<std::size_t>(j)];
      if (j - 1 >= r) v += row[static_cast<std::size_t>(j - 1)];
      next[static_cast<std::size_t>(j)] = v;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

IdentityReport check_unfair_identities(int n_max, long alpha, long m, long r) {
  if (m < 1) throw std::invalid_argument("check_unfair_identities: m must be >= 1");
  if (n_max < 1) throw std::invalid_argument("check_unfair_identities: n_max must be >= 1");
  const GStirlingParams p{alpha, m, r};
  const auto table = gstirling_table(p, n_max);
  const std::string tag = "alpha=" + std::to_string(alpha) + ",m=" + std::to_string(m) +
                          ",r=" + std::to_string(r);

  IdentityResult rec;
  rec.id = "UnfairD";
  rec.statement = "S(n+1,k) = S(n,k-1) + (k*m - n*alpha + r) * S(n,k)";
  IdentityResult conv;
  conv.id = "UnfairD2";
  conv.statement =
      "k*S(n,k) = sum_{j=k-1}^{n-1} C(n,j) * (m-alpha|alpha)_{n-j-1} * S(j,k-1)";

  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      const std::string where = tag + ",k=" + std::to_string(k);
      if (n + 1 <= n_max) {
        Integer lhs = gstirling_explicit(n + 1, k, p);
        Integer rhs = table.at(n, k - 1) + Integer(k * m - n * alpha + r) * table.at(n, k);
        rec.record(n, where, lhs, rhs);
      }
      Integer lhs = Integer(k) * gstirling_explicit(n, k, p);
      Integer rhs = 0;
      for (int j = std::max(k - 1, 0); j <= n - 1; ++j) {
        rhs += binomial(n, j) * gen_falling(m - alpha, alpha, n - j - 1) * table.at(j, k - 1);
      }
      conv.record(n, where, lhs, rhs);
    }
  }
  IdentityReport report;
  report.identities.push_back(std::move(rec));
  report.identities.push_back(std::move(conv));
  return report;
}

Adjudication adjudicate_r_stirling_entry(int n_max, const std::vector<long>& r_values) {
  Adjudication adj;
  adj.id = "r_stirling_entry";
  adj.subject = "special-case table entry S(n,k;0,-1,r) versus r-Stirling numbers S_r(n+r,k+r)";
  adj.resolution =
      "compared the beta=-1 recurrence with Broder's recurrence S_r(n,k) = k S_r(n-1,k) + "
      "S_r(n-1,k-1); the beta=+1 entry S(n,k;0,1,r) is checked alongside";
  for (long r : r_values) {
    if (r < 0) continue;
    const auto neg = gstirling_table({0, -1, r}, n_max);
    const auto pos = gstirling_table({0, 1, r}, n_max);
    for (int n = 0; n <= n_max; ++n) {
      for (int k = 0; k <= n; ++k) {
        Integer ref = broder_r_stirling(n + static_cast<int>(r), k + static_cast<int>(r),
                                        static_cast<int>(r));
        Integer printed = neg.at(n, k);
        adj.add({"n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",r=" +
                     std::to_string(r) + ",beta=+1 gives " + pos.at(n, k).get_str(),
                 printed.get_str(), ref.get_str(), printed == ref});
      }
    }
  }
  return adj;
}

}  // namespace dowling
