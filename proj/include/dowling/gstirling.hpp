#pragma once

#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "dowling/exact.hpp"
#include "dowling/report.hpp"

namespace dowling {

/// Parameters (alpha, beta, r) of S(n,k; alpha, beta, r). Any integers except all-zero.
struct GStirlingParams {
  long alpha = 0;
  long beta = 1;
  long r = 0;

  auto operator<=>(const GStirlingParams&) const = default;
  std::string to_string() const;
};

/// S(n,k; alpha, beta, r) for 0 <= k <= n <= n_max, built by the triangular recurrence
///   S(n+1,k) = S(n,k-1) + (k beta - n alpha + r) S(n,k),  S(0,0) = 1.
class GStirlingTriangle {
 public:
  GStirlingTriangle(GStirlingParams params, int n_max);

  const GStirlingParams& params() const { return params_; }
  int n_max() const { return static_cast<int>(rows_.size()) - 1; }
  /// Zero outside 0 <= k <= n; throws std::out_of_range for n > n_max.
  Integer at(int n, int k) const;
  const std::vector<Integer>& row(int n) const { return rows_.at(static_cast<std::size_t>(n)); }

 private:
  GStirlingParams params_;
  std::vector<std::vector<Integer>> rows_;
};

GStirlingTriangle gstirling_table(GStirlingParams params, int n_max);

/// Alternating-sum formula
///   S(n,k) = 1/(beta^k k!) sum_j C(k,j) (-1)^{k-j} (beta j + r | alpha)_n.
/// Requires beta >= 1; throws NonIntegralError if the sum is not divisible.
Integer gstirling_explicit(int n, int k, GStirlingParams params);

/// Memoizes triangles by parameter triple, growing them on demand. Not thread-safe.
class TriangleCache {
 public:
  const GStirlingTriangle& get(GStirlingParams params, int n_max);
  Integer at(GStirlingParams params, int n, int k) { return get(params, n).at(n, k); }

 private:
  std::map<GStirlingParams, GStirlingTriangle> cache_;
};

enum class SpecialKind {
  Stirling2,
  TranslatedWhitney,
  Howard,
  Carlitz,
  RStirling,
  Whitney,
  RWhitney,
  Binomial,
};

/// Free parameters a special case may draw on; unused ones are ignored.
struct SpecialArgs {
  long alpha = 0;
  long beta = 1;
  long r = 0;
};

SpecialKind parse_special_kind(std::string_view name);
std::string to_string(SpecialKind kind);
GStirlingParams special_case_params(SpecialKind kind, SpecialArgs args = {});
Integer special_case(SpecialKind kind, int n, int k, SpecialArgs args = {});

/// Broder's r-Stirling numbers of the second kind S_r(n, k), by their own recurrence.
Integer broder_r_stirling(int n, int k, int r);

/// Both unfair-distribution identities for 0 <= k <= n <= n_max at one parameter point.
/// The left sides use the alternating-sum formula, the right sides the triangle.
IdentityReport check_unfair_identities(int n_max, long alpha, long m, long r);

/// Compares the beta = -1 table entry with Broder's r-Stirling numbers S_r(n+r, k+r).
Adjudication adjudicate_r_stirling_entry(int n_max, const std::vector<long>& r_values);

}  // namespace dowling
