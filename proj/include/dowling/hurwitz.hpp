#pragma once

#include <vector>

#include "dowling/exact.hpp"

namespace dowling {

inline constexpr int kDefaultSeriesOrder = 32;

/// Truncated exponential generating function. Coefficient n is the Hurwitz
/// coefficient c_n = n! [z^n] f, so products are binomial convolutions and
/// integer counting sequences stay integral.
class HurwitzSeries {
 public:
  /// The zero series of truncation order `order` (coefficients c_0..c_order).
  explicit HurwitzSeries(int order = kDefaultSeriesOrder);
  HurwitzSeries(int order, std::vector<Rational> coeffs);

  static HurwitzSeries constant(int order, const Rational& c);
  /// e^{a z}: c_n = a^n.
  static HurwitzSeries exponential(int order, const Integer& a);
  /// The series z.
  static HurwitzSeries identity(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  Rational& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  HurwitzSeries& operator+=(const HurwitzSeries& other);
  HurwitzSeries& operator-=(const HurwitzSeries& other);
  HurwitzSeries& operator*=(const Rational& s);
  friend HurwitzSeries operator+(HurwitzSeries a, const HurwitzSeries& b) { return a += b; }
  friend HurwitzSeries operator-(HurwitzSeries a, const HurwitzSeries& b) { return a -= b; }
  friend HurwitzSeries operator*(HurwitzSeries a, const Rational& s) { return a *= s; }
  friend bool operator==(const HurwitzSeries& a, const HurwitzSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Integer view of the coefficients; throws NonIntegralError otherwise.
  std::vector<Integer> integer_coeffs(std::string_view what) const;

 private:
  std::vector<Rational> coeffs_;
};

/// Binomial convolution. Throws std::invalid_argument on order mismatch.
HurwitzSeries hz_mul(const HurwitzSeries& a, const HurwitzSeries& b);

/// exp(a) for a series with zero constant term.
HurwitzSeries hz_exp(const HurwitzSeries& a);

/// Multiplicative inverse for a series with nonzero constant term.
HurwitzSeries hz_reciprocal(const HurwitzSeries& a);

/// a^e by binary powering.
HurwitzSeries hz_pow(const HurwitzSeries& a, unsigned long e);

/// Degenerate exponential e_alpha^r(z) = (1 + alpha z)^{r/alpha}; c_n = (r|alpha)_n.
/// alpha = 0 gives the classical e^{rz}.
HurwitzSeries hz_deg_exp(const Integer& alpha, const Integer& r, int order);

Rational hz_coeff(const HurwitzSeries& a, int n);

/// 1 / (2 - e^z)^{l+1}, solved coefficient by coefficient.
HurwitzSeries hz_bpa(int l, int order);

}  // namespace dowling
