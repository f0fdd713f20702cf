#include "dowling/hurwitz.hpp"

#include <stdexcept>
#include <string>

namespace dowling {

namespace {

void require_same_order(const HurwitzSeries& a, const HurwitzSeries& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("hurwitz: truncation order mismatch (" +
                                std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()) + ")");
  }
}

}  // namespace

HurwitzSeries::HurwitzSeries(int order) {
  if (order < 0) throw std::invalid_argument("hurwitz: negative truncation order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

HurwitzSeries::HurwitzSeries(int order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("hurwitz: negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1, Rational(0));
}

HurwitzSeries HurwitzSeries::constant(int order, const Rational& c) {
  HurwitzSeries s(order);
  s[0] = c;
  return s;
}

HurwitzSeries HurwitzSeries::exponential(int order, const Integer& a) {
  HurwitzSeries s(order);
  Integer p = 1;
  for (int n = 0; n <= order; ++n) {
    s[n] = p;
    p *= a;
  }
  return s;
}

HurwitzSeries HurwitzSeries::identity(int order) {
  HurwitzSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

HurwitzSeries& HurwitzSeries::operator+=(const HurwitzSeries& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

HurwitzSeries& HurwitzSeries::operator-=(const HurwitzSeries& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

HurwitzSeries& HurwitzSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

std::vector<Integer> HurwitzSeries::integer_coeffs(std::string_view what) const {
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(to_integer(c, what));
  return out;
}

HurwitzSeries hz_mul(const HurwitzSeries& a, const HurwitzSeries& b) {
  require_same_order(a, b);
  const int order = a.order();
  HurwitzSeries out(order);
  for (int n = 0; n <= order; ++n) {
    Rational acc = 0;
    for (int k = 0; k <= n; ++k) {
      if (a[k] == 0 || b[n - k] == 0) continue;
      acc += Rational(binomial(n, k)) * a[k] * b[n - k];
    }
    out[n] = acc;
  }
  return out;
}

HurwitzSeries hz_exp(const HurwitzSeries& a) {
  if (a[0] != 0) throw std::invalid_argument("hz_exp: constant term must be zero");
  const int order = a.order();
  HurwitzSeries out(order);
  out[0] = 1;
  // f' = a' f  =>  c_n(f) = sum_{k=1}^{n} C(n-1,k-1) a_k c_{n-k}(f)
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) {
      if (a[k] == 0) continue;
      acc += Rational(binomial(n - 1, k - 1)) * a[k] * out[n - k];
    }
    out[n] = acc;
  }
  return out;
}

HurwitzSeries hz_reciprocal(const HurwitzSeries& a) {
  if (a[0] == 0) throw std::invalid_argument("hz_reciprocal: constant term must be nonzero");
  const int order = a.order();
  HurwitzSeries out(order);
  out[0] = 1 / a[0];
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) {
      if (a[k] == 0) continue;
      acc += Rational(binomial(n, k)) * a[k] * out[n - k];
    }
    out[n] = -acc / a[0];
  }
  return out;
}

HurwitzSeries hz_pow(const HurwitzSeries& a, unsigned long e) {
  HurwitzSeries result = HurwitzSeries::constant(a.order(), 1);
  HurwitzSeries base = a;
  while (e > 0) {
    if (e & 1UL) result = hz_mul(result, base);
    e >>= 1UL;
    if (e > 0) base = hz_mul(base, base);
  }
  return result;
}

HurwitzSeries hz_deg_exp(const Integer& alpha, const Integer& r, int order) {
  HurwitzSeries s(order);
  Integer c = 1;
  for (int n = 0; n <= order; ++n) {
    s[n] = c;
    c *= r - alpha * n;
  }
  return s;
}

Rational hz_coeff(const HurwitzSeries& a, int n) {
  if (n < 0 || n > a.order()) {
    throw std::out_of_range("hz_coeff: index " + std::to_string(n) +
                            " outside truncation order " + std::to_string(a.order()));
  }
  return a[n];
}

HurwitzSeries hz_bpa(int l, int order) {
  if (l < 0) throw std::invalid_argument("hz_bpa: number of bars must be non-negative");
  HurwitzSeries two_minus_exp =
      HurwitzSeries::constant(order, 2) - HurwitzSeries::exponential(order, 1);
  return hz_reciprocal(hz_pow(two_minus_exp, static_cast<unsigned long>(l) + 1));
}

}  // namespace dowling
