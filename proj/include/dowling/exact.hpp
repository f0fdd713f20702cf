#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace dowling {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a computation that must be exact would have to round.
class NonIntegralError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// ---------------------------------------------------------------------------
// Combinatorial primitives
// ---------------------------------------------------------------------------

/// C(n, k) for n >= 0; zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// Binomial with an arbitrary integer upper argument:
/// top (top-1) ... (top-k+1) / k!, and 0 for k < 0.
Integer binomial_general(const Integer& top, long k);

/// n! / prod(parts_i!). Throws std::invalid_argument when the parts do not sum to n.
Integer multinomial(long n, std::span<const long> parts);

Integer factorial(long n);

/// Generalized falling factorial (m|alpha)_k = prod_{i=0}^{k-1} (m - i*alpha).
/// (m|0)_k = m^k, (m|1)_k is the ordinary falling factorial.
Integer gen_falling(const Integer& m, const Integer& alpha, long k);

Integer ipow(const Integer& base, unsigned long exp);

/// Converts a rational to an Integer, throwing NonIntegralError when the denominator is not 1.
Integer to_integer(const Rational& q, std::string_view what);

/// Exact decimal rendering with `digits` significant digits (round half away from zero).
std::string to_decimal(const Rational& q, int digits = 40);

// ---------------------------------------------------------------------------
// BiPoly: sparse bivariate polynomial in (x, lambda) over the integers
// ---------------------------------------------------------------------------

struct Monomial {
  int x_deg = 0;
  int l_deg = 0;
  auto operator<=>(const Monomial&) const = default;
};

class BiPoly {
 public:
  using Terms = std::map<Monomial, Integer>;

  BiPoly() = default;
  BiPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)

  static BiPoly x();
  static BiPoly lambda();
  static BiPoly monomial(int x_deg, int l_deg, const Integer& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(int x_deg, int l_deg) const;
  int total_degree() const;
  int x_degree() const;
  int l_degree() const;

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const BiPoly& other);
  BiPoly& operator*=(const Integer& scalar);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Integer& s) { return a *= s; }
  friend BiPoly operator*(const Integer& s, BiPoly a) { return a *= s; }
  BiPoly operator-() const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  BiPoly pow(unsigned e) const;

  Integer eval(const Integer& x0, const Integer& l0) const;
  /// Substitutes lambda only; the result has lambda-degree 0.
  BiPoly eval_lambda(const Integer& l0) const;
  /// Replaces x by x*lambda (x^i l^j -> x^i l^{i+j}).
  BiPoly x_times_lambda() const;

  /// Canonical ASCII rendering: terms by (x-degree, lambda-degree) descending,
  /// lambda spelled "l", e.g. "x^2*l^2 + 3*x*l + 2".
  std::string to_string() const;

 private:
  void add_term(const Monomial& mono, const Integer& c);
  Terms terms_;
};

BiPoly bipoly_add(const BiPoly& a, const BiPoly& b);
BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b);
BiPoly bipoly_scale(const BiPoly& a, const Integer& s);
Integer bipoly_eval(const BiPoly& a, const Integer& x0, const Integer& l0);

}  // namespace dowling
