#include "dowling/exact.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dowling {

Integer binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer binomial_general(const Integer& top, long k) {
  if (k < 0) return 0;
  Integer num = 1;
  for (long i = 0; i < k; ++i) num *= top - i;
  return num / factorial(k);
}

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer multinomial(long n, std::span<const long> parts) {
  long sum = 0;
  for (long p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    sum += p;
  }
  if (sum != n) throw std::invalid_argument("multinomial: parts must sum to n");
  Integer out = 1;
  long placed = 0;
  for (long p : parts) {
    placed += p;
    out *= binomial(placed, p);
  }
  return out;
}

Integer gen_falling(const Integer& m, const Integer& alpha, long k) {
  if (k < 0) throw std::invalid_argument("gen_falling: k must be non-negative");
  Integer out = 1;
  for (long i = 0; i < k; ++i) out *= m - alpha * i;
  return out;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Integer to_integer(const Rational& value, std::string_view what) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() != 1) {
    throw NonIntegralError(std::string(what) + ": non-integral value " + q.get_str());
  }
  return q.get_num();
}

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 1) throw std::invalid_argument("to_decimal: digits must be positive");
  if (q == 0) return "0";
  Integer a = abs(q.get_num());
  const Integer& b = q.get_den();

  // Find e with 10^e <= a/b < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
  auto scaled_cmp = [&](long exp10) {
    // sign of a - b * 10^exp10
    if (exp10 >= 0) return cmp(a, b * ipow(10, static_cast<unsigned long>(exp10)));
    return cmp(a * ipow(10, static_cast<unsigned long>(-exp10)), b);
  };
  while (scaled_cmp(e) < 0) --e;
  while (scaled_cmp(e + 1) >= 0) ++e;

  long shift = digits - 1 - e;
  Integer num = a;
  Integer den = b;
  if (shift >= 0) {
    num *= ipow(10, static_cast<unsigned long>(shift));
  } else {
    den *= ipow(10, static_cast<unsigned long>(-shift));
  }
  Integer quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * rem >= den) quot += 1;
  if (quot == ipow(10, static_cast<unsigned long>(digits))) {
    quot /= 10;
    ++e;
  }

  std::string mant = quot.get_str();
  std::ostringstream out;
  if (q < 0) out << '-';
  out << mant[0];
  if (mant.size() > 1) out << '.' << mant.substr(1);
  out << 'e' << (e < 0 ? '-' : '+') << std::labs(e);
  return out.str();
}

// ---------------------------------------------------------------------------

BiPoly::BiPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, constant);
}

BiPoly BiPoly::x() { return monomial(1, 0); }
BiPoly BiPoly::lambda() { return monomial(0, 1); }

BiPoly BiPoly::monomial(int x_deg, int l_deg, const Integer& coeff) {
  if (x_deg < 0 || l_deg < 0) throw std::invalid_argument("BiPoly: negative exponent");
  BiPoly p;
  p.add_term({x_deg, l_deg}, coeff);
  return p;
}

void BiPoly::add_term(const Monomial& mono, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer BiPoly::coeff(int x_deg, int l_deg) const {
  auto it = terms_.find({x_deg, l_deg});
  return it == terms_.end() ? Integer(0) : it->second;
}

int BiPoly::total_degree() const {
  int d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.x_deg + mono.l_deg);
  return d;
}

int BiPoly::x_degree() const {
  int d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.x_deg);
  return d;
}

int BiPoly::l_degree() const {
  int d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.l_deg);
  return d;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term({ma.x_deg + mb.x_deg, ma.l_deg + mb.l_deg}, ca * cb);
    }
  }
  return out;
}

BiPoly& BiPoly::operator*=(const BiPoly& other) { return *this = *this * other; }

BiPoly& BiPoly::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= scalar;
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& [mono, c] : out.terms_) c = -c;
  return out;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly result{Integer(1)};
  BiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Integer BiPoly::eval(const Integer& x0, const Integer& l0) const {
  Integer out = 0;
  for (const auto& [mono, c] : terms_) {
    out += c * ipow(x0, static_cast<unsigned long>(mono.x_deg)) *
           ipow(l0, static_cast<unsigned long>(mono.l_deg));
  }
  return out;
}

BiPoly BiPoly::eval_lambda(const Integer& l0) const {
  BiPoly out;
  for (const auto& [mono, c] : terms_) {
    out.add_term({mono.x_deg, 0}, c * ipow(l0, static_cast<unsigned long>(mono.l_deg)));
  }
  return out;
}

BiPoly BiPoly::x_times_lambda() const {
  BiPoly out;
  for (const auto& [mono, c] : terms_) out.add_term({mono.x_deg, mono.l_deg + mono.x_deg}, c);
  return out;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    bool constant = mono.x_deg == 0 && mono.l_deg == 0;
    if (mag != 1 || constant) factors.push_back(mag.get_str());
    if (mono.x_deg == 1) factors.emplace_back("x");
    if (mono.x_deg > 1) factors.push_back("x^" + std::to_string(mono.x_deg));
    if (mono.l_deg == 1) factors.emplace_back("l");
    if (mono.l_deg > 1) factors.push_back("l^" + std::to_string(mono.l_deg));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out << '*';
      out << factors[i];
    }
  }
  return out.str();
}

BiPoly bipoly_add(const BiPoly& a, const BiPoly& b) { return a + b; }
BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b) { return a * b; }
BiPoly bipoly_scale(const BiPoly& a, const Integer& s) { return a * s; }
Integer bipoly_eval(const BiPoly& a, const Integer& x0, const Integer& l0) {
  return a.eval(x0, l0);
}

}  // namespace dowling
