#include <doctest.h>

#include <random>

#include "dowling/exact.hpp"

using namespace dowling;

namespace {

BiPoly random_poly(std::mt19937& rng, int max_total) {
  std::uniform_int_distribution<int> deg(0, max_total);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> count(0, 6);
  BiPoly p;
  for (int t = count(rng); t > 0; --t) {
    const int i = deg(rng);
    const int j = std::uniform_int_distribution<int>(0, max_total - i)(rng);
    p += BiPoly::monomial(i, j, coef(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("binomial small values and range") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(4, 6) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial satisfies Pascal up to 50") {
  for (long n = 1; n <= 50; ++n) {
    for (long k = 1; k <= n; ++k) {
      REQUIRE(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("binomial_general handles negative tops") {
  CHECK(binomial_general(-1, 0) == 1);
  CHECK(binomial_general(-1, 3) == -1);  // (-1)(-2)(-3)/6
  CHECK(binomial_general(0, 2) == 0);
  CHECK(binomial_general(6, 2) == binomial(6, 2));
  CHECK(binomial_general(6, -1) == 0);
}

TEST_CASE("multinomial") {
  const std::vector<long> ones{1, 1, 1}, whole{4}, halves{2, 2}, bad{1, 1};
  CHECK(multinomial(3, ones) == 6);
  CHECK(multinomial(4, whole) == 1);
  CHECK(multinomial(4, halves) == 6);
  CHECK_THROWS_AS(multinomial(3, bad), std::invalid_argument);
}

TEST_CASE("generalized falling factorial") {
  CHECK(gen_falling(3, 1, 3) == 6);
  CHECK(gen_falling(5, 0, 3) == 125);
  CHECK(gen_falling(7, 3, 0) == 1);
  CHECK(gen_falling(2, 2, 2) == 0);

  std::mt19937 rng(20240611);
  std::uniform_int_distribution<long> val(-20, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const Integer m = val(rng), a = val(rng);
    const long k = std::uniform_int_distribution<long>(0, 10)(rng);
    REQUIRE(gen_falling(m, a, k + 1) == gen_falling(m, a, k) * (m - k * a));
  }
}

TEST_CASE("factorial and ipow") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(ipow(3, 0) == 1);
  CHECK(ipow(-2, 5) == -32);
  CHECK(factorial(30).get_str() == "265252859812191058636308480000000");
}

TEST_CASE("to_integer refuses to round") {
  CHECK(to_integer(Rational(6, 3), "six thirds") == 2);
  CHECK_THROWS_AS(to_integer(Rational(1, 3), "a third"), NonIntegralError);
}

TEST_CASE("to_decimal renders 40 significant digits") {
  CHECK(to_decimal(0) == "0");
  CHECK(to_decimal(Rational(1, 3)) == "3.333333333333333333333333333333333333333e-1");
  CHECK(to_decimal(Rational(-2, 3)) == "-6.666666666666666666666666666666666666667e-1");
  CHECK(to_decimal(Rational(1000)) == "1.000000000000000000000000000000000000000e+3");
  CHECK(to_decimal(Rational(5, 4), 2) == "1.3e+0");
}

TEST_CASE("BiPoly basic operations") {
  const BiPoly x = BiPoly::x(), l = BiPoly::lambda();
  CHECK((x * l + BiPoly(3)).eval(2, 5) == 13);
  CHECK(bipoly_mul(x, l) == BiPoly::monomial(1, 1));
  const BiPoly p = BiPoly::monomial(2, 1, 4) - x;
  CHECK(bipoly_add(p, BiPoly()) == p);
  CHECK(bipoly_scale(p, 0).is_zero());
  CHECK(bipoly_eval(p, 3, 2) == 4 * 9 * 2 - 3);
  CHECK((p - p).is_zero());
  CHECK(p.coeff(2, 1) == 4);
  CHECK(p.coeff(5, 5) == 0);
  CHECK(p.total_degree() == 3);
  CHECK(p.x_degree() == 2);
  CHECK(p.l_degree() == 1);
  CHECK(x.pow(0) == BiPoly(1));
  CHECK((x + l).pow(2) == x * x + BiPoly(2) * x * l + l * l);
}

TEST_CASE("BiPoly canonical rendering") {
  const BiPoly x = BiPoly::x(), l = BiPoly::lambda();
  CHECK(BiPoly().to_string() == "0");
  CHECK((x * x * l * l + Integer(3) * x * l - BiPoly(2)).to_string() == "x^2*l^2 + 3*x*l - 2");
  CHECK((BiPoly(2) + x * l).to_string() == "x*l + 2");
  CHECK((-x).to_string() == "-x");
  CHECK((x * l.pow(3) + x.pow(2)).to_string() == "x^2 + x*l^3");
}

TEST_CASE("BiPoly x_times_lambda and eval_lambda") {
  const BiPoly x = BiPoly::x(), l = BiPoly::lambda();
  const BiPoly p = x * x + Integer(3) * x + BiPoly(1);
  CHECK(p.x_times_lambda() == x * x * l * l + Integer(3) * x * l + BiPoly(1));
  CHECK((x * l + l).eval_lambda(2) == BiPoly(2) * x + BiPoly(2));
}

TEST_CASE("BiPoly ring laws on random polynomials") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const BiPoly a = random_poly(rng, 8), b = random_poly(rng, 8), c = random_poly(rng, 8);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> pt(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const BiPoly a = random_poly(rng, 8), b = random_poly(rng, 8);
    const Integer x0 = pt(rng), l0 = pt(rng);
    REQUIRE((a * b).eval(x0, l0) == a.eval(x0, l0) * b.eval(x0, l0));
    REQUIRE((a + b).eval(x0, l0) == a.eval(x0, l0) + b.eval(x0, l0));
  }
}
