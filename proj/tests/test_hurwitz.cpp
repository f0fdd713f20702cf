#include <doctest.h>

#include <random>

#include "dowling/hurwitz.hpp"
#include "dowling/oracle.hpp"

using namespace dowling;

namespace {

HurwitzSeries random_series(std::mt19937& rng, int order, bool zero_constant) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  HurwitzSeries s(order);
  for (int n = zero_constant ? 1 : 0; n <= order; ++n) {
    s[n] = Rational(num(rng), den(rng));
    s[n].canonicalize();
  }
  return s;
}

Integer bell_number(int n) {
  Integer total = 0;
  for (int k = 0; k <= n; ++k) total += oracle::count_set_partitions(n, k);
  return total;
}

}  // namespace

TEST_CASE("binomial convolution") {
  const int N = 12;
  const auto e1 = HurwitzSeries::exponential(N, 1);
  const auto prod = hz_mul(e1, e1);
  for (int n = 0; n <= N; ++n) CHECK(prod[n] == Rational(ipow(2, n)));

  const auto one = HurwitzSeries::constant(N, 1);
  CHECK(hz_mul(e1, one) == e1);

  const auto cancel = hz_mul(e1, HurwitzSeries::exponential(N, -1));
  CHECK(cancel == one);

  CHECK_THROWS_AS(hz_mul(HurwitzSeries(3), HurwitzSeries(4)), std::invalid_argument);
}

TEST_CASE("hz_exp") {
  const int N = 10;
  const auto ez = hz_exp(HurwitzSeries::identity(N));
  for (int n = 0; n <= N; ++n) CHECK(ez[n] == 1);
  CHECK(hz_exp(HurwitzSeries(N)) == HurwitzSeries::constant(N, 1));
  CHECK_THROWS_AS(hz_exp(HurwitzSeries::constant(N, 1)), std::invalid_argument);
}

TEST_CASE("exp(e^z - 1) counts set partitions") {
  const int N = 10;
  const auto bell = hz_exp(HurwitzSeries::exponential(N, 1) - HurwitzSeries::constant(N, 1));
  for (int n = 0; n <= N; ++n) CHECK(bell[n] == Rational(bell_number(n)));
}

TEST_CASE("exp turns sums into products") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    const int N = std::uniform_int_distribution<int>(1, 16)(rng);
    const auto a = random_series(rng, N, true), b = random_series(rng, N, true);
    REQUIRE(hz_exp(a + b) == hz_mul(hz_exp(a), hz_exp(b)));
  }
}

TEST_CASE("reciprocal and powers") {
  std::mt19937 rng(3);
  const int N = 10;
  for (int trial = 0; trial < 5; ++trial) {
    auto a = random_series(rng, N, false);
    a[0] = Rational(trial + 1);
    REQUIRE(hz_mul(a, hz_reciprocal(a)) == HurwitzSeries::constant(N, 1));
    REQUIRE(hz_pow(a, 5) == hz_mul(hz_mul(hz_mul(a, a), hz_mul(a, a)), a));
  }
  CHECK(hz_pow(HurwitzSeries::identity(N), 0) == HurwitzSeries::constant(N, 1));
  CHECK_THROWS(hz_reciprocal(HurwitzSeries(N)));
}

TEST_CASE("degenerate exponential coefficients") {
  const auto a = hz_deg_exp(1, 3, 6);
  const std::vector<int> falling{1, 3, 6, 6, 0, 0, 0};
  for (int n = 0; n <= 6; ++n) CHECK(a[n] == falling[static_cast<std::size_t>(n)]);

  const auto b = hz_deg_exp(0, 2, 8);
  for (int n = 0; n <= 8; ++n) CHECK(b[n] == Rational(ipow(2, n)));

  const auto c = hz_deg_exp(2, 2, 3);
  CHECK(c[0] == 1);
  CHECK(c[1] == 2);
  CHECK(c[2] == 0);
}

TEST_CASE("degenerate exponential is multiplicative in r") {
  const int N = 10;
  for (long alpha : {1, 2}) {
    for (long r = 0; r <= 4; ++r) {
      for (long s = 0; s <= 4; ++s) {
        REQUIRE(hz_mul(hz_deg_exp(alpha, r, N), hz_deg_exp(alpha, s, N)) ==
                hz_deg_exp(alpha, r + s, N));
      }
    }
  }
}

TEST_CASE("hz_coeff bounds") {
  const auto a = HurwitzSeries::exponential(4, 3);
  CHECK(hz_coeff(a, 4) == 81);
  CHECK_THROWS_AS(hz_coeff(a, 5), std::out_of_range);
}

TEST_CASE("barred arrangement series against enumeration") {
  const auto fubini = hz_bpa(0, 8);
  for (int n = 0; n <= 8; ++n) CHECK(fubini[n] == Rational(oracle::enum_bpa_count(n, 0)));
  CHECK(hz_bpa(1, 4)[0] == 1);
  CHECK(hz_bpa(1, 4)[2] == Rational(oracle::enum_bpa_count(2, 1)));
}

TEST_CASE("barred arrangement series solves its defining relation") {
  const int N = 16;
  const auto two_minus = HurwitzSeries::constant(N, 2) - HurwitzSeries::exponential(N, 1);
  for (int l = 0; l <= 4; ++l) {
    const auto lhs = hz_mul(hz_pow(two_minus, static_cast<unsigned long>(l + 1)), hz_bpa(l, N));
    REQUIRE(lhs == HurwitzSeries::constant(N, 1));
  }
}
