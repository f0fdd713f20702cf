#include <doctest.h>

#include "dowling/asymptotics.hpp"
#include "dowling/hurwitz.hpp"

using namespace dowling;

TEST_CASE("partitions with a fixed number of parts") {
  CHECK(partitions_with_parts(0, 0).size() == 1);
  CHECK(partitions_with_parts(5, 0).empty());
  CHECK(partitions_with_parts(6, 3).size() == 3);  // 4+1+1, 3+2+1, 2+2+2
  for (int n = 1; n <= 12; ++n) {
    std::size_t total = 0;
    for (int p = 1; p <= n; ++p) {
      for (const auto& part : partitions_with_parts(n, p)) {
        REQUIRE(part.size() == n);
        REQUIRE(part.parts() == p);
      }
      total += partitions_with_parts(n, p).size();
    }
    // p(12) = 77
    if (n == 12) CHECK(total == 77);
  }
}

TEST_CASE("W(n,e) symbolic forms") {
  for (int n = 1; n <= 10; ++n) {
    MomentPoly w0;
    std::vector<int> e(2, 0);
    e[1] = n;
    w0[e] = Rational(1, factorial(n));
    CHECK(w_symbolic(n, 0) == w0);
    if (n >= 2) CHECK(w_symbolic(n, 1) == w_transcribed(n, 1));
    if (n >= 3) CHECK(w_symbolic(n, 2) == w_transcribed(n, 2));
  }
  CHECK_THROWS(w_symbolic(3, 4));
  CHECK_THROWS(w_transcribed(6, 5));
}

TEST_CASE("transcribed W(n,3) and W(n,4) differ from the partition sum") {
  CHECK(w_symbolic(5, 3) == w_transcribed(5, 3));  // the odd term needs n >= 6
  CHECK(w_symbolic(6, 3) != w_transcribed(6, 3));
  CHECK(w_symbolic(6, 4) != w_transcribed(6, 4));
  const auto adj = adjudicate_w_formulas(10);
  CHECK(adj.verdict() == "PRINTED_FORM_MISMATCH");
}

TEST_CASE("W values") {
  const DowlingParams base{1, 0, 0};
  for (int n = 1; n <= 8; ++n) CHECK(w_value(n, 0, base, 1) == Rational(1, factorial(n)));
  CHECK_THROWS_AS(w_value(3, 3, base, 1), std::out_of_range);
  CHECK_THROWS_AS(w_value(0, 0, base, 1), std::out_of_range);
}

TEST_CASE("Theta power coefficient") {
  // Theta = exp(e^z - 1) at m = 1, r = 0, x = 1; Theta^l = exp(l (e^z - 1))
  const int n = 6;
  const auto bell_l = [&](long l) {
    return hz_exp((HurwitzSeries::exponential(n, 1) - HurwitzSeries::constant(n, 1)) *
                  Rational(l))[n];
  };
  for (long l : {1, 2, 7, 100}) {
    CHECK(Rational(theta_power_coefficient(n, l, {1, 0, 0}, 1)) == bell_l(l));
  }
}

TEST_CASE("asymptotic estimate") {
  const auto zero = dowling_asymptotic(0, 5, 4, {1, 0, 0}, 1);
  CHECK(zero.estimate == 1);
  CHECK(zero.exact == 1);
  CHECK(zero.rel_error == 0);

  const auto e0 = dowling_asymptotic(3, 100, 0, {1, 0, 0}, 1);
  const auto e2 = dowling_asymptotic(3, 100, 2, {1, 0, 0}, 1);
  CHECK(e2.rel_error < e0.rel_error);
  CHECK(e0.terms_used == 1);
  CHECK(e0.value.size() > 40);

  // with every term up to e = n-1 the expansion is exact
  for (int n = 1; n <= 6; ++n) {
    CHECK(dowling_asymptotic(n, 50, n - 1, {2, 1, 0}, 2).rel_error == 0);
  }
  CHECK_THROWS_AS(dowling_asymptotic(5, 5, 4, {1, 0, 0}, 1), std::invalid_argument);
}

TEST_CASE("lambda as power versus lambda as order") {
  const auto same = adjudicate_lambda_overload(5, {{1, 0, 0}, {2, 0, 1}}, {1, 2}, {1, 2, 3});
  CHECK(same.disagreements == 0);
  const auto differ = adjudicate_lambda_overload(5, {{1, 1, 0}}, {1}, {2});
  CHECK(differ.disagreements > 0);
}
