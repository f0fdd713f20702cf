#include <doctest.h>

#include "dowling/bpa.hpp"
#include "dowling/dowling.hpp"
#include "dowling/gbell.hpp"
#include "dowling/oracle.hpp"

using namespace dowling;

TEST_CASE("generalized Bell polynomials") {
  CHECK(gbell_poly(0, {2, 3, 1}).poly == BiPoly(1));
  CHECK(gbell_poly(3, {0, 1, 0}).poly.eval(1, 0) == 5);
  for (auto p : {GStirlingParams{0, 1, 2}, GStirlingParams{1, 2, 3}, GStirlingParams{2, 1, 0}}) {
    CHECK(gbell_poly(1, p).poly == BiPoly::x() + BiPoly(p.r));
  }
}

TEST_CASE("Bell polynomials from the generating function") {
  for (long a = 0; a <= 2; ++a) {
    for (long b = 1; b <= 3; ++b) {
      for (long r = 0; r <= 2; ++r) {
        for (long x0 = 0; x0 <= 3; ++x0) {
          const auto egf = gbell_egf({a, b, r}, x0, 10);
          for (int n = 0; n <= 10; ++n) {
            REQUIRE(egf[n] == Rational(gbell_poly(n, {a, b, r}).poly.eval(x0, 0)));
          }
        }
      }
    }
  }
}

TEST_CASE("Bell identities on the default grid") {
  const auto rep = check_bell_identities({"B1", "B2", "B3"}, 10, ParamGrid{});
  REQUIRE(rep.identities.size() == 3);
  for (const auto& r : rep.identities) CHECK_MESSAGE(r.verdict() == Verdict::Pass, r.id);
}

TEST_CASE("Bell identity selection") {
  CHECK_THROWS(check_bell_identities({"B99"}, 4, ParamGrid{}));
  ParamGrid empty;
  empty.m.clear();
  CHECK(check_bell_identities({}, 4, empty).identities.empty());
}

TEST_CASE("Bell generating function as typeset") {
  const auto adj = adjudicate_bell_egf(6, ParamGrid{});
  CHECK(adj.cases == 27 * 7);
  // agrees exactly on the r = 0 slice
  ParamGrid r0;
  r0.r = {0};
  CHECK(adjudicate_bell_egf(6, r0).disagreements == 0);
}

TEST_CASE("Dowling polynomials small cases") {
  CHECK(dowling_poly(0, {2, 1, 0}).poly == BiPoly(1));
  for (long r = 0; r <= 3; ++r) {
    CHECK(dowling_poly(1, {2, r, 0}).poly == BiPoly::x() * BiPoly::lambda() + BiPoly(r));
  }
  CHECK(dowling_poly(1, {1, 2, 0}).poly.to_string() == "x*l + 2");
  CHECK(dowling_poly(3, {1, 0, 0}).poly.eval(1, 1) == 5);
  CHECK_THROWS(dowling_poly(3, {0, 0, 0}));
  CHECK_THROWS(dowling_poly(3, {1, -1, 0}));
}

TEST_CASE("Dowling polynomials against colored block counts") {
  for (long m = 1; m <= 3; ++m) {
    for (long r = 0; r <= 2; ++r) {
      for (long x0 = 1; x0 <= 3; ++x0) {
        for (long l0 = 1; l0 <= 3; ++l0) {
          for (int n = 0; n <= 6; ++n) {
            REQUIRE(dowling_poly(n, {m, r, 0}).poly.eval(x0, l0) ==
                    oracle::count_rmxl(n, m, r, x0, l0).value);
          }
        }
      }
    }
  }
}

TEST_CASE("Dowling polynomials from the generating function") {
  for (long a = 0; a <= 2; ++a) {
    for (long m = 1; m <= 3; ++m) {
      for (long r = 0; r <= 2; ++r) {
        const auto vals = dowling_via_egf(12, {m, r, a}, 2, 3);
        for (int n = 0; n <= 12; ++n) {
          REQUIRE(vals[static_cast<std::size_t>(n)] == dowling_poly(n, {m, r, a}).poly.eval(2, 3));
        }
      }
    }
  }
}

TEST_CASE("Dowling identities D1 to D3 and D6") {
  const auto rep = check_dowling_identities({"D1", "D2", "D3", "D6"}, 8, ParamGrid{});
  REQUIRE(rep.identities.size() == 4);
  for (const auto& r : rep.identities) CHECK_MESSAGE(r.verdict() == Verdict::Pass, r.id);
}

TEST_CASE("D9 is reported with its comparison against D1") {
  ParamGrid g;
  g.r = {0, 1};
  const auto rep = check_dowling_identities({"D9"}, 6, g);
  REQUIRE(rep.identities.size() == 1);
  CHECK(rep.identities[0].flagged);
  REQUIRE(rep.adjudications.size() == 1);
  const auto& facts = rep.adjudications[0].facts;
  CHECK(facts.at(0).first == "grid_consistent_with_D1");
  CHECK(facts.at(0).second == "true");
}

TEST_CASE("corrected identity forms verify where the typeset forms do not") {
  const auto rep = check_dowling_identities({"D5", "D8", "D10", "D11", "G1", "G2", "G3"}, 8,
                                            ParamGrid{});
  for (const auto& r : rep.identities) {
    REQUIRE_MESSAGE(r.corrected_failures.has_value(), r.id);
    CHECK_MESSAGE(*r.corrected_failures == 0, r.id);
  }
  const auto bell = check_bell_identities({"B6"}, 8, ParamGrid{});
  REQUIRE(bell.identities.size() == 1);
  CHECK(bell.identities[0].corrected_failures.value_or(-1) == 0);
}

TEST_CASE("barred arrangement formulas") {
  for (int l = 0; l <= 4; ++l) {
    for (int n = 0; n <= 8; ++n) {
      REQUIRE(bpa_sum_formula(n, l) == oracle::enum_bpa_count(n, l));
      REQUIRE(bpa_egf_coefficient(n, l) == oracle::enum_bpa_count(n, l));
    }
  }
  // the typeset binomial C(l+k-1, k) vanishes for l = 0, k >= 1
  for (int n = 1; n <= 6; ++n) CHECK(bpa_printed_formula(n, 0) == 0);
  const auto adj = adjudicate_bpa_formula(8, 4);
  CHECK(adj.cases == 45);
  CHECK(adj.verdict() == "PRINTED_FORM_MISMATCH");
}
