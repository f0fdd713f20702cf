#include <doctest.h>

#include <algorithm>
#include <set>

#include "dowling/gstirling.hpp"
#include "dowling/oracle.hpp"

using namespace dowling;
using namespace dowling::oracle;

TEST_CASE("set partitions are listed once in standard form") {
  for (int n = 0; n <= 7; ++n) {
    std::set<std::vector<std::vector<int>>> seen;
    long count = 0;
    enum_set_partitions(n, [&](const SetPartition& p) {
      ++count;
      std::vector<int> all;
      for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        const auto& block = p.blocks[b];
        REQUIRE(!block.empty());
        REQUIRE(std::is_sorted(block.begin(), block.end()));
        if (b > 0) REQUIRE(p.blocks[b - 1].front() < block.front());
        all.insert(all.end(), block.begin(), block.end());
      }
      std::sort(all.begin(), all.end());
      for (int i = 0; i < n; ++i) REQUIRE(all[static_cast<std::size_t>(i)] == i + 1);
      REQUIRE(all.size() == static_cast<std::size_t>(n));
      seen.insert(p.blocks);
    });
    CHECK(static_cast<long>(seen.size()) == count);
  }
}

TEST_CASE("set partition counts") {
  long total = 0;
  enum_set_partitions(0, [&](const SetPartition&) { ++total; });
  CHECK(total == 1);
  total = 0;
  enum_set_partitions(3, [&](const SetPartition&) { ++total; });
  CHECK(total == 5);
  CHECK(count_set_partitions(4, 2) == 7);
  CHECK(count_set_partitions(4, 5) == 0);
  CHECK_THROWS_AS(count_set_partitions(13, 2), CapError);
}

TEST_CASE("barred arrangements") {
  CHECK(enum_bpa_count(0, 3) == 1);
  CHECK(enum_bpa_count(1, 1) == 2);
  CHECK(enum_bpa_count(2, 1) == 8);
  const std::vector<int> fubini{1, 1, 3, 13, 75};
  for (int n = 0; n <= 4; ++n) CHECK(enum_bpa_count(n, 0) == fubini[static_cast<std::size_t>(n)]);
  CHECK_THROWS_AS(enum_bpa_count(9, 0), CapError);
  CHECK_THROWS_AS(enum_bpa_count(3, 5), CapError);
}

TEST_CASE("full arrangement listing matches the count") {
  for (int n = 0; n <= 5; ++n) {
    for (int l = 0; l <= 2; ++l) {
      long visits = 0;
      enum_bpa(n, l, [&](const BarredArrangement& a) {
        ++visits;
        REQUIRE(a.sections.size() == static_cast<std::size_t>(l + 1));
        int elements = 0;
        for (const auto& sec : a.sections) {
          for (const auto& block : sec) elements += static_cast<int>(block.size());
        }
        REQUIRE(elements == n);
      });
      REQUIRE(Integer(visits) == enum_bpa_count(n, l));
    }
  }
}

TEST_CASE("colored partitions") {
  for (long m = 1; m <= 3; ++m) {
    for (long r = 0; r <= 2; ++r) {
      CHECK(count_rwhitney(1, 1, m, r).value == 1);
      CHECK(count_rwhitney(1, 0, m, r).value == r);
    }
  }
  // one block {1,2} carrying weight m = 2
  CHECK(count_rwhitney(2, 1, 2, 0).value == gstirling_table({0, 2, 0}, 2).at(2, 1));
  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      REQUIRE(count_rwhitney(n, k, 1, 0).value == count_set_partitions(n, k));
    }
  }
  CHECK_THROWS_AS(count_rwhitney(8, 1, 1, 0), CapError);
  CHECK_THROWS(count_rwhitney(3, 1, 0, 0));
}

TEST_CASE("colored partitions with block weights") {
  for (long m = 1; m <= 3; ++m) {
    for (long r = 0; r <= 2; ++r) {
      CHECK(count_rmxl(0, m, r, 2, 3).value == 1);
      CHECK(count_rmxl(1, m, r, 2, 3).value == r + 6);
    }
  }
  CHECK(count_rmxl(3, 1, 0, 1, 1).value == 5);
  CHECK_THROWS(count_rmxl(3, 1, 0, 0, 1));
  CHECK_THROWS_AS(count_rmxl(8, 1, 0, 1, 1), CapError);
}
