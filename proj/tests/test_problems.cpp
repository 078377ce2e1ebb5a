#include <doctest.h>

#include <map>

#include "ballseq/counting.hpp"
#include "ballseq/oracle.hpp"
#include "ballseq/problems.hpp"

using namespace ballseq;

namespace {

// Exhaustive census per (k, n), shared across test cases.
const DistributionTable& census(std::int64_t k, std::int64_t n) {
  static std::map<std::pair<std::int64_t, std::int64_t>, DistributionTable> cache;
  auto it = cache.find({k, n});
  if (it == cache.end()) {
    it = cache.emplace(std::pair{k, n}, enumerate_counts(k, n, {.budget = 20'000'000, .threads = 0}))
             .first;
  }
  return it->second;
}

Count oracle_matches(std::int64_t k, std::int64_t n, std::int64_t m) {
  Count total(0);
  for (const auto& [cell, count] : census(k, n).by_match_cell) {
    if (cell.m == m) total += count;
  }
  return total;
}

Count oracle_repeats(std::int64_t k, std::int64_t n, std::int64_t mu) {
  const auto& buckets = census(k, n).by_repeat_count;
  auto it = buckets.find(mu);
  return it == buckets.end() ? Count(0) : it->second;
}

}  // namespace

TEST_CASE("problem1: examples") {
  CHECK(problem1_matches_fixed_length(5, 3, 4) == 120);
  CHECK(problem1_matches_fixed_length(3, 2, 2) == 6);
  CHECK(problem1_matches_fixed_length(4, 1, 1) == 0);
  // totalized low end
  CHECK(problem1_matches_fixed_length(3, 4, 0) == 24);
  CHECK(problem1_matches_fixed_length(5, 4, 0) == 0);
}

TEST_CASE("problem2: examples") {
  CHECK(problem2_matches_any_length(2, 2) == 8);
  CHECK(problem2_matches_any_length(1, 2) == 1);
  CHECK(problem2_matches_any_length(3, 1) == 0);
  CHECK(problem2_matches_any_length(0, 4) == 0);
  // m = 0 mirrors problem4 with mu = 0: lengths 1..n, 3 + 6 + 6
  CHECK(problem2_matches_any_length(3, 0) == 15);
}

TEST_CASE("problem3: examples") {
  CHECK(problem3_repeats_fixed_length(3, 2, 1) == 6);
  CHECK(problem3_repeats_fixed_length(3, 2, 3) == 0);
  CHECK(problem3_repeats_fixed_length(0, 4, 0) == 1);
  CHECK(problem3_repeats_fixed_length(4, 3, 0) == 0);

  // AABBCCDDDD has six repeats; its census bucket must contain it.
  const Count ten_four_six = problem3_repeats_fixed_length(10, 4, 6);
  CHECK(ten_four_six > 0);
  CHECK(ten_four_six == oracle_repeats(10, 4, 6));
}

TEST_CASE("problem4: examples") {
  CHECK(problem4_repeats_any_length(2, 1) == 8);
  CHECK(problem4_repeats_any_length(1, 1) == 1);
  CHECK(problem4_repeats_any_length(3, 0) == 15);
  CHECK(problem4_repeats_any_length(0, 3) == 0);
}

TEST_CASE("problems reject negative parameters") {
  CHECK_THROWS_AS(problem1_matches_fixed_length(-1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(problem2_matches_any_length(2, -2), std::invalid_argument);
  CHECK_THROWS_AS(problem3_repeats_fixed_length(3, -2, 1), std::invalid_argument);
  CHECK_THROWS_AS(problem4_repeats_any_length(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(distribution_table(2, -1), std::invalid_argument);
}

TEST_CASE("distribution_table: examples") {
  SUBCASE("k=2 n=2") {
    const auto t = distribution_table(2, 2);
    CHECK(t.by_match_cell.size() == 4);  // (0,0) (1,0) (2,0) (2,1)
    for (const auto& [cell, count] : t.by_match_cell) {
      CAPTURE(cell.m);
      CAPTURE(cell.lambda);
      if (cell == MatchCell{0, 0} || cell == MatchCell{2, 1}) {
        CHECK(count == 2);
      } else {
        CHECK(count == 0);
      }
    }
    CHECK(t.by_repeat_count == std::map<std::int64_t, Count>{{0, Count(2)}, {1, Count(2)}});
  }
  SUBCASE("k=0 n=5") {
    const auto t = distribution_table(0, 5);
    CHECK(t.by_match_cell == std::map<MatchCell, Count>{{MatchCell{0, 0}, Count(1)}});
    CHECK(t.by_repeat_count == std::map<std::int64_t, Count>{{0, Count(1)}});
  }
  SUBCASE("k=5 n=3") {
    const auto t = distribution_table(5, 3);
    CHECK(t.by_match_cell.at({4, 1}) == 30);
    CHECK(t.by_match_cell.at({4, 2}) == 90);
  }
}

TEST_CASE("distribution_table: invariants") {
  for (std::int64_t k = 0; k <= 14; ++k) {
    for (std::int64_t n = 0; n <= 9; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      const auto t = distribution_table(k, n);
      const Count mass = power(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
      REQUIRE(t.match_total() == mass);
      REQUIRE(t.repeat_total() == mass);
      for (const auto& [mu, count] : t.by_repeat_count) {
        if (mu == 0) continue;
        Count folded(0);
        for (std::int64_t lambda = 0; lambda <= mu; ++lambda) {
          auto it = t.by_match_cell.find({mu + lambda, lambda});
          if (it != t.by_match_cell.end()) folded += it->second;
        }
        REQUIRE(count == folded);
      }
    }
  }
}

TEST_CASE("problem1 and problem3 agree with the exhaustive census") {
  for (std::int64_t k = 0; k <= 8; ++k) {
    for (std::int64_t n = 0; n <= 8; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      for (std::int64_t m = 0; m <= k; ++m) {
        CAPTURE(m);
        REQUIRE(problem1_matches_fixed_length(k, n, m) == oracle_matches(k, n, m));
      }
      for (std::int64_t mu = 0; mu <= std::max<std::int64_t>(k - 1, 0); ++mu) {
        CAPTURE(mu);
        REQUIRE(problem3_repeats_fixed_length(k, n, mu) == oracle_repeats(k, n, mu));
      }
    }
  }
}

TEST_CASE("problem2 and problem4 agree with census aggregates") {
  for (std::int64_t n = 0; n <= 4; ++n) {
    for (std::int64_t m = 2; m <= 5; ++m) {
      Count expected(0);
      for (std::int64_t k = m; k <= m + n - 1; ++k) expected += oracle_matches(k, n, m);
      CAPTURE(n);
      CAPTURE(m);
      CHECK(problem2_matches_any_length(n, m) == expected);
    }
    for (std::int64_t mu = 0; mu <= 4; ++mu) {
      Count expected(0);
      for (std::int64_t k = mu + 1; k <= n + mu; ++k) expected += oracle_repeats(k, n, mu);
      CAPTURE(n);
      CAPTURE(mu);
      CHECK(problem4_repeats_any_length(n, mu) == expected);
    }
  }
}

TEST_CASE("cross-problem mass identity") {
  for (std::int64_t k = 0; k <= 12; ++k) {
    for (std::int64_t n = 0; n <= 12; ++n) {
      Count by_matches(0);
      Count by_repeats(0);
      for (std::int64_t m = 0; m <= k; ++m) by_matches += problem1_matches_fixed_length(k, n, m);
      for (std::int64_t mu = 0; mu <= std::max<std::int64_t>(k - 1, 0); ++mu) {
        by_repeats += problem3_repeats_fixed_length(k, n, mu);
      }
      const Count mass = power(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
      CAPTURE(k);
      CAPTURE(n);
      REQUIRE(by_matches == mass);
      REQUIRE(by_repeats == mass);
    }
  }
}

TEST_CASE("problem3 support") {
  for (std::int64_t k = 1; k <= 12; ++k)
    for (std::int64_t n = 0; n <= 8; ++n)
      for (std::int64_t mu = 0; mu <= k + 3; ++mu) {
        if (mu > k - 1 || k > n + mu) {
          CAPTURE(k);
          CAPTURE(n);
          CAPTURE(mu);
          REQUIRE(problem3_repeats_fixed_length(k, n, mu) == 0);
        }
      }
}
