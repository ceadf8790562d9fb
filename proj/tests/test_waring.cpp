#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <wsieve/waring.hpp>

#include "oracle.hpp"

#include <numeric>
#include <set>
#include <vector>

using namespace wsieve;

TEST_CASE("ordinary waring numbers") {
  SUBCASE("pinned values") {
    CHECK(gamma_ordinary(PrimeModulus(5), 2).value == 2);
    CHECK(gamma_ordinary(PrimeModulus(7), 1).value == 1);
    CHECK(gamma_ordinary(PrimeModulus(5), 4).value == 4);
  }
  SUBCASE("coverage trace for p=5 m=4 (summands {0,1})") {
    auto result = gamma_ordinary(PrimeModulus(5), 4);
    REQUIRE(result.value == 4);
    CHECK(result.coverage.at(1) == std::vector<uint64_t>{2, 3, 4});
    CHECK(result.coverage.at(2) == std::vector<uint64_t>{3, 4});
    CHECK(result.coverage.at(3) == std::vector<uint64_t>{4});
    CHECK(result.coverage.at(4).empty());
  }
  SUBCASE("reachability is monotone with zero allowed") {
    for (uint64_t p : {11, 13, 17}) {
      for (uint64_t m : divisors(p - 1)) {
        auto result = gamma_ordinary(PrimeModulus(p), m);
        REQUIRE(result.value.has_value());
        std::set<uint64_t> prev_missing;
        bool first = true;
        for (const auto& [k, missing] : result.coverage) {
          std::set<uint64_t> cur(missing.begin(), missing.end());
          if (!first) {
            for (uint64_t b : cur) CHECK(prev_missing.count(b) == 1);
          }
          prev_missing = std::move(cur);
          first = false;
        }
      }
    }
  }
  SUBCASE("gamma depends on m only through gcd(m, p-1)") {
    for (uint64_t p : {7, 11, 13}) {
      PrimeModulus mod(p);
      for (uint64_t m = 1; m <= 15; ++m) {
        CHECK(gamma_ordinary(mod, m).value ==
              gamma_ordinary(mod, std::gcd(m, p - 1)).value);
      }
    }
  }
  SUBCASE("zero-excluded variant") {
    // Summands H = {1}: only the residue k is ever reachable.
    auto none = gamma_ordinary(PrimeModulus(5), 4, false);
    CHECK_FALSE(none.value.has_value());
    CHECK(none.coverage.at(1) == std::vector<uint64_t>{0, 2, 3, 4});
    CHECK(none.coverage.at(3) == std::vector<uint64_t>{0, 1, 2, 4});

    // Summands {1, 4} at p=5: sums of exactly k of them.
    auto squares = gamma_ordinary(PrimeModulus(5), 2, false);
    CHECK(squares.value == 4);
    CHECK(squares.coverage.at(2) == std::vector<uint64_t>{1, 4});

    // Including zero can only help.
    for (uint64_t p : {7, 11}) {
      for (uint64_t m : divisors(p - 1)) {
        auto with_zero = gamma_ordinary(PrimeModulus(p), m, true);
        auto without = gamma_ordinary(PrimeModulus(p), m, false);
        if (without.value.has_value()) {
          CHECK(*with_zero.value <= *without.value);
        }
      }
    }
  }
}

TEST_CASE("distinct waring numbers") {
  SUBCASE("pinned values") {
    CHECK(gamma_distinct(PrimeModulus(5), 1).value == 2);
    CHECK(gamma_distinct(PrimeModulus(7), 2).value == 3);
  }
  SUBCASE("p=7 m=1: the oracle settles it") {
    auto result = gamma_distinct(PrimeModulus(7), 1);
    REQUIRE(result.value.has_value());
    // Direct enumeration: k=1 misses 0, k=2 covers everything.
    auto k1 = oracle::os_counts(7, 1, 1);
    CHECK(k1[0] == 0);
    auto k2 = oracle::os_counts(7, 1, 2);
    for (uint64_t b = 0; b < 7; ++b) CHECK(k2[b] > 0);
    CHECK(result.value == 2);
  }
  SUBCASE("p=5 m=2 has no distinct representation number") {
    auto result = gamma_distinct(PrimeModulus(5), 2);
    CHECK_FALSE(result.value.has_value());
    REQUIRE(result.coverage.size() == 4);
    CHECK(result.coverage.at(1) == std::vector<uint64_t>{0, 2, 3});
    CHECK(result.coverage.at(2) == std::vector<uint64_t>{1, 4});
    CHECK(result.coverage.at(3) == std::vector<uint64_t>{0, 2, 3});
    CHECK(result.coverage.at(4) == std::vector<uint64_t>{1, 2, 3, 4});
  }
  SUBCASE("coverage matches plain enumeration") {
    for (uint64_t p : {5, 7, 11}) {
      for (uint64_t m : divisors(p - 1)) {
        auto result = gamma_distinct(PrimeModulus(p), m);
        for (const auto& [k, missing] : result.coverage) {
          auto brute = oracle::os_counts(p, m, k);
          std::vector<uint64_t> expect;
          for (uint64_t b = 0; b < p; ++b) {
            if (brute[b] == 0) expect.push_back(b);
          }
          CAPTURE(p);
          CAPTURE(m);
          CAPTURE(k);
          CHECK(missing == expect);
        }
      }
    }
  }
  SUBCASE("coverage complements pair up under the complement symmetry") {
    for (uint64_t p : {5, 7, 11}) {
      PrimeModulus mod(p);
      for (uint64_t m : divisors(p - 1)) {
        const uint64_t t = complement_target(mod, m);
        auto tables = os_count_tables(mod, m, p - 1);
        for (uint64_t k = 1; k <= p - 1; ++k) {
          for (uint64_t b = 0; b < p; ++b) {
            const bool covered = tables[k].at(b) > 0;
            const bool mirrored = tables[p - 1 - k].at((t + p - b) % p) > 0;
            CHECK(covered == mirrored);
          }
        }
      }
    }
  }
}

TEST_CASE("waring bound suite") {
  auto report = waring_bound_suite(100);
  CHECK(report.all_cauchy_ok);
  CHECK(report.all_ordering_ok);
  REQUIRE(!report.rows.empty());

  bool saw_equality_case = false;
  for (const auto& row : report.rows) {
    if (row.cauchy_asserted) CHECK(row.gamma <= row.m);
    if (row.gamma_dist.has_value()) CHECK(row.gamma <= *row.gamma_dist);
    if (row.p == 5 && row.m == 4) {
      // m = p-1 sits outside the asserted range but still attains gamma = m.
      CHECK_FALSE(row.cauchy_asserted);
      CHECK(row.gamma == 4);
      saw_equality_case = true;
    }
    if (row.p == 5 && row.m == 2) {
      CHECK(row.gamma == 2);
      CHECK_FALSE(row.gamma_dist.has_value());
    }
  }
  CHECK(saw_equality_case);
}
