#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <wsieve/counting.hpp>

#include "oracle.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

using namespace wsieve;

namespace {

// {b: count} shorthand for expected tables; absent keys are zero.
void check_table(const CountTable& table, const std::map<uint64_t, long>& expected) {
  for (uint64_t b = 0; b < table.p; ++b) {
    auto it = expected.find(b);
    const long want = (it == expected.end()) ? 0 : it->second;
    CAPTURE(b);
    CHECK(table.at(b) == want);
  }
}

void check_equal_tables(const CountTable& a, const CountTable& b) {
  REQUIRE(a.p == b.p);
  REQUIRE(a.k == b.k);
  for (uint64_t r = 0; r < a.p; ++r) {
    CAPTURE(r);
    CHECK(a.at(r) == b.at(r));
  }
}

ValuedDomain squares_instance_p5() {
  return ValuedDomain::power_instance(power_structure(PrimeModulus(5), 2));
}

}  // namespace

TEST_CASE("group ring arithmetic") {
  auto x3 = GroupRingPoly::monomial(5, 3, 1);
  auto x4 = GroupRingPoly::monomial(5, 4, 1);
  auto prod = x3 * x4;  // X^7 = X^2 mod X^5 - 1
  CHECK(prod.at(2) == 1);
  CHECK(prod == GroupRingPoly::monomial(5, 2, 1));

  auto unit = GroupRingPoly::unit(5);
  CHECK(unit * x3 == x3);

  auto p1 = GroupRingPoly::power_sum(squares_instance_p5(), 1);
  CHECK(p1.at(1) == 2);
  CHECK(p1.at(4) == 2);
  CHECK(p1.at(0) == 0);
  auto p2 = GroupRingPoly::power_sum(squares_instance_p5(), 2);
  CHECK(p2.at(2) == 2);  // 2*1 = 2 and 2*4 = 3
  CHECK(p2.at(3) == 2);

  auto scaled = p1;
  scaled.scale(Rational(1, 2));
  CHECK(scaled.at(1) == 1);
  auto sum = scaled + scaled;
  CHECK(sum == p1);
}

TEST_CASE("pinned small tables") {
  PrimeModulus p5(5);

  SUBCASE("dp on the unit domain") {
    auto tables = count_dp(ValuedDomain::units(p5), 4);
    CHECK(tables[2].at(0) == 2);  // {1,4} and {2,3}
    check_table(tables[0], {{0, 1}});
    check_table(tables[4], {{0, 1}});  // 1+2+3+4 = 10 = 0 mod 5
  }

  SUBCASE("squares instance, k = 2") {
    for (auto counter : {count_dp, count_genfun, count_newton}) {
      auto tables = counter(squares_instance_p5(), 2);
      check_table(tables[2], {{0, 4}, {2, 1}, {3, 1}});
    }
  }

  SUBCASE("squares instance, k = 3") {
    auto tables = count_newton(squares_instance_p5(), 3);
    check_table(tables[3], {{1, 2}, {4, 2}});
  }

  SUBCASE("single item") {
    auto domain = ValuedDomain::from_values(PrimeModulus(7), {3});
    auto tables = count_genfun(domain, 1);
    check_table(tables[1], {{3, 1}});
    auto newton = count_newton(domain, 1);
    check_table(newton[1], {{3, 1}});  // e_1 = P_1 = X^3
  }

  SUBCASE("odlyzko-stanley wrappers") {
    check_table(count_odlyzko_stanley(p5, 2, 2), {{0, 4}, {2, 1}, {3, 1}});
    check_table(count_odlyzko_stanley(p5, 1, 2),
                {{0, 2}, {1, 1}, {2, 1}, {3, 1}, {4, 1}});
    // x^6 = 1 for every unit mod 7: every 3-subset sums to 3.
    check_table(count_odlyzko_stanley(PrimeModulus(7), 6, 3), {{3, 20}});
  }
}

TEST_CASE("counter preconditions") {
  auto domain = ValuedDomain::from_values(PrimeModulus(7), {1, 2, 4});
  CHECK_THROWS_AS(count_dp(domain, 4), std::invalid_argument);
  CHECK_THROWS_AS(count_genfun(domain, 4), std::invalid_argument);
  CHECK_THROWS_AS(count_newton(domain, 4), std::invalid_argument);
  CHECK_THROWS_AS(count_odlyzko_stanley(PrimeModulus(7), 2, 7), std::invalid_argument);

  NewtonCounter counter(domain);
  for (int k = 0; k <= 3; ++k) counter.next();
  CHECK_THROWS_AS(counter.next(), std::invalid_argument);
}

TEST_CASE("cross-algorithm equivalence") {
  SUBCASE("odlyzko-stanley grids") {
    for (uint64_t p : {3, 5, 7, 11}) {
      PrimeModulus mod(p);
      for (uint64_t m : divisors(p - 1)) {
        auto domain = ValuedDomain::power_instance(power_structure(mod, m));
        auto dp = count_dp(domain, p - 1);
        auto gf = count_genfun(domain, p - 1);
        auto nw = count_newton(domain, p - 1);
        for (uint64_t k = 0; k <= p - 1; ++k) {
          CAPTURE(p);
          CAPTURE(m);
          CAPTURE(k);
          check_equal_tables(dp[k], gf[k]);
          check_equal_tables(dp[k], nw[k]);
          // The multiset representation must agree with elementwise
          // enumeration over F_p^* itself.
          auto brute = oracle::os_counts(p, m, k);
          for (uint64_t b = 0; b < p; ++b) CHECK(dp[k].at(b) == brute[b]);
        }
      }
    }
  }

  SUBCASE("seeded random domains") {
    SplitMix64 rng(20240801);
    const std::vector<uint64_t> primes{5, 7, 11, 13, 17};
    for (int trial = 0; trial < 60; ++trial) {
      PrimeModulus mod(primes[trial % primes.size()]);
      auto domain = random_unit_subset(mod, rng);
      const uint64_t k_max = domain.size();
      auto dp = count_dp(domain, k_max);
      auto gf = count_genfun(domain, k_max);
      auto nw = count_newton(domain, k_max);
      for (uint64_t k = 0; k <= k_max; ++k) {
        check_equal_tables(dp[k], gf[k]);
        check_equal_tables(dp[k], nw[k]);
        auto brute = oracle::domain_counts(domain, k);
        for (uint64_t b = 0; b < domain.modulus().value(); ++b) {
          CHECK(dp[k].at(b) == brute[b]);
        }
      }
    }
  }

  SUBCASE("incremental counter matches the batch form") {
    auto domain = squares_instance_p5();
    NewtonCounter counter(domain);
    auto batch = count_newton(domain, 4);
    for (uint64_t k = 0; k <= 4; ++k) {
      check_equal_tables(counter.next(), batch[k]);
    }
  }
}

TEST_CASE("conservation laws") {
  SplitMix64 rng(555);
  for (uint64_t p : {5, 11, 13}) {
    PrimeModulus mod(p);
    for (int trial = 0; trial < 10; ++trial) {
      auto domain = random_unit_subset(mod, rng);
      const uint64_t n = domain.size();
      auto tables = count_dp(domain, n);
      Integer grand = 0;
      for (uint64_t k = 0; k <= n; ++k) {
        CHECK(tables[k].total() == binomial(n, k));
        grand += tables[k].total();
      }
      CHECK(grand == integer_pow(Integer(2), n));
    }
  }
}

TEST_CASE("symmetries") {
  SUBCASE("dilation: b -> c^m b permutes nothing") {
    for (uint64_t p : {11, 13}) {
      PrimeModulus mod(p);
      for (uint64_t m : {2, 5}) {
        auto tables = os_count_tables(mod, m, p - 1);
        for (uint64_t c = 1; c < p; ++c) {
          const uint64_t cm = mod.pow(c, m);
          for (uint64_t k = 0; k <= p - 1; ++k) {
            for (uint64_t b = 0; b < p; ++b) {
              CHECK(tables[k].at(b) == tables[k].at(mod.mul(cm, b)));
            }
          }
        }
      }
    }
  }

  SUBCASE("complement: N(k, b) = N(p-1-k, T-b)") {
    for (uint64_t p : {7, 11}) {
      PrimeModulus mod(p);
      for (uint64_t m : divisors(p - 1)) {
        const uint64_t t = complement_target(mod, m);
        auto tables = os_count_tables(mod, m, p - 1);
        for (uint64_t k = 0; k <= p - 1; ++k) {
          for (uint64_t b = 0; b < p; ++b) {
            const uint64_t tb = (t + p - b) % p;
            CHECK(tables[k].at(b) == tables[p - 1 - k].at(tb));
          }
        }
      }
    }
  }

  SUBCASE("complement target value") {
    CHECK(complement_target(PrimeModulus(5), 4) == 4);   // (p-1) | m
    CHECK(complement_target(PrimeModulus(5), 8) == 4);
    CHECK(complement_target(PrimeModulus(5), 2) == 0);
    CHECK(complement_target(PrimeModulus(7), 1) == 0);
  }
}

TEST_CASE("empty and identity cases") {
  auto domain = ValuedDomain::from_items(PrimeModulus(7), {{2, 3}, {5, 1}});
  auto tables = count_dp(domain, 1);
  check_table(tables[0], {{0, 1}});
  CHECK(tables[1].at(2) == 3);  // multiplicity of b in D
  CHECK(tables[1].at(5) == 1);
  CHECK(tables[1].at(3) == 0);
}

TEST_CASE("totals") {
  SUBCASE("pinned examples") {
    auto t3 = total_count(PrimeModulus(3), 1);
    CHECK(t3[0] == 2);
    CHECK(t3[1] == 1);
    CHECK(t3[2] == 1);

    // Every unit's 4th power is 1 mod 5, so N(b) buckets C(4, k) by k mod 5.
    auto t5 = total_count(PrimeModulus(5), 4);
    CHECK(t5[0] == 1);
    CHECK(t5[1] == 4);
    CHECK(t5[2] == 6);
    CHECK(t5[3] == 4);
    CHECK(t5[4] == 1);
  }

  SUBCASE("conservation and consistency with per-k tables") {
    for (uint64_t p : {3, 5, 7, 11, 13}) {
      PrimeModulus mod(p);
      for (uint64_t m : divisors(p - 1)) {
        auto totals = total_count(mod, m);
        Integer sum = 0;
        for (const auto& v : totals) sum += v;
        CHECK(sum == integer_pow(Integer(2), p - 1));

        auto tables = os_count_tables(mod, m, p - 1);
        for (uint64_t b = 0; b < p; ++b) {
          Integer through_k = 0;
          for (uint64_t k = 0; k <= p - 1; ++k) through_k += tables[k].at(b);
          CHECK(through_k == totals[b]);
        }
      }
    }
  }
}

TEST_CASE("decomposition audit") {
  SUBCASE("p=5 m=2 k=2: the lifting loses multi-preimage subsets") {
    auto rows = decomposition_audit(PrimeModulus(5), 2, 2);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].diff == 0);
    CHECK(rows[0].claimed == 4);
    CHECK(rows[0].actual == 4);
    CHECK(rows[2].claimed == 0);
    CHECK(rows[2].actual == 1);
    CHECK(rows[2].diff == -1);
    CHECK(rows[3].diff == -1);
    // {1,4} has both squares equal to 1; the claimed formula books it at
    // b=1 instead of b=2, so those two columns trade one subset.
    CHECK(rows[1].diff == 1);
    CHECK(rows[4].diff == 1);

    Integer claimed_total = 0;
    for (const auto& row : rows) claimed_total += row.claimed;
    CHECK(claimed_total == binomial(4, 2));
  }

  SUBCASE("m=1 lifting is the identity") {
    for (uint64_t k = 0; k <= 4; ++k) {
      for (const auto& row : decomposition_audit(PrimeModulus(5), 1, k)) {
        CHECK(row.diff == 0);
      }
    }
  }

  SUBCASE("non-divisor m rejected with guidance") {
    CHECK_THROWS_WITH_AS(decomposition_audit(PrimeModulus(5), 3, 2),
                         doctest::Contains("gcd(m, p-1) = 1"), std::invalid_argument);
  }
}
