#pragma once

#include <wsieve/domain.hpp>
#include <wsieve/numeric.hpp>

#include <cstdint>
#include <vector>

namespace wsieve {

// Exact counts N(k, b, D) for one k, indexed by target residue b.
struct CountTable {
  uint64_t p = 0;
  uint64_t k = 0;
  std::vector<Integer> counts;  // size p

  const Integer& at(uint64_t b) const { return counts[b]; }
  Integer total() const;  // sum over b; always C(n, k)
};

// Z[Z/p] with exact rational coefficients; multiplication is cyclic
// convolution (index arithmetic mod p). Carries the power sums and the
// elementary-symmetric layers of the sieve.
class GroupRingPoly {
 public:
  explicit GroupRingPoly(uint64_t p);  // zero element
  static GroupRingPoly unit(uint64_t p);
  static GroupRingPoly monomial(uint64_t p, uint64_t r, const Rational& c);
  // P_i of a domain: sum over items of mu * X^{(i*v) mod p}.
  static GroupRingPoly power_sum(const ValuedDomain& domain, uint64_t i);

  uint64_t p() const { return p_; }
  const Rational& at(uint64_t r) const { return coeffs_[r]; }
  Rational& at(uint64_t r) { return coeffs_[r]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  GroupRingPoly& operator+=(const GroupRingPoly& o);
  friend GroupRingPoly operator+(GroupRingPoly a, const GroupRingPoly& b);
  friend GroupRingPoly operator*(const GroupRingPoly& a, const GroupRingPoly& b);
  GroupRingPoly& scale(const Rational& c);
  friend bool operator==(const GroupRingPoly& a, const GroupRingPoly& b);

 private:
  uint64_t p_;
  std::vector<Rational> coeffs_;
};

// Three independent exact algorithms for the tables N(k, b, D), k = 0..k_max.
// All require k_max <= n and agree entrywise.
//
// count_dp: dynamic program over slots; each multiplicity slot is one
// single-element transition.
std::vector<CountTable> count_dp(const ValuedDomain& domain, uint64_t k_max);

// count_genfun: expands prod (1 + t X^v)^mu in (Z[t]/t^{k_max+1})[X]/(X^p - 1)
// by binomial factors and generic cyclic convolution.
std::vector<CountTable> count_genfun(const ValuedDomain& domain, uint64_t k_max);

// count_newton: power sums P_i and the signed recurrence
//   k e_k = sum_{i=1..k} (-1)^{i-1} P_i * e_{k-i}
// in the group ring. The division by k must be exact at every layer; a
// non-integral coefficient throws (that assertion is itself a correctness
// check of the sieve).
std::vector<CountTable> count_newton(const ValuedDomain& domain, uint64_t k_max);

// Incremental form of count_newton: successive calls to next() yield the
// k = 0, 1, 2, ... tables, so a caller probing for the first covered k does
// not pay for layers it never reaches. next() beyond k = n throws.
class NewtonCounter {
 public:
  explicit NewtonCounter(const ValuedDomain& domain);

  uint64_t p() const { return p_; }
  uint64_t n() const { return n_; }
  uint64_t layers_done() const { return layers_.size(); }  // tables yielded so far
  CountTable next();

 private:
  struct SparseTerm {
    uint64_t index;
    unsigned long weight;
  };
  const std::vector<SparseTerm>& power_sum_support(uint64_t i);

  uint64_t p_ = 0;
  uint64_t n_ = 0;
  std::vector<ValuedDomain::Item> items_;
  std::vector<std::vector<Integer>> layers_;          // e_0 .. e_{k}
  std::vector<std::vector<SparseTerm>> power_sums_;   // P_1 .. cached lazily
};

// The Odlyzko-Stanley instance: tables of N*_m(k, b) over the power-residue
// multiset, k = 0..k_max (k_max <= p-1); single-k convenience below.
std::vector<CountTable> os_count_tables(const PrimeModulus& p, uint64_t m, uint64_t k_max);
CountTable count_odlyzko_stanley(const PrimeModulus& p, uint64_t m, uint64_t k);

// N*_m(b) summed over all k: coefficients of prod_{x in F_p^*} (1 + X^{x^m})
// mod X^p - 1. The entries add up to 2^{p-1}.
std::vector<Integer> total_count(const PrimeModulus& p, uint64_t m);

// T = sum over x in F_p^* of x^m: p-1 when (p-1) | m, else 0. The complement
// of a k-subset sums to T - b, giving N*_m(k, b) = N*_m(p-1-k, T-b).
uint64_t complement_target(const PrimeModulus& p, uint64_t m);

// The lifting decomposition audit: per b, the value claimed by expanding
// N*_m(k, b) over subgroup counts M(j, b) with composition weights
// prod C(m, i_t), next to the true count, and their difference. Requires
// m | p-1. Purely descriptive; nothing asserts the differences vanish.
struct AuditRow {
  uint64_t b = 0;
  Integer claimed;
  Integer actual;
  Integer diff;  // claimed - actual
};
std::vector<AuditRow> decomposition_audit(const PrimeModulus& p, uint64_t m, uint64_t k);

}  // namespace wsieve
