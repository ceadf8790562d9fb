#pragma once

#include <wsieve/numeric.hpp>
#include <wsieve/real_interval.hpp>
#include <wsieve/report.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace wsieve {

// Cycle type of a permutation in S_k: counts[i-1] cycles of length i,
// with sum i * c_i = k. Determines the conjugacy class, its size, and the
// permutation sign.
class PartitionType {
 public:
  PartitionType(uint32_t k, std::vector<uint32_t> counts);

  uint32_t k() const { return k_; }
  const std::vector<uint32_t>& counts() const { return counts_; }
  uint32_t count_of(uint32_t length) const { return counts_[length - 1]; }

  uint32_t cycle_count() const;  // l = sum c_i
  int sign() const;              // (-1)^(k - l)
  Integer class_size() const;    // k! / prod_i i^c_i c_i!

 private:
  uint32_t k_;
  std::vector<uint32_t> counts_;
};

// Every cycle type of S_k exactly once, descending lexicographic on
// (c_k, ..., c_1) -- partitions of k with the largest parts first.
void for_each_type(uint32_t k, const std::function<void(const PartitionType&)>& fn);
std::vector<PartitionType> enumerate_types(uint32_t k);

// (x)_k = x (x-1) ... (x-k+1), with (x)_0 = 1.
Rational falling_factorial(const Rational& x, uint32_t k);
RealInterval falling_factorial(const RealInterval& x, uint32_t k);

// C(x, k) = (x)_k / k! for rational (exact) or enclosed real x.
Rational gen_binomial(const Rational& x, uint32_t k);
RealInterval gen_binomial(const RealInterval& x, uint32_t k);

// C_k(t_1, ..., t_k) = sum over types of class_size * prod t_i^{c_i}.
// With all t_i = q this equals the rising factorial (q+k-1)_k.
Rational cycle_index_eval(uint32_t k, const std::vector<Rational>& t);

// The box double-count: C(ns, k) = sum_j C(s,j) * sum over compositions
// i_1+...+i_j = k, 1 <= i_t <= n, of prod C(n, i_t). Exact on both sides.
Integer box_identity_rhs(uint64_t n, uint64_t s, uint64_t k);
BoundReport box_identity_check(uint64_t n, uint64_t s, uint64_t k);

// The distinct-coordinate sieve specialized to counting injective tuples:
// sum over types of sign * class_size * n^{l} = (n)_k.
Integer sieve_signed_sum(uint64_t n, uint32_t k);
BoundReport sieve_identity_check(uint64_t n, uint32_t k);

}  // namespace wsieve
