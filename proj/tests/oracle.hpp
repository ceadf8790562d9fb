// Test-side reference implementations, deliberately independent of the
// production counters: plain subset enumeration and textbook recurrences.
#pragma once

#include <wsieve/counting.hpp>
#include <wsieve/numeric.hpp>

#include <cstdint>
#include <vector>

namespace oracle {

// Counts k-subsets of an explicit slot list by enumerating every
// combination. Slots may repeat values; this is the elementwise view.
inline std::vector<wsieve::Integer> subset_counts(const std::vector<uint64_t>& slots,
                                                  uint64_t p, uint64_t k) {
  std::vector<wsieve::Integer> counts(p);
  const uint64_t n = slots.size();
  if (k > n) return counts;
  if (k == 0) {
    counts[0] = 1;
    return counts;
  }
  std::vector<uint64_t> idx(k);
  for (uint64_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    uint64_t sum = 0;
    for (uint64_t i : idx) sum = (sum + slots[i]) % p;
    counts[sum] += 1;
    // next combination in lexicographic order
    uint64_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (uint64_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return counts;
}

// Slot list of a domain (values repeated by multiplicity).
inline std::vector<uint64_t> slots_of(const wsieve::ValuedDomain& domain) {
  std::vector<uint64_t> slots;
  for (const auto& item : domain.items()) {
    for (uint64_t r = 0; r < item.multiplicity; ++r) slots.push_back(item.value);
  }
  return slots;
}

inline std::vector<wsieve::Integer> domain_counts(const wsieve::ValuedDomain& domain,
                                                  uint64_t k) {
  return subset_counts(slots_of(domain), domain.modulus().value(), k);
}

// N*_m(k, b) from first principles: k-subsets of F_p^* summed through x^m.
inline std::vector<wsieve::Integer> os_counts(uint64_t p, uint64_t m, uint64_t k) {
  std::vector<uint64_t> slots;
  for (uint64_t x = 1; x < p; ++x) slots.push_back(wsieve::pow_mod(x, m, p));
  return subset_counts(slots, p, k);
}

// Euler's pentagonal-number recurrence for the partition numbers p(n).
inline wsieve::Integer partition_count(uint32_t n) {
  std::vector<wsieve::Integer> pc(n + 1);
  pc[0] = 1;
  for (uint32_t i = 1; i <= n; ++i) {
    wsieve::Integer total = 0;
    for (uint32_t j = 1;; ++j) {
      const uint64_t g1 = static_cast<uint64_t>(j) * (3 * j - 1) / 2;
      const uint64_t g2 = static_cast<uint64_t>(j) * (3 * j + 1) / 2;
      if (g1 > i) break;
      const wsieve::Integer sign = (j % 2 == 1) ? 1 : -1;
      total += sign * pc[i - g1];
      if (g2 <= i) total += sign * pc[i - g2];
    }
    pc[i] = total;
  }
  return pc[n];
}

}  // namespace oracle
