#pragma once

#include <wsieve/counting.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace wsieve {

struct WaringResult {
  enum class Kind { ordinary, distinct };

  Kind kind = Kind::ordinary;
  uint64_t p = 0;
  uint64_t m = 0;
  std::optional<uint64_t> value;  // least covering k; nullopt when none exists
  bool zero_allowed = true;       // ordinary kind only: whether 0^m is a summand
  // Per probed k, the residues not representable with exactly k terms
  // (empty vector = full coverage at that k).
  std::map<uint64_t, std::vector<uint64_t>> coverage;
};

// gamma(m, p): least k with every residue a sum of k m-th powers. With zero
// allowed (the default) reachability is monotone and the sumset closure
// always terminates. The zero-excluded variant may have no covering k.
WaringResult gamma_ordinary(const PrimeModulus& p, uint64_t m, bool allow_zero = true);

// gamma'(m, p): least k with every residue a sum of m-th powers of k
// pairwise-distinct units. All k up to p-1 are probed before reporting
// nonexistence; coverage records every probed k.
WaringResult gamma_distinct(const PrimeModulus& p, uint64_t m);

struct WaringSuiteRow {
  uint64_t p = 0;
  uint64_t m = 0;
  uint64_t gamma = 0;
  std::optional<uint64_t> gamma_dist;
  bool cauchy_asserted = false;  // m < p-1
  bool cauchy_ok = true;         // gamma <= m
  bool ordering_ok = true;       // gamma <= gamma' when gamma' exists
  double prop13_rhs = 0;         // 4^{1/delta}, delta = 1 - log_p m (descriptive)
};

struct WaringSuiteReport {
  std::vector<WaringSuiteRow> rows;
  bool all_cauchy_ok = true;
  bool all_ordering_ok = true;
};

// Sweeps p <= p_max and all m | p-1: records gamma and gamma' side by side,
// asserts the Cauchy bound gamma <= m for m < p-1, asserts gamma <= gamma'
// where gamma' exists, and evaluates the 4^{1/delta} bound descriptively.
WaringSuiteReport waring_bound_suite(uint64_t p_max);

}  // namespace wsieve
