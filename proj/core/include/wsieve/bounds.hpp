#pragma once

#include <wsieve/counting.hpp>
#include <wsieve/field.hpp>
#include <wsieve/real_interval.hpp>
#include <wsieve/report.hpp>

#include <cstdint>
#include <vector>

namespace wsieve {

// Every checker returns one report per instance (per b, or per character
// index a). Left sides are exact rationals from the count tables; right
// sides are evaluated as directed-rounding enclosures at `prec` bits, so a
// verdict cannot flip when precision is raised.

// Total-count bound: |N*_m(b) - 2^{p-1}/p| <= (4/sqrt(2 pi)) e^{m sqrt(p) log p}.
// The exponent's log is natural by default; log2_variant evaluates the
// base-2 reading for comparison (descriptive only).
std::vector<BoundReport> check_os_total(const PrimeModulus& p, uint64_t m,
                                        bool log2_variant = false,
                                        unsigned prec = kDefaultPrec);

// Per-k bound at q = p: |N*_m(k,b) - C(p-1,k)/p| <= 2 p^{-1/2} C(m sqrt(p) + 1 + k, k).
std::vector<BoundReport> check_zhu_wan(const PrimeModulus& p, uint64_t m, uint64_t k,
                                       const CountTable& table,
                                       unsigned prec = kDefaultPrec);
std::vector<BoundReport> check_zhu_wan(const PrimeModulus& p, uint64_t m, uint64_t k,
                                       unsigned prec = kDefaultPrec);

// Arbitrary-domain bound: |N(k,b,D) - C(n,k)/p| <= C(Phi(D)+k-1, k), with
// Phi's numeric error folded into the right side's enclosure.
std::vector<BoundReport> check_lemma31(const ValuedDomain& domain, uint64_t k,
                                       const CountTable& table,
                                       const CharacterSumProfile& profile,
                                       unsigned prec = kDefaultPrec);
std::vector<BoundReport> check_lemma31(const ValuedDomain& domain, uint64_t k,
                                       unsigned prec = kDefaultPrec);

// Explicit monomial exponential-sum bounds, one report per a in 1..p-1.
// Regime tags: "cp1" m <= 3p^{1/3} (rhs m sqrt p), "cp2" 3p^{1/3} <= m < sqrt p
// (rhs lambda m^{5/8} p^{5/8}), "cp3" sqrt p <= m < p^{2/3}/3 (rhs lambda
// m^{3/8} p^{3/4}) with lambda = 2/4^{1/3}; "none" falls back to the trivial
// rhs p-1. A parallel hbk1/hbk2/hbk3 tag records the unscaled regime.
std::vector<BoundReport> check_exp_sum(const PrimeModulus& p, uint64_t m,
                                       unsigned prec = kDefaultPrec);

// Conditional main bound: |N*_m(k,b) - C(p-1,k)/p| <= C(p^{1-eps} + mk - m, k).
// Requires m < p^{1-delta} and 0 < eps < delta < 1; throws otherwise.
// Descriptive: epsilon(delta) is ineffective, so no test asserts these rows.
std::vector<BoundReport> check_thm11(const PrimeModulus& p, uint64_t m, uint64_t k,
                                     const BoundParams& params,
                                     const CountTable& table,
                                     unsigned prec = kDefaultPrec);
std::vector<BoundReport> check_thm11(const PrimeModulus& p, uint64_t m, uint64_t k,
                                     const BoundParams& params,
                                     unsigned prec = kDefaultPrec);

// Largest admissible epsilon: the theorem quantifies eps < delta with
// m < p^{1-delta}, so eps must stay below 1 - log_p(m) (capped at 1).
double epsilon_admissible_max(const PrimeModulus& p, uint64_t m);

// Supremum epsilon in (0, epsilon_admissible_max) at which the main bound
// holds for every b, located by bisection to 1e-6. Returns 0 when the bound
// already fails as eps -> 0+. When the bound holds across the whole
// admissible range the cap itself (minus the bisection step) is returned.
double fit_epsilon(const PrimeModulus& p, uint64_t m, uint64_t k,
                   const CountTable& table, unsigned prec = kDefaultPrec);
double fit_epsilon(const PrimeModulus& p, uint64_t m, uint64_t k,
                   unsigned prec = kDefaultPrec);

// Open-problem form C(p^{1-eps}+k-1, k), evaluated at the fitted epsilon.
// Pure slack measurement; never asserted.
std::vector<BoundReport> check_open_problem(const PrimeModulus& p, uint64_t m, uint64_t k,
                                            unsigned prec = kDefaultPrec);

// The solvability window -log(p)/log(c) < k < c p^delta - p^{delta-eps},
// with each integer k inside it verified positive by exact count. The
// simplified window 1/eps < k < (e-1) p^{delta-eps} (the choice
// c = e p^{-eps}) is evaluated alongside whenever that c is in (0,1).
struct SolvabilityRange {
  double k_low = 0, k_high = 0;
  bool empty_interval = false;
  double simple_low = 0, simple_high = 0;
  bool simple_valid = false;

  struct KCheck {
    uint64_t k = 0;
    Integer min_count;
    bool positive = false;
    std::vector<uint64_t> missing_b;  // b with N*_m(k,b) = 0
  };
  std::vector<KCheck> checked;
};
SolvabilityRange solvability_range(const PrimeModulus& p, uint64_t m,
                                   const BoundParams& params,
                                   unsigned prec = kDefaultPrec);

}  // namespace wsieve
