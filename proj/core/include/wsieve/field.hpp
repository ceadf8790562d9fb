#pragma once

#include <wsieve/numeric.hpp>

#include <cstdint>
#include <vector>

namespace wsieve {

class ValuedDomain;

// A validated odd prime p. Everything else in the library hangs off one of
// these; construction is the only place primality is checked.
class PrimeModulus {
 public:
  // Throws std::invalid_argument for p < 3, even p, or composite p (the
  // message names a witness divisor when trial division finds one).
  explicit PrimeModulus(uint64_t p);

  uint64_t value() const { return p_; }

  uint64_t reduce(int64_t x) const;
  uint64_t reduce(const Integer& x) const;
  uint64_t mul(uint64_t a, uint64_t b) const { return mul_mod(a, b, p_); }
  uint64_t pow(uint64_t base, uint64_t exp) const { return pow_mod(base, exp, p_); }

  friend bool operator==(const PrimeModulus& a, const PrimeModulus& b) {
    return a.p_ == b.p_;
  }

 private:
  uint64_t p_;
};

// The image H = { x^m : x in F_p^* }, i.e. the d-th power residues with
// d = gcd(m, p-1). |H| = s = (p-1)/d and every member satisfies h^s = 1.
struct PowerResidueStructure {
  PrimeModulus p;
  uint64_t m = 1;
  uint64_t d = 1;                  // gcd(m, p-1); each member has d preimages
  uint64_t s = 1;                  // (p-1)/d
  std::vector<uint64_t> members;   // ascending canonical representatives
};

PowerResidueStructure power_structure(const PrimeModulus& p, uint64_t m);

// A numerically evaluated magnitude together with a conservative bound on
// its absolute rounding error.
struct ExpSum {
  double magnitude = 0;
  double error_bound = 0;
};

// | sum over x in F_p^* of e(a x^m / p) |, evaluated with compensated
// summation. The error bound is well below 1e-9 * p for any word-size p.
ExpSum monomial_exp_sum(const PrimeModulus& p, uint64_t m, uint64_t a);

// Additive character sums of a weighted domain. magnitudes[a-1] is
// | sum_x mu(x) e(a x / p) | for a = 1..p-1; phi is their maximum.
struct CharacterSumProfile {
  uint64_t p = 0;
  std::vector<double> magnitudes;  // index a-1
  double phi = 0;
  uint64_t phi_argmax = 1;         // an a attaining phi
  double error_bound = 0;          // uniform bound on each magnitude's error
};

// Throws std::invalid_argument for an empty domain.
CharacterSumProfile character_profile(const ValuedDomain& domain);

}  // namespace wsieve
