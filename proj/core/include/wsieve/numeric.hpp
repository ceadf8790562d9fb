#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace wsieve {

// Exact arithmetic backbone: counts are arbitrary-precision integers,
// intermediate sieve coefficients are exact rationals.
using Integer = mpz_class;
using Rational = mpq_class;

// Machine-word modular helpers; products go through 128-bit intermediates
// so any modulus below 2^63 is safe.
uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t mod);
uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(uint64_t n);

// Smallest prime factor found by trial division up to `limit`; 0 when no
// factor below the limit exists.
uint64_t small_divisor(uint64_t n, uint64_t limit = 100000);

// All positive divisors of n, ascending.
std::vector<uint64_t> divisors(uint64_t n);

Integer factorial(uint64_t k);
Integer binomial(uint64_t n, uint64_t k);
Integer integer_pow(const Integer& base, uint64_t exp);
Rational rational_pow(const Rational& base, uint64_t exp);

}  // namespace wsieve
