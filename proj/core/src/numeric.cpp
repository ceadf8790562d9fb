#include <wsieve/numeric.hpp>

#include <algorithm>

namespace wsieve {

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t mod) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % mod);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod) {
  uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

namespace {

bool miller_rabin_witness(uint64_t n, uint64_t a, uint64_t d, int r) {
  uint64_t x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;  // a witnesses compositeness
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This base set is deterministic for every n < 3.3e24, hence for all u64.
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

uint64_t small_divisor(uint64_t n, uint64_t limit) {
  if (n % 2 == 0) return 2;
  for (uint64_t q = 3; q <= limit && q * q <= n; q += 2) {
    if (n % q == 0) return q;
  }
  return 0;
}

std::vector<uint64_t> divisors(uint64_t n) {
  std::vector<uint64_t> low, high;
  for (uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      low.push_back(d);
      if (d != n / d) high.push_back(n / d);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

Integer factorial(uint64_t k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Integer binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer integer_pow(const Integer& base, uint64_t exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational rational_pow(const Rational& base, uint64_t exp) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), exp);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), exp);
  return r;  // base canonical => powers canonical
}

}  // namespace wsieve
