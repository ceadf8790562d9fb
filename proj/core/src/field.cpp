#include <wsieve/field.hpp>

#include <wsieve/domain.hpp>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace wsieve {

PrimeModulus::PrimeModulus(uint64_t p) : p_(p) {
  if (p < 3) {
    throw std::invalid_argument("modulus must be an odd prime >= 3, got " + std::to_string(p));
  }
  if (p % 2 == 0) {
    throw std::invalid_argument("modulus must be odd, got " + std::to_string(p) +
                                " (divisor 2)");
  }
  if (!is_prime_u64(p)) {
    std::string msg = "modulus must be prime, got " + std::to_string(p);
    if (uint64_t d = small_divisor(p); d != 0) {
      msg += " (divisor " + std::to_string(d) + ")";
    }
    throw std::invalid_argument(msg);
  }
}

uint64_t PrimeModulus::reduce(int64_t x) const {
  int64_t r = x % static_cast<int64_t>(p_);
  if (r < 0) r += static_cast<int64_t>(p_);
  return static_cast<uint64_t>(r);
}

uint64_t PrimeModulus::reduce(const Integer& x) const {
  return mpz_fdiv_ui(x.get_mpz_t(), p_);
}

PowerResidueStructure power_structure(const PrimeModulus& p, uint64_t m) {
  if (m < 1) throw std::invalid_argument("exponent m must be >= 1");
  const uint64_t P = p.value();
  const uint64_t d = std::gcd(m, P - 1);
  // x -> x^m has the same image as x -> x^d, so enumerate d-th powers.
  std::vector<bool> seen(P, false);
  for (uint64_t x = 1; x < P; ++x) {
    seen[p.pow(x, d)] = true;
  }
  std::vector<uint64_t> members;
  members.reserve((P - 1) / d);
  for (uint64_t h = 1; h < P; ++h) {
    if (seen[h]) members.push_back(h);
  }
  return PowerResidueStructure{p, m, d, (P - 1) / d, std::move(members)};
}

namespace {

// Kahan-compensated accumulation of unit-magnitude complex terms. The
// returned bound covers both the summation error and the ~1 ulp error of
// each sin/cos evaluation; it stays far below 1e-9 * p for word-size p.
struct CompensatedSum {
  double re = 0, im = 0;
  double c_re = 0, c_im = 0;

  void add(double x, double y) {
    double t, z;
    z = x - c_re;
    t = re + z;
    c_re = (t - re) - z;
    re = t;
    z = y - c_im;
    t = im + z;
    c_im = (t - im) - z;
    im = t;
  }
};

double summation_error_bound(double total_weight) {
  return 8.0 * DBL_EPSILON * total_weight + DBL_MIN;
}

}  // namespace

ExpSum monomial_exp_sum(const PrimeModulus& p, uint64_t m, uint64_t a) {
  const uint64_t P = p.value();
  if (a % P == 0) {
    throw std::invalid_argument("a must be nonzero mod p (principal character excluded)");
  }
  a %= P;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(P);
  CompensatedSum acc;
  for (uint64_t x = 1; x < P; ++x) {
    const uint64_t e = p.mul(a, p.pow(x, m));
    const double t = step * static_cast<double>(e);
    acc.add(std::cos(t), std::sin(t));
  }
  const double mag = std::hypot(acc.re, acc.im);
  return ExpSum{mag, summation_error_bound(static_cast<double>(P - 1))};
}

CharacterSumProfile character_profile(const ValuedDomain& domain) {
  if (domain.empty()) throw std::invalid_argument("character profile of an empty domain");
  const uint64_t P = domain.modulus().value();

  // Twiddle table e(j/p), j = 0..p-1, so each magnitude is a table walk.
  std::vector<double> cs(P), sn(P);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(P);
  for (uint64_t j = 0; j < P; ++j) {
    cs[j] = std::cos(step * static_cast<double>(j));
    sn[j] = std::sin(step * static_cast<double>(j));
  }

  double total_weight = 0;
  for (const auto& it : domain.items()) total_weight += static_cast<double>(it.multiplicity);

  CharacterSumProfile profile;
  profile.p = P;
  profile.magnitudes.resize(P - 1);
  profile.error_bound = summation_error_bound(total_weight);

  for (uint64_t a = 1; a < P; ++a) {
    CompensatedSum acc;
    for (const auto& it : domain.items()) {
      const uint64_t j = mul_mod(a, it.value, P);
      const double mu = static_cast<double>(it.multiplicity);
      acc.add(mu * cs[j], mu * sn[j]);
    }
    const double mag = std::hypot(acc.re, acc.im);
    profile.magnitudes[a - 1] = mag;
    if (mag > profile.phi) {
      profile.phi = mag;
      profile.phi_argmax = a;
    }
  }
  return profile;
}

}  // namespace wsieve
