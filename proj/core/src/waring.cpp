#include <wsieve/waring.hpp>

#include <wsieve/field.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace wsieve {

namespace {

// Direct sumsets are O(p |S1|); past this size the FFT route wins.
constexpr uint64_t kConvolutionThreshold = 10000;

void fft(std::vector<std::complex<double>>& a, bool inverse) {
  const size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double angle = 2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? -1 : 1);
    const std::complex<double> wlen(std::cos(angle), std::sin(angle));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t j = 0; j < len / 2; ++j) {
        const std::complex<double> u = a[i + j];
        const std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    for (auto& x : a) x /= static_cast<double>(n);
  }
}

std::vector<bool> sumset_direct(const std::vector<bool>& cur,
                                const std::vector<uint64_t>& shifts, uint64_t p) {
  std::vector<bool> next(p, false);
  for (uint64_t b = 0; b < p; ++b) {
    if (!cur[b]) continue;
    for (uint64_t s : shifts) {
      uint64_t idx = b + s;
      if (idx >= p) idx -= p;
      next[idx] = true;
    }
  }
  return next;
}

// Indicator convolution: counts are bounded by p, far below the double
// mantissa, so thresholding at 0.5 is exact.
std::vector<bool> sumset_fft(const std::vector<bool>& cur,
                             const std::vector<std::complex<double>>& base_hat,
                             uint64_t p, size_t size) {
  std::vector<std::complex<double>> a(size);
  for (uint64_t b = 0; b < p; ++b) {
    if (cur[b]) a[b] = 1.0;
  }
  fft(a, false);
  for (size_t i = 0; i < size; ++i) a[i] *= base_hat[i];
  fft(a, true);
  std::vector<bool> next(p, false);
  for (size_t i = 0; i < size && i < 2 * p; ++i) {
    if (a[i].real() > 0.5) next[i % p] = true;
  }
  return next;
}

std::vector<uint64_t> complement(const std::vector<bool>& covered) {
  std::vector<uint64_t> missing;
  for (uint64_t b = 0; b < covered.size(); ++b) {
    if (!covered[b]) missing.push_back(b);
  }
  return missing;
}

}  // namespace

WaringResult gamma_ordinary(const PrimeModulus& p, uint64_t m, bool allow_zero) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  const uint64_t P = p.value();

  std::vector<bool> base(P, false);
  if (allow_zero) base[0] = true;  // 0^m = 0
  for (uint64_t x = 1; x < P; ++x) base[p.pow(x, m)] = true;

  std::vector<uint64_t> shifts;
  for (uint64_t b = 0; b < P; ++b) {
    if (base[b]) shifts.push_back(b);
  }

  WaringResult result;
  result.kind = WaringResult::Kind::ordinary;
  result.p = P;
  result.m = m;
  result.zero_allowed = allow_zero;

  // Without zero the summand set is the subgroup H; when H = {1} the k-fold
  // sums are the single residue k, so no k ever covers.
  if (!allow_zero && shifts.size() == 1) {
    for (uint64_t k = 1; k <= P - 1; ++k) {
      std::vector<bool> covered(P, false);
      covered[k % P] = true;
      result.coverage[k] = complement(covered);
    }
    return result;
  }

  const bool use_fft = P > kConvolutionThreshold;
  size_t fft_size = 1;
  std::vector<std::complex<double>> base_hat;
  if (use_fft) {
    while (fft_size < 2 * P) fft_size <<= 1;
    base_hat.assign(fft_size, 0.0);
    for (uint64_t s : shifts) base_hat[s] = 1.0;
    fft(base_hat, false);
  }

  std::vector<bool> cur = base;
  // With zero allowed coverage is monotone; without, two or more summand
  // values still force full coverage by k = p-1.
  for (uint64_t k = 1; k <= 2 * P; ++k) {
    auto missing = complement(cur);
    result.coverage[k] = missing;
    if (missing.empty()) {
      result.value = k;
      return result;
    }
    cur = use_fft ? sumset_fft(cur, base_hat, P, fft_size) : sumset_direct(cur, shifts, P);
  }
  return result;  // unreachable for the zero-allowed convention
}

WaringResult gamma_distinct(const PrimeModulus& p, uint64_t m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  const uint64_t P = p.value();

  WaringResult result;
  result.kind = WaringResult::Kind::distinct;
  result.p = P;
  result.m = m;

  NewtonCounter counter(ValuedDomain::power_instance(power_structure(p, m)));
  counter.next();  // skip k = 0
  for (uint64_t k = 1; k <= P - 1; ++k) {
    const CountTable table = counter.next();
    std::vector<uint64_t> missing;
    for (uint64_t b = 0; b < P; ++b) {
      if (table.at(b) == 0) missing.push_back(b);
    }
    const bool covered = missing.empty();
    result.coverage[k] = std::move(missing);
    if (covered) {
      result.value = k;
      return result;
    }
  }
  return result;  // no k covers: the distinct Waring number does not exist
}

WaringSuiteReport waring_bound_suite(uint64_t p_max) {
  if (p_max < 3) throw std::invalid_argument("p_max must be >= 3");
  WaringSuiteReport report;
  for (uint64_t q = 3; q <= p_max; q += 2) {
    if (!is_prime_u64(q)) continue;
    const PrimeModulus p(q);
    for (uint64_t m : divisors(q - 1)) {
      WaringSuiteRow row;
      row.p = q;
      row.m = m;
      row.gamma = gamma_ordinary(p, m).value.value();
      row.gamma_dist = gamma_distinct(p, m).value;
      row.cauchy_asserted = m < q - 1;
      row.cauchy_ok = row.gamma <= m;
      row.ordering_ok = !row.gamma_dist.has_value() || row.gamma <= *row.gamma_dist;
      const double delta =
          (m == 1) ? 1.0
                   : 1.0 - std::log(static_cast<double>(m)) / std::log(static_cast<double>(q));
      row.prop13_rhs = std::pow(4.0, 1.0 / delta);
      if (row.cauchy_asserted && !row.cauchy_ok) report.all_cauchy_ok = false;
      if (!row.ordering_ok) report.all_ordering_ok = false;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace wsieve
