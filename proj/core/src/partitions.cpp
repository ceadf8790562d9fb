#include <wsieve/partitions.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wsieve {

PartitionType::PartitionType(uint32_t k, std::vector<uint32_t> counts)
    : k_(k), counts_(std::move(counts)) {
  if (k_ == 0) throw std::invalid_argument("cycle type needs k >= 1");
  if (counts_.size() != k_) {
    throw std::invalid_argument("cycle type needs exactly k count slots");
  }
  uint64_t weighted = 0;
  for (uint32_t i = 1; i <= k_; ++i) weighted += static_cast<uint64_t>(i) * counts_[i - 1];
  if (weighted != k_) {
    throw std::invalid_argument("cycle counts must satisfy sum i*c_i = k");
  }
}

uint32_t PartitionType::cycle_count() const {
  uint32_t l = 0;
  for (uint32_t c : counts_) l += c;
  return l;
}

int PartitionType::sign() const {
  return ((k_ - cycle_count()) % 2 == 0) ? 1 : -1;
}

Integer PartitionType::class_size() const {
  // k! / prod_i i^{c_i} c_i!
  Integer denom = 1;
  for (uint32_t i = 1; i <= k_; ++i) {
    const uint32_t c = counts_[i - 1];
    if (c == 0) continue;
    denom *= integer_pow(Integer(i), c) * factorial(c);
  }
  Integer size;
  mpz_divexact(size.get_mpz_t(), factorial(k_).get_mpz_t(), denom.get_mpz_t());
  return size;
}

namespace {

// Emits partitions of `remaining` with parts <= `max_part`, largest part
// first. That ordering is descending lexicographic on (c_k, ..., c_1).
void emit_partitions(uint32_t k, uint32_t remaining, uint32_t max_part,
                     std::vector<uint32_t>& counts,
                     const std::function<void(const PartitionType&)>& fn) {
  if (remaining == 0) {
    fn(PartitionType(k, counts));
    return;
  }
  for (uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
    ++counts[part - 1];
    emit_partitions(k, remaining - part, part, counts, fn);
    --counts[part - 1];
  }
}

}  // namespace

void for_each_type(uint32_t k, const std::function<void(const PartitionType&)>& fn) {
  if (k == 0) throw std::invalid_argument("cycle types need k >= 1");
  std::vector<uint32_t> counts(k, 0);
  emit_partitions(k, k, k, counts, fn);
}

std::vector<PartitionType> enumerate_types(uint32_t k) {
  std::vector<PartitionType> types;
  for_each_type(k, [&](const PartitionType& t) { types.push_back(t); });
  return types;
}

Rational falling_factorial(const Rational& x, uint32_t k) {
  Rational result = 1;
  Rational term = x;
  for (uint32_t j = 0; j < k; ++j) {
    result *= term;
    term -= 1;
  }
  result.canonicalize();
  return result;
}

RealInterval falling_factorial(const RealInterval& x, uint32_t k) {
  RealInterval result = RealInterval::exact(1L, x.precision());
  for (uint32_t j = 0; j < k; ++j) {
    result = result * (x - RealInterval::exact(static_cast<long>(j), x.precision()));
  }
  return result;
}

Rational gen_binomial(const Rational& x, uint32_t k) {
  Rational result = falling_factorial(x, k) / Rational(factorial(k));
  result.canonicalize();
  return result;
}

RealInterval gen_binomial(const RealInterval& x, uint32_t k) {
  return falling_factorial(x, k) /
         RealInterval::exact(factorial(k), x.precision());
}

Rational cycle_index_eval(uint32_t k, const std::vector<Rational>& t) {
  if (t.size() != k) throw std::invalid_argument("cycle index needs k arguments");
  Rational total = 0;
  for_each_type(k, [&](const PartitionType& type) {
    Rational term(type.class_size());
    for (uint32_t i = 1; i <= k; ++i) {
      const uint32_t c = type.count_of(i);
      if (c > 0) term *= rational_pow(t[i - 1], c);
    }
    total += term;
  });
  total.canonicalize();
  return total;
}

Integer box_identity_rhs(uint64_t n, uint64_t s, uint64_t k) {
  if (k == 0) return 1;
  // [t^k] of g(t)^j with g(t) = sum_{i=1..n} C(n,i) t^i, summed against C(s,j).
  std::vector<Integer> g(std::min(n, k) + 1);
  for (uint64_t i = 1; i < g.size(); ++i) g[i] = binomial(n, i);

  std::vector<Integer> power(k + 1);
  power[0] = 1;
  Integer rhs = 0;
  const uint64_t j_max = std::min(s, k);
  for (uint64_t j = 1; j <= j_max; ++j) {
    std::vector<Integer> next(k + 1);
    for (uint64_t a = 0; a <= k; ++a) {
      if (power[a] == 0) continue;
      for (uint64_t i = 1; i < g.size() && a + i <= k; ++i) {
        next[a + i] += power[a] * g[i];
      }
    }
    power = std::move(next);
    rhs += binomial(s, j) * power[k];
  }
  return rhs;
}

namespace {

BoundReport equality_report(std::string name, std::string instance,
                            const Integer& lhs, const Integer& rhs) {
  BoundReport r;
  r.name = std::move(name);
  r.instance = std::move(instance);
  r.lhs = mpz_get_d(lhs.get_mpz_t());
  r.rhs = mpz_get_d(rhs.get_mpz_t());
  r.holds = (lhs == rhs);
  r.slack = r.rhs - r.lhs;
  r.numeric_error = 0;
  return r;
}

}  // namespace

BoundReport box_identity_check(uint64_t n, uint64_t s, uint64_t k) {
  if (n < 1 || s < 1) throw std::invalid_argument("box identity needs n, s >= 1");
  if (k > n * s) throw std::invalid_argument("box identity needs k <= n*s");
  const Integer lhs = binomial(n * s, k);
  const Integer rhs = box_identity_rhs(n, s, k);
  return equality_report("identity-box",
                         "n=" + std::to_string(n) + " s=" + std::to_string(s) +
                             " k=" + std::to_string(k),
                         lhs, rhs);
}

Integer sieve_signed_sum(uint64_t n, uint32_t k) {
  Integer total = 0;
  const Integer base(static_cast<unsigned long>(n));
  for_each_type(k, [&](const PartitionType& type) {
    Integer term = type.class_size() * integer_pow(base, type.cycle_count());
    if (type.sign() < 0) {
      total -= term;
    } else {
      total += term;
    }
  });
  return total;
}

BoundReport sieve_identity_check(uint64_t n, uint32_t k) {
  if (k < 1) throw std::invalid_argument("sieve identity needs k >= 1");
  const Integer lhs = sieve_signed_sum(n, k);
  const Rational rhs_q = falling_factorial(Rational(static_cast<unsigned long>(n)), k);
  const Integer rhs = rhs_q.get_num();  // integer argument => integer value
  return equality_report("identity-sieve",
                         "n=" + std::to_string(n) + " k=" + std::to_string(k),
                         lhs, rhs);
}

}  // namespace wsieve
