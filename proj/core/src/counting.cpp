#include <wsieve/counting.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace wsieve {

Integer CountTable::total() const {
  Integer s = 0;
  for (const Integer& c : counts) s += c;
  return s;
}

// ---- GroupRingPoly ----

GroupRingPoly::GroupRingPoly(uint64_t p) : p_(p), coeffs_(p) {}

GroupRingPoly GroupRingPoly::unit(uint64_t p) {
  GroupRingPoly r(p);
  r.coeffs_[0] = 1;
  return r;
}

GroupRingPoly GroupRingPoly::monomial(uint64_t p, uint64_t r, const Rational& c) {
  GroupRingPoly poly(p);
  poly.coeffs_[r % p] = c;
  return poly;
}

GroupRingPoly GroupRingPoly::power_sum(const ValuedDomain& domain, uint64_t i) {
  GroupRingPoly poly(domain.modulus().value());
  const uint64_t p = poly.p_;
  for (const auto& item : domain.items()) {
    poly.coeffs_[mul_mod(i % p, item.value, p)] += item.multiplicity;
  }
  return poly;
}

GroupRingPoly& GroupRingPoly::operator+=(const GroupRingPoly& o) {
  if (p_ != o.p_) throw std::invalid_argument("group ring mismatch");
  for (uint64_t r = 0; r < p_; ++r) coeffs_[r] += o.coeffs_[r];
  return *this;
}

GroupRingPoly operator+(GroupRingPoly a, const GroupRingPoly& b) {
  a += b;
  return a;
}

GroupRingPoly operator*(const GroupRingPoly& a, const GroupRingPoly& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("group ring mismatch");
  const uint64_t p = a.p_;
  GroupRingPoly r(p);
  for (uint64_t i = 0; i < p; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (uint64_t j = 0; j < p; ++j) {
      if (b.coeffs_[j] == 0) continue;
      uint64_t idx = i + j;
      if (idx >= p) idx -= p;
      r.coeffs_[idx] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

GroupRingPoly& GroupRingPoly::scale(const Rational& c) {
  for (Rational& coeff : coeffs_) coeff *= c;
  return *this;
}

bool operator==(const GroupRingPoly& a, const GroupRingPoly& b) {
  return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
}

// ---- shared validation ----

namespace {

void require_k_max(const ValuedDomain& domain, uint64_t k_max) {
  if (k_max > domain.size()) {
    throw std::invalid_argument("k_max = " + std::to_string(k_max) +
                                " exceeds domain size n = " + std::to_string(domain.size()));
  }
}

std::vector<CountTable> pack_tables(uint64_t p, std::vector<std::vector<Integer>> rows) {
  std::vector<CountTable> tables;
  tables.reserve(rows.size());
  for (uint64_t k = 0; k < rows.size(); ++k) {
    tables.push_back(CountTable{p, k, std::move(rows[k])});
  }
  return tables;
}

}  // namespace

// ---- counter 1: slot-by-slot dynamic program ----

std::vector<CountTable> count_dp(const ValuedDomain& domain, uint64_t k_max) {
  require_k_max(domain, k_max);
  const uint64_t p = domain.modulus().value();

  std::vector<std::vector<Integer>> table(k_max + 1, std::vector<Integer>(p));
  table[0][0] = 1;

  uint64_t slots_done = 0;
  for (const auto& item : domain.items()) {
    for (uint64_t rep = 0; rep < item.multiplicity; ++rep) {
      ++slots_done;
      const uint64_t top = std::min(slots_done, k_max);
      const uint64_t v = item.value;
      for (uint64_t k = top; k >= 1; --k) {
        auto& dst = table[k];
        const auto& src = table[k - 1];
        for (uint64_t b = 0; b < p; ++b) {
          const uint64_t from = (b >= v) ? b - v : b + p - v;
          dst[b] += src[from];
        }
      }
    }
  }
  return pack_tables(p, std::move(table));
}

// ---- counter 2: truncated generating function in the group ring ----

std::vector<CountTable> count_genfun(const ValuedDomain& domain, uint64_t k_max) {
  require_k_max(domain, k_max);
  const uint64_t p = domain.modulus().value();

  // acc[k] is the X-layer of t^k; the product starts at 1.
  std::vector<GroupRingPoly> acc(k_max + 1, GroupRingPoly(p));
  acc[0] = GroupRingPoly::unit(p);
  std::vector<bool> live(k_max + 1, false);
  live[0] = true;

  for (const auto& item : domain.items()) {
    // (1 + t X^v)^mu expanded: factor[j] = C(mu, j) X^{jv}.
    const uint64_t j_max = std::min(item.multiplicity, k_max);
    std::vector<GroupRingPoly> factor;
    factor.reserve(j_max + 1);
    for (uint64_t j = 0; j <= j_max; ++j) {
      Integer c;
      mpz_bin_uiui(c.get_mpz_t(), item.multiplicity, j);
      factor.push_back(GroupRingPoly::monomial(p, mul_mod(j, item.value, p), Rational(c)));
    }

    std::vector<GroupRingPoly> next(k_max + 1, GroupRingPoly(p));
    std::vector<bool> next_live(k_max + 1, false);
    for (uint64_t i = 0; i <= k_max; ++i) {
      if (!live[i]) continue;
      for (uint64_t j = 0; j <= j_max && i + j <= k_max; ++j) {
        next[i + j] += acc[i] * factor[j];
        next_live[i + j] = true;
      }
    }
    acc = std::move(next);
    live = std::move(next_live);
  }

  std::vector<std::vector<Integer>> rows(k_max + 1, std::vector<Integer>(p));
  for (uint64_t k = 0; k <= k_max; ++k) {
    for (uint64_t b = 0; b < p; ++b) {
      const Rational& c = acc[k].at(b);
      if (c.get_den() != 1) {
        throw std::logic_error("generating-function coefficient is not integral");
      }
      rows[k][b] = c.get_num();
    }
  }
  return pack_tables(p, std::move(rows));
}

// ---- counter 3: Newton recurrence over power sums ----

NewtonCounter::NewtonCounter(const ValuedDomain& domain)
    : p_(domain.modulus().value()), n_(domain.size()), items_(domain.items()) {}

const std::vector<NewtonCounter::SparseTerm>& NewtonCounter::power_sum_support(uint64_t i) {
  while (power_sums_.size() < i) {
    const uint64_t next_i = power_sums_.size() + 1;
    // P_i = sum over items of mu * X^{(i v) mod p}, merged by exponent.
    std::vector<unsigned long> dense(p_, 0);
    for (const auto& item : items_) {
      dense[mul_mod(next_i % p_, item.value, p_)] += item.multiplicity;
    }
    std::vector<SparseTerm> sparse;
    for (uint64_t r = 0; r < p_; ++r) {
      if (dense[r] != 0) sparse.push_back({r, dense[r]});
    }
    power_sums_.push_back(std::move(sparse));
  }
  return power_sums_[i - 1];
}

CountTable NewtonCounter::next() {
  if (layers_.empty()) {
    std::vector<Integer> e0(p_);
    e0[0] = 1;
    layers_.push_back(std::move(e0));
    return CountTable{p_, 0, layers_.back()};
  }

  const uint64_t k = layers_.size();
  if (k > n_) {
    throw std::invalid_argument("layer k = " + std::to_string(k) +
                                " exceeds domain size n = " + std::to_string(n_));
  }

  // acc = sum_{i=1..k} (-1)^{i-1} P_i * e_{k-i}  (equals k * e_k).
  std::vector<Integer> acc(p_);
  for (uint64_t i = 1; i <= k; ++i) {
    const auto& terms = power_sum_support(i);
    const auto& layer = layers_[k - i];
    const bool add = (i % 2 == 1);
    for (const SparseTerm& t : terms) {
      for (uint64_t b = 0; b < p_; ++b) {
        const uint64_t from = (b >= t.index) ? b - t.index : b + p_ - t.index;
        const mpz_srcptr src = layer[from].get_mpz_t();
        if (mpz_sgn(src) == 0) continue;
        if (add) {
          mpz_addmul_ui(acc[b].get_mpz_t(), src, t.weight);
        } else {
          mpz_submul_ui(acc[b].get_mpz_t(), src, t.weight);
        }
      }
    }
  }

  // e_k = acc / k with an exactness check: a non-integral layer would mean
  // the sieve recurrence itself is broken.
  std::vector<Integer> layer(p_);
  for (uint64_t b = 0; b < p_; ++b) {
    if (mpz_sgn(acc[b].get_mpz_t()) < 0 ||
        !mpz_divisible_ui_p(acc[b].get_mpz_t(), static_cast<unsigned long>(k))) {
      throw std::logic_error("sieve integrality violated at layer k = " + std::to_string(k) +
                             ", b = " + std::to_string(b));
    }
    mpz_divexact_ui(layer[b].get_mpz_t(), acc[b].get_mpz_t(), static_cast<unsigned long>(k));
  }
  layers_.push_back(std::move(layer));
  return CountTable{p_, k, layers_.back()};
}

std::vector<CountTable> count_newton(const ValuedDomain& domain, uint64_t k_max) {
  require_k_max(domain, k_max);
  NewtonCounter counter(domain);
  std::vector<CountTable> tables;
  tables.reserve(k_max + 1);
  for (uint64_t k = 0; k <= k_max; ++k) tables.push_back(counter.next());
  return tables;
}

// ---- Odlyzko-Stanley instances ----

std::vector<CountTable> os_count_tables(const PrimeModulus& p, uint64_t m, uint64_t k_max) {
  if (k_max > p.value() - 1) {
    throw std::invalid_argument("k_max must be at most p-1");
  }
  return count_newton(ValuedDomain::power_instance(power_structure(p, m)), k_max);
}

CountTable count_odlyzko_stanley(const PrimeModulus& p, uint64_t m, uint64_t k) {
  auto tables = os_count_tables(p, m, k);
  return std::move(tables.back());
}

std::vector<Integer> total_count(const PrimeModulus& p, uint64_t m) {
  const auto structure = power_structure(p, m);
  const uint64_t P = p.value();

  std::vector<Integer> binoms(structure.d + 1);
  for (uint64_t j = 0; j <= structure.d; ++j) binoms[j] = binomial(structure.d, j);

  // prod over h in H of (1 + X^h)^d, reduced mod X^p - 1.
  std::vector<Integer> acc(P);
  acc[0] = 1;
  for (uint64_t h : structure.members) {
    std::vector<Integer> next(P);
    for (uint64_t b = 0; b < P; ++b) {
      if (acc[b] == 0) continue;
      uint64_t idx = b;
      for (uint64_t j = 0; j <= structure.d; ++j) {
        mpz_addmul(next[idx].get_mpz_t(), acc[b].get_mpz_t(), binoms[j].get_mpz_t());
        idx += h;
        if (idx >= P) idx -= P;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

uint64_t complement_target(const PrimeModulus& p, uint64_t m) {
  return (m % (p.value() - 1) == 0) ? p.value() - 1 : 0;
}

std::vector<AuditRow> decomposition_audit(const PrimeModulus& p, uint64_t m, uint64_t k) {
  const uint64_t P = p.value();
  if ((P - 1) % m != 0) {
    throw std::invalid_argument(
        "decomposition audit needs m | p-1; reduce m to gcd(m, p-1) = " +
        std::to_string(std::gcd(m, P - 1)));
  }
  if (k > P - 1) throw std::invalid_argument("k must be at most p-1");

  const auto structure = power_structure(p, m);
  const uint64_t s = structure.s;

  std::vector<AuditRow> rows(P);
  for (uint64_t b = 0; b < P; ++b) rows[b].b = b;

  const auto actual = count_odlyzko_stanley(p, m, k);

  if (k == 0) {
    for (uint64_t b = 0; b < P; ++b) {
      rows[b].claimed = (b == 0) ? 1 : 0;
      rows[b].actual = actual.at(b);
      rows[b].diff = rows[b].claimed - rows[b].actual;
    }
    return rows;
  }

  // Composition weights W_j = [t^k] g(t)^j with g(t) = sum_{i>=1} C(m, i) t^i:
  // the number of ways to fill j chosen cosets with k preimages in total.
  const uint64_t j_max = std::min(s, k);
  std::vector<Integer> g(std::min(m, k) + 1);
  for (uint64_t i = 1; i < g.size(); ++i) g[i] = binomial(m, i);

  std::vector<Integer> weight(j_max + 1);
  {
    std::vector<Integer> power(k + 1);
    power[0] = 1;
    for (uint64_t j = 1; j <= j_max; ++j) {
      std::vector<Integer> next(k + 1);
      for (uint64_t a = 0; a <= k; ++a) {
        if (power[a] == 0) continue;
        for (uint64_t i = 1; i < g.size() && a + i <= k; ++i) {
          next[a + i] += power[a] * g[i];
        }
      }
      power = std::move(next);
      weight[j] = power[k];
    }
  }

  // M(j, b): plain j-subset counts over the subgroup H itself.
  const auto subgroup_tables =
      count_newton(ValuedDomain::from_values(p, structure.members), j_max);

  for (uint64_t b = 0; b < P; ++b) {
    Integer claimed = 0;
    for (uint64_t j = 1; j <= j_max; ++j) {
      if (weight[j] == 0) continue;
      claimed += subgroup_tables[j].at(b) * weight[j];
    }
    rows[b].claimed = std::move(claimed);
    rows[b].actual = actual.at(b);
    rows[b].diff = rows[b].claimed - rows[b].actual;
  }
  return rows;
}

}  // namespace wsieve
