#include <wsieve/bounds.hpp>

#include <wsieve/partitions.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wsieve {

namespace {

Rational abs_deviation(const Integer& count, const Rational& mean) {
  Rational lhs = Rational(count) - mean;
  if (lhs < 0) lhs = -lhs;
  lhs.canonicalize();
  return lhs;
}

// Verdict rule shared by every checker: holds iff the exact left side does
// not exceed the right side's upper enclosure (plus any left-side error the
// caller already folded in via an enclosure).
BoundReport make_report(const std::string& name, std::string instance,
                        const Rational& lhs, const RealInterval& rhs,
                        double extra_error = 0) {
  BoundReport r;
  r.name = name;
  r.instance = std::move(instance);
  r.lhs = mpq_get_d(lhs.get_mpq_t());
  r.rhs = rhs.mid();
  r.holds = rhs.possibly_ge(lhs);
  r.numeric_error = rhs.width() + extra_error;
  r.slack = r.rhs - r.lhs;
  return r;
}

std::string pmb(uint64_t p, uint64_t m, uint64_t b) {
  return "p=" + std::to_string(p) + " m=" + std::to_string(m) + " b=" + std::to_string(b);
}

std::string pmkb(uint64_t p, uint64_t m, uint64_t k, uint64_t b) {
  return "p=" + std::to_string(p) + " m=" + std::to_string(m) + " k=" + std::to_string(k) +
         " b=" + std::to_string(b);
}

void require_conditional_params(const BoundParams& params) {
  if (!(params.epsilon > 0 && params.epsilon < params.delta && params.delta < 1)) {
    throw std::invalid_argument("need 0 < epsilon < delta < 1");
  }
}

// Certainly m < p^{1-delta}; throws when the hypothesis is violated or
// cannot be certified.
void require_thm11_hypothesis(const PrimeModulus& p, uint64_t m, double delta, unsigned prec) {
  const RealInterval exponent =
      RealInterval::exact(1.0, prec) - RealInterval::exact(delta, prec);
  const RealInterval limit = pow(RealInterval::exact(p.value(), prec), exponent);
  if (possibly_le(limit, RealInterval::exact(m, prec))) {
    throw std::invalid_argument("hypothesis m < p^(1-delta) violated at m = " +
                                std::to_string(m));
  }
}

RealInterval thm11_rhs(const PrimeModulus& p, uint64_t m, uint64_t k, double epsilon,
                       unsigned prec) {
  const RealInterval exponent =
      RealInterval::exact(1.0, prec) - RealInterval::exact(epsilon, prec);
  const RealInterval x = pow(RealInterval::exact(p.value(), prec), exponent) +
                         RealInterval::exact(Integer(Integer(m) * k - m), prec);
  return gen_binomial(x, static_cast<uint32_t>(k));
}

RealInterval open_problem_rhs(const PrimeModulus& p, uint64_t k, double epsilon,
                              unsigned prec) {
  const RealInterval exponent =
      RealInterval::exact(1.0, prec) - RealInterval::exact(epsilon, prec);
  const RealInterval x = pow(RealInterval::exact(p.value(), prec), exponent) +
                         RealInterval::exact(static_cast<long>(k) - 1, prec);
  return gen_binomial(x, static_cast<uint32_t>(k));
}

}  // namespace

std::vector<BoundReport> check_os_total(const PrimeModulus& p, uint64_t m,
                                        bool log2_variant, unsigned prec) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  const uint64_t P = p.value();
  const auto totals = total_count(p, m);

  Rational mean = Rational(integer_pow(Integer(2), P - 1)) / Rational(Integer(P));
  mean.canonicalize();

  const RealInterval coef =
      RealInterval::exact(4UL, prec) /
      sqrt(RealInterval::exact(2UL, prec) * RealInterval::pi(prec));
  const RealInterval logp = log2_variant ? log2(RealInterval::exact(P, prec))
                                         : log(RealInterval::exact(P, prec));
  const RealInterval rhs =
      coef * exp(RealInterval::exact(m, prec) * sqrt(RealInterval::exact(P, prec)) * logp);

  const std::string name = log2_variant ? "os-total-log2" : "os-total";
  std::vector<BoundReport> reports;
  reports.reserve(P);
  for (uint64_t b = 0; b < P; ++b) {
    reports.push_back(make_report(name, pmb(P, m, b), abs_deviation(totals[b], mean), rhs));
  }
  return reports;
}

std::vector<BoundReport> check_zhu_wan(const PrimeModulus& p, uint64_t m, uint64_t k,
                                       const CountTable& table, unsigned prec) {
  const uint64_t P = p.value();
  if (k < 1 || k > P - 1) throw std::invalid_argument("need 1 <= k <= p-1");

  Rational mean = Rational(binomial(P - 1, k)) / Rational(Integer(P));
  mean.canonicalize();

  // 2 p^{-1/2} C(m sqrt(p) + q/p + k, k) at q = p, so q/p = 1.
  const RealInterval sqrtp = sqrt(RealInterval::exact(P, prec));
  const RealInterval x =
      RealInterval::exact(m, prec) * sqrtp + RealInterval::exact(k + 1, prec);
  const RealInterval rhs = RealInterval::exact(2UL, prec) / sqrtp *
                           gen_binomial(x, static_cast<uint32_t>(k));

  std::vector<BoundReport> reports;
  reports.reserve(P);
  for (uint64_t b = 0; b < P; ++b) {
    reports.push_back(
        make_report("zhuwan", pmkb(P, m, k, b), abs_deviation(table.at(b), mean), rhs));
  }
  return reports;
}

std::vector<BoundReport> check_zhu_wan(const PrimeModulus& p, uint64_t m, uint64_t k,
                                       unsigned prec) {
  return check_zhu_wan(p, m, k, count_odlyzko_stanley(p, m, k), prec);
}

std::vector<BoundReport> check_lemma31(const ValuedDomain& domain, uint64_t k,
                                       const CountTable& table,
                                       const CharacterSumProfile& profile, unsigned prec) {
  const uint64_t P = domain.modulus().value();
  const uint64_t n = domain.size();
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");

  Rational mean = Rational(binomial(n, k)) / Rational(Integer(P));
  mean.canonicalize();

  const RealInterval phi = RealInterval::with_error(profile.phi, profile.error_bound, prec);
  const RealInterval x = phi + RealInterval::exact(static_cast<long>(k) - 1, prec);
  const RealInterval rhs = gen_binomial(x, static_cast<uint32_t>(k));

  std::vector<BoundReport> reports;
  reports.reserve(P);
  for (uint64_t b = 0; b < P; ++b) {
    reports.push_back(make_report(
        "lemma31",
        "p=" + std::to_string(P) + " n=" + std::to_string(n) + " k=" + std::to_string(k) +
            " b=" + std::to_string(b),
        abs_deviation(table.at(b), mean), rhs));
  }
  return reports;
}

std::vector<BoundReport> check_lemma31(const ValuedDomain& domain, uint64_t k,
                                       unsigned prec) {
  const auto tables = count_dp(domain, k);
  return check_lemma31(domain, k, tables[k], character_profile(domain), prec);
}

std::vector<BoundReport> check_exp_sum(const PrimeModulus& p, uint64_t m, unsigned prec) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  const uint64_t P = p.value();

  // Regime selection by exact integer comparisons (no rounding at the seams):
  //   cp1: m <= 3 p^{1/3}        <=>  m^3 <= 27 p
  //   cp2: m <  p^{1/2}          <=>  m^2 <  p
  //   cp3: m <  p^{2/3} / 3      <=>  27 m^3 < p^2
  const Integer m3 = integer_pow(Integer(m), 3);
  const Integer msq = Integer(m) * m;
  std::string cp;
  if (m3 <= 27 * Integer(P)) {
    cp = "cp1";
  } else if (msq < Integer(P)) {
    cp = "cp2";
  } else if (27 * m3 < Integer(P) * Integer(P)) {
    cp = "cp3";
  } else {
    cp = "none";
  }
  std::string hbk;
  if (m3 <= Integer(P)) {
    hbk = "hbk1";
  } else if (msq <= Integer(P)) {
    hbk = "hbk2";
  } else if (m3 <= Integer(P) * Integer(P)) {
    hbk = "hbk3";
  } else {
    hbk = "none";
  }
  const std::string regime = cp + ";" + hbk;

  const RealInterval pi_ = RealInterval::exact(P, prec);
  const RealInterval mi = RealInterval::exact(m, prec);
  const RealInterval lambda =
      RealInterval::exact(2UL, prec) / cbrt(RealInterval::exact(4UL, prec));
  RealInterval rhs(prec);
  if (cp == "cp1") {
    rhs = mi * sqrt(pi_);
  } else if (cp == "cp2") {
    // lambda m^{5/8} p^{5/8}
    const RealInterval e58 = RealInterval::exact(5UL, prec) / RealInterval::exact(8UL, prec);
    rhs = lambda * exp(e58 * (log(mi) + log(pi_)));
  } else if (cp == "cp3") {
    // lambda m^{3/8} p^{3/4}
    const RealInterval e38 = RealInterval::exact(3UL, prec) / RealInterval::exact(8UL, prec);
    const RealInterval e34 = RealInterval::exact(3UL, prec) / RealInterval::exact(4UL, prec);
    rhs = lambda * exp(e38 * log(mi) + e34 * log(pi_));
  } else {
    rhs = RealInterval::exact(P - 1, prec);  // trivial bound
  }

  std::vector<BoundReport> reports;
  reports.reserve(P - 1);
  for (uint64_t a = 1; a < P; ++a) {
    const ExpSum es = monomial_exp_sum(p, m, a);
    const RealInterval lhs_iv = RealInterval::with_error(es.magnitude, es.error_bound, prec);
    BoundReport r;
    r.name = "expsum";
    r.instance = "p=" + std::to_string(P) + " m=" + std::to_string(m) +
                 " a=" + std::to_string(a);
    r.lhs = es.magnitude;
    r.rhs = rhs.mid();
    r.holds = possibly_le(lhs_iv, rhs);
    r.numeric_error = es.error_bound + rhs.width();
    r.slack = r.rhs - r.lhs;
    r.regime = regime;
    reports.push_back(std::move(r));
  }
  return reports;
}

std::vector<BoundReport> check_thm11(const PrimeModulus& p, uint64_t m, uint64_t k,
                                     const BoundParams& params, const CountTable& table,
                                     unsigned prec) {
  const uint64_t P = p.value();
  if (k > P - 1) throw std::invalid_argument("need k <= p-1");
  require_conditional_params(params);
  require_thm11_hypothesis(p, m, params.delta, prec);

  Rational mean = Rational(binomial(P - 1, k)) / Rational(Integer(P));
  mean.canonicalize();
  const RealInterval rhs = thm11_rhs(p, m, k, params.epsilon, prec);

  std::vector<BoundReport> reports;
  reports.reserve(P);
  for (uint64_t b = 0; b < P; ++b) {
    reports.push_back(
        make_report("thm11", pmkb(P, m, k, b), abs_deviation(table.at(b), mean), rhs));
  }
  return reports;
}

std::vector<BoundReport> check_thm11(const PrimeModulus& p, uint64_t m, uint64_t k,
                                     const BoundParams& params, unsigned prec) {
  return check_thm11(p, m, k, params, count_odlyzko_stanley(p, m, k), prec);
}

double epsilon_admissible_max(const PrimeModulus& p, uint64_t m) {
  if (m <= 1) return 1.0;
  return 1.0 - std::log(static_cast<double>(m)) / std::log(static_cast<double>(p.value()));
}

double fit_epsilon(const PrimeModulus& p, uint64_t m, uint64_t k,
                   const CountTable& table, unsigned prec) {
  const uint64_t P = p.value();
  if (k > P - 1) throw std::invalid_argument("need k <= p-1");

  Rational mean = Rational(binomial(P - 1, k)) / Rational(Integer(P));
  mean.canonicalize();
  Rational max_lhs = 0;
  for (uint64_t b = 0; b < P; ++b) {
    max_lhs = std::max(max_lhs, abs_deviation(table.at(b), mean));
  }

  // The right side is decreasing in epsilon, so the holds-region is an
  // interval starting at 0+ and bisection is sound.
  const auto holds_at = [&](double eps) {
    return thm11_rhs(p, m, k, eps, prec).possibly_ge(max_lhs);
  };

  const double eps_max = epsilon_admissible_max(p, m);
  constexpr double kStep = 1e-6;
  if (!holds_at(0.0)) return 0.0;
  if (eps_max <= 2 * kStep) return 0.0;
  if (holds_at(eps_max)) {
    // Holds across the whole admissible range; the cap is the supremum.
    return eps_max - kStep;
  }
  double lo = 0.0, hi = eps_max;
  while (hi - lo > kStep) {
    const double mid = 0.5 * (lo + hi);
    (holds_at(mid) ? lo : hi) = mid;
  }
  return lo;
}

double fit_epsilon(const PrimeModulus& p, uint64_t m, uint64_t k, unsigned prec) {
  return fit_epsilon(p, m, k, count_odlyzko_stanley(p, m, k), prec);
}

std::vector<BoundReport> check_open_problem(const PrimeModulus& p, uint64_t m, uint64_t k,
                                            unsigned prec) {
  const uint64_t P = p.value();
  if (k > P - 1) throw std::invalid_argument("need k <= p-1");
  const CountTable table = count_odlyzko_stanley(p, m, k);
  const double eps = fit_epsilon(p, m, k, table, prec);

  Rational mean = Rational(binomial(P - 1, k)) / Rational(Integer(P));
  mean.canonicalize();
  const RealInterval rhs = open_problem_rhs(p, k, eps, prec);

  std::vector<BoundReport> reports;
  reports.reserve(P);
  for (uint64_t b = 0; b < P; ++b) {
    reports.push_back(make_report(
        "open", pmkb(P, m, k, b) + " eps=" + std::to_string(eps),
        abs_deviation(table.at(b), mean), rhs));
  }
  return reports;
}

SolvabilityRange solvability_range(const PrimeModulus& p, uint64_t m,
                                   const BoundParams& params, unsigned prec) {
  require_conditional_params(params);
  if (!(params.c > 0 && params.c < 1)) throw std::invalid_argument("need 0 < c < 1");
  const uint64_t P = p.value();

  const RealInterval lnp = log(RealInterval::exact(P, prec));
  const RealInterval lnc = log(RealInterval::exact(params.c, prec));
  const RealInterval zero = RealInterval::exact(0L, prec);
  const RealInterval k_low_iv = (zero - lnp) / lnc;

  const RealInterval delta = RealInterval::exact(params.delta, prec);
  const RealInterval eps = RealInterval::exact(params.epsilon, prec);
  const RealInterval p_iv = RealInterval::exact(P, prec);
  const RealInterval k_high_iv =
      RealInterval::exact(params.c, prec) * pow(p_iv, delta) - pow(p_iv, delta - eps);

  SolvabilityRange out;
  out.k_low = k_low_iv.mid();
  out.k_high = k_high_iv.mid();

  // Simplified window for the canonical choice c = e p^{-eps}; that c lies
  // in (0,1) exactly when eps log p > 1.
  out.simple_low = 1.0 / params.epsilon;
  out.simple_high = (std::exp(1.0) - 1.0) *
                    std::pow(static_cast<double>(P), params.delta - params.epsilon);
  out.simple_valid = params.epsilon * std::log(static_cast<double>(P)) > 1.0;

  // Integers certainly inside the open window, clamped to [1, p-1].
  double lo_edge = k_low_iv.hi_double();
  double hi_edge = k_high_iv.lo_double();
  out.empty_interval = !(lo_edge < hi_edge);

  double from_d = std::floor(lo_edge) + 1.0;
  double to_d = std::ceil(hi_edge) - 1.0;
  from_d = std::max(from_d, 1.0);
  to_d = std::min(to_d, static_cast<double>(P - 1));
  if (!out.empty_interval && from_d <= to_d) {
    const uint64_t k_from = static_cast<uint64_t>(from_d);
    const uint64_t k_to = static_cast<uint64_t>(to_d);
    const auto tables = os_count_tables(p, m, k_to);
    for (uint64_t k = k_from; k <= k_to; ++k) {
      SolvabilityRange::KCheck check;
      check.k = k;
      check.min_count = tables[k].at(0);
      for (uint64_t b = 0; b < P; ++b) {
        check.min_count = std::min(check.min_count, tables[k].at(b));
        if (tables[k].at(b) == 0) check.missing_b.push_back(b);
      }
      check.positive = check.min_count > 0;
      out.checked.push_back(std::move(check));
    }
  }
  return out;
}

}  // namespace wsieve
