// waring-sieve: exact subset-sum counting over prime fields, bound
// verification against the exact counts, and Waring numbers mod p.
//
// Subcommands: count, total, phi, check, waring, identity, audit, sweep.
// Output is JSONL (default) or CSV with the same column set; counts are
// decimal strings, reals carry 15 significant digits. Exit codes: 0 ok,
// 1 an asserted bound failed, 2 usage or precondition error.

#include <CLI11.hpp>
#include <json.hpp>

#include <wsieve/bounds.hpp>
#include <wsieve/counting.hpp>
#include <wsieve/partitions.hpp>
#include <wsieve/waring.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

using nlohmann::ordered_json;
using namespace wsieve;

namespace {

constexpr int kSchemaVersion = 1;

double round15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

// ---- output ----

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_value(const ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return csv_escape(v.get<std::string>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_structured()) return csv_escape(v.dump());
  return v.dump();
}

class RowWriter {
 public:
  RowWriter(std::ostream& os, bool csv) : os_(os), csv_(csv) {}

  void write(const ordered_json& row) {
    if (!csv_) {
      os_ << row.dump() << '\n';
      return;
    }
    if (!header_done_) {
      bool first = true;
      for (const auto& [key, value] : row.items()) {
        (void)value;
        if (!first) os_ << ',';
        os_ << key;
        first = false;
      }
      os_ << '\n';
      header_done_ = true;
    }
    bool first = true;
    for (const auto& [key, value] : row.items()) {
      (void)key;
      if (!first) os_ << ',';
      os_ << csv_value(value);
      first = false;
    }
    os_ << '\n';
  }

  void write_all(const std::vector<ordered_json>& rows) {
    for (const auto& row : rows) write(row);
  }

 private:
  std::ostream& os_;
  bool csv_;
  bool header_done_ = false;
};

// ---- row builders ----

ordered_json bound_row(const BoundReport& r, std::optional<uint64_t> p,
                       std::optional<uint64_t> m, std::optional<uint64_t> k,
                       std::optional<uint64_t> b) {
  ordered_json row;
  row["schema_version"] = kSchemaVersion;
  row["bound"] = r.name;
  row["p"] = p ? ordered_json(*p) : ordered_json(nullptr);
  row["m"] = m ? ordered_json(*m) : ordered_json(nullptr);
  row["k"] = k ? ordered_json(*k) : ordered_json(nullptr);
  row["b"] = b ? ordered_json(*b) : ordered_json(nullptr);
  row["lhs"] = round15(r.lhs);
  row["rhs"] = round15(r.rhs);
  row["holds"] = r.holds;
  row["slack"] = round15(r.slack);
  row["numeric_error"] = round15(r.numeric_error);
  row["regime"] = r.regime.empty() ? ordered_json(nullptr) : ordered_json(r.regime);
  return row;
}

ordered_json count_row(uint64_t p, std::optional<uint64_t> m, const std::string& set,
                       std::optional<uint64_t> k, uint64_t b, const Integer& count,
                       const std::string& algo, std::optional<bool> agreement,
                       const char* command = "count") {
  ordered_json row;
  row["schema_version"] = kSchemaVersion;
  row["command"] = command;
  row["p"] = p;
  row["m"] = m ? ordered_json(*m) : ordered_json(nullptr);
  row["set"] = set.empty() ? ordered_json(nullptr) : ordered_json(set);
  row["k"] = k ? ordered_json(*k) : ordered_json(nullptr);
  row["b"] = b;
  row["count"] = count.get_str();
  row["algo"] = algo;
  row["agreement"] = agreement ? ordered_json(*agreement) : ordered_json(nullptr);
  return row;
}

std::string join_values(const std::vector<uint64_t>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

// ---- option state ----

struct Options {
  std::vector<uint64_t> p_values;
  std::string p_range;
  std::optional<uint64_t> m;
  bool m_all_divisors = false;
  std::optional<uint64_t> k;
  std::string k_range;
  std::optional<uint64_t> b;
  bool all_b = false;
  std::vector<uint64_t> set_values;
  std::string algo = "newton";
  std::string bound;
  std::string which;
  std::string q = "1";
  std::optional<uint64_t> box_n;
  std::optional<uint64_t> box_s;
  double delta = 0.5;
  double epsilon = 0.25;
  std::optional<double> c;
  bool distinct = false;
  bool exclude_zero = false;
  bool suite = false;
  uint64_t p_max = 0;
  uint64_t random_count = 0;
  uint64_t seed = 1;
  std::string command;  // sweep target
  std::string format = "jsonl";
  std::string out_path;
  unsigned jobs = 0;
};

unsigned default_jobs() {
  if (const char* env = std::getenv("WARING_SIEVE_JOBS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

std::pair<uint64_t, uint64_t> parse_range(const std::string& text, const char* what) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument(std::string(what) + " range must look like lo:hi");
  }
  const uint64_t lo = std::stoull(text.substr(0, colon));
  const uint64_t hi = std::stoull(text.substr(colon + 1));
  if (lo > hi) throw std::invalid_argument(std::string(what) + " range is empty");
  return {lo, hi};
}

std::vector<uint64_t> resolve_primes(const Options& opt) {
  std::vector<uint64_t> primes = opt.p_values;
  if (!opt.p_range.empty()) {
    auto [lo, hi] = parse_range(opt.p_range, "p");
    for (uint64_t p = lo; p <= hi; ++p) {
      if (p >= 3 && p % 2 == 1 && is_prime_u64(p)) primes.push_back(p);
    }
  }
  if (primes.empty()) throw std::invalid_argument("no modulus given: use --p or --p-range");
  return primes;
}

std::vector<uint64_t> resolve_ms(const Options& opt, uint64_t p) {
  if (opt.m_all_divisors) return divisors(p - 1);
  if (opt.m) return {*opt.m};
  throw std::invalid_argument("no exponent given: use --m or --m-all-divisors");
}

std::vector<uint64_t> resolve_ks(const Options& opt) {
  if (!opt.k_range.empty()) {
    auto [lo, hi] = parse_range(opt.k_range, "k");
    std::vector<uint64_t> ks;
    for (uint64_t k = lo; k <= hi; ++k) ks.push_back(k);
    return ks;
  }
  if (opt.k) return {*opt.k};
  throw std::invalid_argument("no k given: use --k or --k-range");
}

std::vector<uint64_t> selected_bs(const Options& opt, uint64_t p) {
  if (opt.b && !opt.all_b) {
    if (*opt.b >= p) throw std::invalid_argument("b must lie in [0, p)");
    return {*opt.b};
  }
  std::vector<uint64_t> bs(p);
  for (uint64_t b = 0; b < p; ++b) bs[b] = b;
  return bs;
}

struct CellResult {
  std::vector<ordered_json> rows;
  bool violation = false;
};

// ---- command cells ----

CellResult run_count_cell(const Options& opt, uint64_t p_val, std::optional<uint64_t> m,
                          uint64_t k) {
  const PrimeModulus p(p_val);
  ValuedDomain domain = m ? ValuedDomain::power_instance(power_structure(p, *m))
                          : ValuedDomain::from_values(p, opt.set_values);
  const std::string set_str = m ? std::string() : join_values(opt.set_values);
  if (k > domain.size()) {
    throw std::invalid_argument("k = " + std::to_string(k) + " exceeds domain size " +
                                std::to_string(domain.size()));
  }

  CellResult result;
  if (opt.algo == "all") {
    auto dp = count_dp(domain, k);
    auto gf = count_genfun(domain, k);
    auto nw = count_newton(domain, k);
    bool agree = true;
    for (uint64_t b = 0; b < p_val; ++b) {
      if (dp[k].at(b) != gf[k].at(b) || dp[k].at(b) != nw[k].at(b)) agree = false;
    }
    for (uint64_t b : selected_bs(opt, p_val)) {
      result.rows.push_back(count_row(p_val, m, set_str, k, b, nw[k].at(b), "all", agree));
    }
    result.violation = !agree;
    return result;
  }

  std::vector<CountTable> tables;
  if (opt.algo == "dp") {
    tables = count_dp(domain, k);
  } else if (opt.algo == "genfun") {
    tables = count_genfun(domain, k);
  } else {
    tables = count_newton(domain, k);
  }
  for (uint64_t b : selected_bs(opt, p_val)) {
    result.rows.push_back(
        count_row(p_val, m, set_str, k, b, tables[k].at(b), opt.algo, std::nullopt));
  }
  return result;
}

CellResult run_total_cell(const Options& opt, uint64_t p_val, uint64_t m) {
  const PrimeModulus p(p_val);
  const auto totals = total_count(p, m);
  CellResult result;
  for (uint64_t b : selected_bs(opt, p_val)) {
    result.rows.push_back(count_row(p_val, m, "", std::nullopt, b, totals[b], "genfun",
                                    std::nullopt, "total"));
  }
  return result;
}

CellResult run_phi_cell(const Options& opt, uint64_t p_val, std::optional<uint64_t> m) {
  const PrimeModulus p(p_val);
  ValuedDomain domain = m ? ValuedDomain::from_values(p, power_structure(p, *m).members)
                          : ValuedDomain::from_values(p, opt.set_values);
  auto profile = character_profile(domain);
  ordered_json row;
  row["schema_version"] = kSchemaVersion;
  row["command"] = "phi";
  row["p"] = p_val;
  row["m"] = m ? ordered_json(*m) : ordered_json(nullptr);
  row["set"] = m ? ordered_json(nullptr) : ordered_json(join_values(opt.set_values));
  row["phi"] = round15(profile.phi);
  row["argmax_a"] = profile.phi_argmax;
  row["numeric_error"] = round15(profile.error_bound);
  CellResult result;
  result.rows.push_back(std::move(row));
  return result;
}

CellResult run_check_cell(const Options& opt, uint64_t p_val, std::optional<uint64_t> m,
                          std::optional<uint64_t> k) {
  const PrimeModulus p(p_val);
  CellResult result;

  const auto append = [&](const std::vector<BoundReport>& reports,
                          std::optional<uint64_t> k_col, bool asserted,
                          bool b_is_a = false) {
    uint64_t index = b_is_a ? 1 : 0;
    for (const auto& r : reports) {
      result.rows.push_back(bound_row(r, p_val, m, k_col, index));
      if (asserted && !r.holds) result.violation = true;
      ++index;
    }
  };

  if (opt.bound == "os") {
    append(check_os_total(p, *m, false), std::nullopt, true);
    append(check_os_total(p, *m, true), std::nullopt, false);  // comparison only
  } else if (opt.bound == "zhuwan") {
    append(check_zhu_wan(p, *m, *k), k, true);
  } else if (opt.bound == "expsum") {
    // the b column carries the character index a
    append(check_exp_sum(p, *m), std::nullopt, true, /*b_is_a=*/true);
  } else if (opt.bound == "thm11") {
    BoundParams params;
    params.delta = opt.delta;
    params.epsilon = opt.epsilon;
    append(check_thm11(p, *m, *k, params), k, false);
  } else if (opt.bound == "open") {
    append(check_open_problem(p, *m, *k), k, false);
  } else if (opt.bound == "solvable") {
    BoundParams params;
    params.delta = opt.delta;
    params.epsilon = opt.epsilon;
    params.c = opt.c.value_or(std::exp(1.0) *
                              std::pow(static_cast<double>(p_val), -opt.epsilon));
    if (!(params.c > 0 && params.c < 1)) {
      throw std::invalid_argument("canonical c = e p^-eps is not in (0,1); pass --c");
    }
    auto range = solvability_range(p, *m, params);
    ordered_json window;
    window["schema_version"] = kSchemaVersion;
    window["bound"] = "solvable-window";
    window["p"] = p_val;
    window["m"] = *m;
    window["c"] = round15(params.c);
    window["k_low"] = round15(range.k_low);
    window["k_high"] = round15(range.k_high);
    window["empty"] = range.empty_interval;
    window["simple_low"] = round15(range.simple_low);
    window["simple_high"] = round15(range.simple_high);
    window["simple_valid"] = range.simple_valid;
    result.rows.push_back(std::move(window));
    for (const auto& check : range.checked) {
      ordered_json row;
      row["schema_version"] = kSchemaVersion;
      row["bound"] = "solvable";
      row["p"] = p_val;
      row["m"] = *m;
      row["k"] = check.k;
      row["min_count"] = check.min_count.get_str();
      row["positive"] = check.positive;
      row["missing"] = check.missing_b;
      result.rows.push_back(std::move(row));
    }
  } else if (opt.bound == "lemma31") {
    const auto run_domain = [&](const ValuedDomain& domain, const std::string& set_str,
                                std::optional<uint64_t> seed) {
      auto profile = character_profile(domain);
      const uint64_t n = domain.size();
      const uint64_t k_lo = k ? *k : 1;
      const uint64_t k_hi = k ? *k : n;
      if (k_lo > n) throw std::invalid_argument("k exceeds domain size");
      auto tables = count_dp(domain, k_hi);
      for (uint64_t kk = k_lo; kk <= k_hi; ++kk) {
        uint64_t b = 0;
        for (const auto& r : check_lemma31(domain, kk, tables[kk], profile)) {
          auto row = bound_row(r, p_val, m, kk, b);
          row["set"] = set_str;
          row["seed"] = seed ? ordered_json(*seed) : ordered_json(nullptr);
          result.rows.push_back(std::move(row));
          if (!r.holds) result.violation = true;
          ++b;
        }
      }
    };
    if (opt.random_count > 0) {
      SplitMix64 rng(opt.seed);
      for (uint64_t trial = 0; trial < opt.random_count; ++trial) {
        auto domain = random_unit_subset(p, rng);
        std::vector<uint64_t> values;
        for (const auto& item : domain.items()) values.push_back(item.value);
        run_domain(domain, join_values(values), opt.seed);
      }
    } else {
      if (opt.set_values.empty()) {
        throw std::invalid_argument("lemma31 needs --set or --random N");
      }
      run_domain(ValuedDomain::from_values(p, opt.set_values),
                 join_values(opt.set_values), std::nullopt);
    }
  } else {
    throw std::invalid_argument("unknown --bound " + opt.bound);
  }
  return result;
}

ordered_json waring_result_row(const WaringResult& result) {
  ordered_json row;
  row["schema_version"] = kSchemaVersion;
  row["kind"] = result.kind == WaringResult::Kind::distinct ? "distinct" : "ordinary";
  row["p"] = result.p;
  row["m"] = result.m;
  row["value"] = result.value ? ordered_json(*result.value) : ordered_json(nullptr);
  if (result.kind == WaringResult::Kind::ordinary) {
    row["zero_allowed"] = result.zero_allowed;
  }
  ordered_json coverage = ordered_json::object();
  for (const auto& [k, missing] : result.coverage) {
    coverage[std::to_string(k)] = missing;
  }
  row["coverage"] = std::move(coverage);
  return row;
}

CellResult run_waring_cell(const Options& opt, uint64_t p_val, uint64_t m) {
  const PrimeModulus p(p_val);
  CellResult result;
  if (opt.distinct) {
    result.rows.push_back(waring_result_row(gamma_distinct(p, m)));
  } else {
    result.rows.push_back(waring_result_row(gamma_ordinary(p, m, !opt.exclude_zero)));
  }
  return result;
}

CellResult run_waring_suite(const Options& opt) {
  auto report = waring_bound_suite(opt.p_max);
  CellResult result;
  for (const auto& row : report.rows) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "suite";
    j["p"] = row.p;
    j["m"] = row.m;
    j["value"] = row.gamma;
    j["gamma_distinct"] =
        row.gamma_dist ? ordered_json(*row.gamma_dist) : ordered_json(nullptr);
    j["cauchy_asserted"] = row.cauchy_asserted;
    j["cauchy_holds"] = row.cauchy_ok;
    j["ordering_holds"] = row.ordering_ok;
    j["prop13_rhs"] = round15(row.prop13_rhs);
    if ((row.cauchy_asserted && !row.cauchy_ok) || !row.ordering_ok) {
      result.violation = true;
    }
    result.rows.push_back(std::move(j));
  }
  return result;
}

CellResult run_identity_cell(const Options& opt) {
  CellResult result;
  BoundReport report;
  std::optional<uint64_t> k_col;
  if (opt.which == "cycle-index") {
    if (!opt.k) throw std::invalid_argument("cycle-index needs --k");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), opt.q.c_str(), 10) != 0) {
      throw std::invalid_argument("bad rational --q " + opt.q);
    }
    q.canonicalize();
    const uint32_t k = static_cast<uint32_t>(*opt.k);
    std::vector<Rational> args(k, q);
    const Rational lhs = cycle_index_eval(k, args);
    const Rational rhs = falling_factorial(q + Rational(k - 1), k);
    report.name = "identity-cycle-index";
    report.instance = "k=" + std::to_string(k) + " q=" + opt.q;
    report.lhs = mpq_get_d(lhs.get_mpq_t());
    report.rhs = mpq_get_d(rhs.get_mpq_t());
    report.holds = (lhs == rhs);
    report.slack = report.rhs - report.lhs;
    k_col = *opt.k;
  } else if (opt.which == "box") {
    if (!opt.k.has_value() || !opt.box_n.has_value() || !opt.box_s.has_value()) {
      throw std::invalid_argument("box needs --n, --s, --k");
    }
    report = box_identity_check(*opt.box_n, *opt.box_s, *opt.k);
    k_col = *opt.k;
  } else {
    if (!opt.k.has_value() || !opt.box_n.has_value()) {
      throw std::invalid_argument("sieve needs --n and --k");
    }
    report = sieve_identity_check(*opt.box_n, static_cast<uint32_t>(*opt.k));
    k_col = *opt.k;
  }
  auto row = bound_row(report, std::nullopt, std::nullopt, k_col, std::nullopt);
  row["instance"] = report.instance;
  result.rows.push_back(std::move(row));
  result.violation = !report.holds;
  return result;
}

CellResult run_audit_cell(uint64_t p_val, uint64_t m, uint64_t k) {
  const PrimeModulus p(p_val);
  CellResult result;
  for (const auto& audit : decomposition_audit(p, m, k)) {
    ordered_json row;
    row["schema_version"] = kSchemaVersion;
    row["command"] = "audit";
    row["p"] = p_val;
    row["m"] = m;
    row["k"] = k;
    row["b"] = audit.b;
    row["claimed"] = audit.claimed.get_str();
    row["actual"] = audit.actual.get_str();
    row["diff"] = audit.diff.get_str();
    result.rows.push_back(std::move(row));
  }
  return result;  // descriptive; never a violation
}

// ---- sweep ----

struct Cell {
  uint64_t p = 0;
  std::optional<uint64_t> m;
  std::optional<uint64_t> k;
};

ordered_json skip_row(const Cell& cell, const std::string& reason) {
  ordered_json row;
  row["schema_version"] = kSchemaVersion;
  row["command"] = "skip";
  row["p"] = cell.p;
  row["m"] = cell.m ? ordered_json(*cell.m) : ordered_json(nullptr);
  row["k"] = cell.k ? ordered_json(*cell.k) : ordered_json(nullptr);
  row["reason"] = reason;
  return row;
}

CellResult run_sweep_cell(const Options& opt, const Cell& cell) {
  if (opt.command == "count") return run_count_cell(opt, cell.p, cell.m, *cell.k);
  if (opt.command == "total") return run_total_cell(opt, cell.p, *cell.m);
  if (opt.command == "check") return run_check_cell(opt, cell.p, cell.m, cell.k);
  if (opt.command == "waring") return run_waring_cell(opt, cell.p, *cell.m);
  if (opt.command == "audit") return run_audit_cell(cell.p, *cell.m, *cell.k);
  throw std::invalid_argument("sweep does not support --command " + opt.command);
}

bool sweep_uses_k(const Options& opt) {
  if (opt.command == "count" || opt.command == "audit") return true;
  if (opt.command == "check") {
    return opt.bound == "zhuwan" || opt.bound == "thm11" || opt.bound == "open";
  }
  return false;
}

bool sweep_uses_m(const Options& opt) {
  return !(opt.command == "check" && opt.bound == "lemma31");
}

CellResult run_sweep(const Options& opt) {
  if (opt.command.empty()) throw std::invalid_argument("sweep needs --command");
  if (opt.command == "check" && opt.bound.empty()) {
    throw std::invalid_argument("sweep --command check needs --bound");
  }

  std::vector<Cell> cells;
  for (uint64_t p : resolve_primes(opt)) {
    if (!sweep_uses_m(opt)) {
      cells.push_back(Cell{p, std::nullopt, std::nullopt});
      continue;
    }
    for (uint64_t m : resolve_ms(opt, p)) {
      if (sweep_uses_k(opt)) {
        for (uint64_t k : resolve_ks(opt)) cells.push_back(Cell{p, m, k});
      } else {
        cells.push_back(Cell{p, m, std::nullopt});
      }
    }
  }

  struct Rendered {
    CellResult result;
    std::optional<std::string> skipped;
  };
  std::vector<Rendered> rendered(cells.size());
  std::atomic<size_t> next{0};
  const unsigned jobs = std::max(1u, opt.jobs);
  const auto worker = [&] {
    for (;;) {
      const size_t idx = next.fetch_add(1);
      if (idx >= cells.size()) return;
      try {
        rendered[idx].result = run_sweep_cell(opt, cells[idx]);
      } catch (const std::invalid_argument& e) {
        rendered[idx].skipped = e.what();
      } catch (const std::domain_error& e) {
        rendered[idx].skipped = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // Single-writer merge in deterministic cell order.
  CellResult merged;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (rendered[i].skipped) {
      merged.rows.push_back(skip_row(cells[i], *rendered[i].skipped));
      continue;
    }
    merged.violation = merged.violation || rendered[i].result.violation;
    for (auto& row : rendered[i].result.rows) merged.rows.push_back(std::move(row));
  }
  return merged;
}

// ---- wiring ----

void add_common_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--p", opt.p_values, "prime modulus (repeatable in sweep)");
  cmd->add_option("--p-range", opt.p_range, "primes in lo:hi");
  cmd->add_option("--m", opt.m, "power exponent m");
  cmd->add_flag("--m-all-divisors", opt.m_all_divisors, "iterate m over divisors of p-1");
  cmd->add_option("--k", opt.k, "subset size k");
  cmd->add_option("--k-range", opt.k_range, "subset sizes lo:hi");
  cmd->add_option("--b", opt.b, "target residue b");
  cmd->add_flag("--all-b", opt.all_b, "emit every residue b");
  cmd->add_option("--set", opt.set_values, "explicit domain values")->delimiter(',');
  cmd->add_option("--format", opt.format, "jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  cmd->add_option("--out", opt.out_path, "output path (default stdout)");
  cmd->add_option("--jobs", opt.jobs, "worker count (default $WARING_SIEVE_JOBS or 1)");
  cmd->add_option("--seed", opt.seed, "seed for randomized domains");
}

int run(int argc, char** argv) {
  CLI::App app{
      "exact Odlyzko-Stanley subset-sum counts, bound checks, and Waring numbers mod p"};
  app.require_subcommand(1);
  Options opt;
  opt.jobs = default_jobs();

  auto* count = app.add_subcommand("count", "exact N(k, b, D) tables");
  add_common_flags(count, opt);
  count->add_option("--algo", opt.algo, "dp | genfun | newton | all")
      ->check(CLI::IsMember({"dp", "genfun", "newton", "all"}));
  count->get_option("--set")->excludes(count->get_option("--m"));

  auto* total = app.add_subcommand("total", "N*_m(b) summed over all k");
  add_common_flags(total, opt);

  auto* phi = app.add_subcommand("phi", "character-sum profile of a domain");
  add_common_flags(phi, opt);
  phi->get_option("--set")->excludes(phi->get_option("--m"));

  auto* check = app.add_subcommand("check", "evaluate a bound against exact counts");
  add_common_flags(check, opt);
  check->add_option("--bound", opt.bound,
                    "os | zhuwan | lemma31 | expsum | thm11 | open | solvable")
      ->required()
      ->check(CLI::IsMember(
          {"os", "zhuwan", "lemma31", "expsum", "thm11", "open", "solvable"}));
  check->add_option("--delta", opt.delta, "delta for conditional bounds");
  check->add_option("--epsilon", opt.epsilon, "epsilon for conditional bounds");
  check->add_option("--c", opt.c, "solvability constant in (0,1)");
  check->add_option("--random", opt.random_count, "fuzz with N seeded random domains");

  auto* waring = app.add_subcommand("waring", "ordinary and distinct Waring numbers");
  add_common_flags(waring, opt);
  waring->add_flag("--distinct", opt.distinct, "distinct (subset) Waring number");
  waring->add_flag("--exclude-zero", opt.exclude_zero, "drop 0^m from the summands");
  waring->add_flag("--suite", opt.suite, "sweep p <= p-max, assert the Cauchy bound");
  waring->add_option("--p-max", opt.p_max, "suite upper limit");

  auto* identity = app.add_subcommand("identity", "exact combinatorial identities");
  add_common_flags(identity, opt);
  identity->add_option("--which", opt.which, "cycle-index | box | sieve")
      ->required()
      ->check(CLI::IsMember({"cycle-index", "box", "sieve"}));
  identity->add_option("--q", opt.q, "rational argument for cycle-index");
  identity->add_option("--n", opt.box_n, "box size / symbol count");
  identity->add_option("--s", opt.box_s, "box count");

  auto* audit = app.add_subcommand("audit", "lifting-decomposition audit (descriptive)");
  add_common_flags(audit, opt);

  auto* sweep = app.add_subcommand("sweep", "run a command over a (p, m, k) grid");
  add_common_flags(sweep, opt);
  sweep->add_option("--command", opt.command, "count | total | check | waring | audit")
      ->required()
      ->check(CLI::IsMember({"count", "total", "check", "waring", "audit"}));
  sweep->add_option("--bound", opt.bound, "bound for --command check")
      ->check(CLI::IsMember(
          {"os", "zhuwan", "lemma31", "expsum", "thm11", "open", "solvable"}));
  sweep->add_option("--algo", opt.algo, "algorithm for --command count")
      ->check(CLI::IsMember({"dp", "genfun", "newton", "all"}));
  sweep->add_option("--delta", opt.delta, "delta for conditional bounds");
  sweep->add_option("--epsilon", opt.epsilon, "epsilon for conditional bounds");
  sweep->add_option("--c", opt.c, "solvability constant in (0,1)");
  sweep->add_option("--random", opt.random_count, "random lemma31 domains per p");
  sweep->add_flag("--distinct", opt.distinct, "distinct Waring numbers in the sweep");
  sweep->add_flag("--exclude-zero", opt.exclude_zero, "drop 0^m from the summands");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CellResult result;
  try {
    if (count->parsed()) {
      auto primes = resolve_primes(opt);
      std::optional<uint64_t> m;
      if (opt.set_values.empty()) m = resolve_ms(opt, primes.at(0)).at(0);
      result = run_count_cell(opt, primes.at(0), m, resolve_ks(opt).at(0));
    } else if (total->parsed()) {
      auto primes = resolve_primes(opt);
      result = run_total_cell(opt, primes.at(0), resolve_ms(opt, primes.at(0)).at(0));
    } else if (phi->parsed()) {
      auto primes = resolve_primes(opt);
      std::optional<uint64_t> m;
      if (opt.set_values.empty()) m = resolve_ms(opt, primes.at(0)).at(0);
      result = run_phi_cell(opt, primes.at(0), m);
    } else if (check->parsed()) {
      auto primes = resolve_primes(opt);
      std::optional<uint64_t> m;
      if (opt.bound != "lemma31") m = resolve_ms(opt, primes.at(0)).at(0);
      std::optional<uint64_t> k;
      if (opt.bound == "zhuwan" || opt.bound == "thm11" || opt.bound == "open") {
        k = resolve_ks(opt).at(0);
      } else if (opt.k) {
        k = *opt.k;
      }
      result = run_check_cell(opt, primes.at(0), m, k);
    } else if (waring->parsed()) {
      if (opt.suite) {
        if (opt.p_max < 3) throw std::invalid_argument("--suite needs --p-max");
        result = run_waring_suite(opt);
      } else {
        auto primes = resolve_primes(opt);
        result = run_waring_cell(opt, primes.at(0), resolve_ms(opt, primes.at(0)).at(0));
      }
    } else if (identity->parsed()) {
      result = run_identity_cell(opt);
    } else if (audit->parsed()) {
      auto primes = resolve_primes(opt);
      result = run_audit_cell(primes.at(0), resolve_ms(opt, primes.at(0)).at(0),
                              resolve_ks(opt).at(0));
    } else if (sweep->parsed()) {
      result = run_sweep(opt);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::ofstream file;
  if (!opt.out_path.empty()) {
    file.open(opt.out_path);
    if (!file) {
      std::cerr << "error: cannot open " << opt.out_path << "\n";
      return 2;
    }
  }
  RowWriter writer(opt.out_path.empty() ? std::cout : file, opt.format == "csv");
  writer.write_all(result.rows);
  return result.violation ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
