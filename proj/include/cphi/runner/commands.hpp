#pragma once

#include <algorithm>
#include <cstddef>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cphi/collatz.hpp"
#include "cphi/digits_io.hpp"
#include "cphi/farpoint.hpp"
#include "cphi/parallel.hpp"
#include "cphi/phi.hpp"
#include "cphi/pseudoperiod.hpp"
#include "cphi/runner/cache.hpp"
#include "cphi/runner/config.hpp"
#include "cphi/verify.hpp"
#include "json.hpp"

namespace cphi::runner {

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// "7", "∞ (extends 1/3)" when a known fixed point continues the prefix, or
/// "∞?>100": a finite search can only bound the value from below.
inline std::string render_farpoint(const FarPointOutcome& o, const Prefix& prefix) {
  if (o.finite()) return std::to_string(o.r);
  if (auto fixed = known_fixed_point_extending(prefix)) return "∞ (extends " + fixed->str() + ")";
  return "∞?>" + std::to_string(o.bound);
}

inline Natural parse_natural(const std::string& text) {
  if (text.empty()) throw parse_error("expected a decimal natural number", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw parse_error("expected a decimal natural number", i);
  }
  return Natural(text, 10);
}

// --- phi -------------------------------------------------------------------

inline CommandResult cmd_phi(const std::string& input, const RunConfig& config) {
  const ParsedValue value = parse_value(input);
  nlohmann::ordered_json j;
  std::ostringstream text;
  j["input"] = input;

  DigitWindow window;
  if (const auto* q = std::get_if<OddRational>(&value)) {
    const OddRational image = phi_rational(*q);
    j["kind"] = "rational";
    j["value"] = q->str();
    j["value_digits"] = format_periodic(rational_to_periodic(*q));
    j["phi"] = image.str();
    j["phi_digits"] = format_periodic(rational_to_periodic(image));
    text << "input   " << q->str() << "  " << format_periodic(rational_to_periodic(*q)) << '\n'
         << "phi     " << image.str() << "  " << format_periodic(rational_to_periodic(image)) << '\n';
    window = rational_window(*q, config.precision);
  } else {
    window = std::get<DigitWindow>(value);
    j["kind"] = "window";
    text << "input   " << format_window(window) << "  (value " << window.value().get_str() << ")\n";
  }
  const DigitWindow image = phi_window(window);
  j["window"] = {{"precision", image.precision()},
                 {"value", image.value().get_str()},
                 {"digits", format_window_digits(image)}};
  text << "window  " << format_window(image) << "  (value " << image.value().get_str() << ", mod 2^"
       << image.precision() << ")\n";

  CommandResult res;
  res.out = config.format == OutputFormat::Text ? text.str() : j.dump(2) + "\n";
  return res;
}

// --- parity ----------------------------------------------------------------

inline CommandResult cmd_parity(const std::string& input, const RunConfig& config) {
  const OddRational q = parse_rational(input);
  const ParityVector pv = parity_vector(q, config.precision);
  CommandResult res;
  if (config.format == OutputFormat::Text) {
    res.out = format_window(pv.window) + "\n";
  } else {
    nlohmann::ordered_json j{{"input", q.str()},
                             {"precision", pv.window.precision()},
                             {"value", pv.window.value().get_str()},
                             {"digits", format_window_digits(pv.window)}};
    res.out = j.dump(2) + "\n";
  }
  return res;
}

// --- farpoint --------------------------------------------------------------

inline CommandResult cmd_farpoint(const std::string& x_text, std::size_t k, const RunConfig& config) {
  const Natural x = parse_natural(x_text);
  validate(config, k);
  const FarPointOutcome o = farpoint(x, k, config.limits());
  const Prefix prefix{x, k};
  CommandResult res;
  if (config.format == OutputFormat::Text) {
    std::ostringstream os;
    os << "fP(" << x.get_str() << "," << k << ") = " << render_farpoint(o, prefix) << "  [nodes_explored "
       << o.nodes_explored << ", max_live_set " << o.max_live_set << (o.node_cap_hit ? ", node cap hit" : "")
       << "]\n";
    res.out = os.str();
  } else {
    nlohmann::ordered_json j{{"x", x.get_str()}, {"k", k}};
    const nlohmann::json fields = outcome_to_json(o);
    for (auto& [key, val] : fields.items()) j[key] = val;
    j["farpoint"] = render_farpoint(o, prefix);
    res.out = j.dump(2) + "\n";
  }
  return res;
}

// --- table -----------------------------------------------------------------

struct TableRun {
  Family family = Family::MinusOne;
  std::vector<PseudoperiodReport> reports;
  std::vector<std::string> warnings;
  std::size_t cache_hits = 0;
};

/// All rows of one family over [n_from, n_to]. Cached rows are reused;
/// a seeded sample of them is recomputed and compared on every run.
inline TableRun run_table(Family family, std::size_t n_from, std::size_t n_to, const RunConfig& config,
                          std::size_t spot_checks = 2) {
  if (n_from > n_to) throw config_error("table: n_from must not exceed n_to");
  validate(config, family_prefix(family, n_to).k);
  const SearchLimits limits = config.limits();
  const std::string fam = family_name(family);

  TableRun run{family, {}, {}, 0};
  std::optional<ResultCache> cache;
  if (config.cache_path) {
    cache.emplace(*config.cache_path);
    run.warnings = cache->load();
  }

  std::map<std::size_t, FarPointOutcome> rows;
  std::vector<std::size_t> missing;
  std::vector<std::size_t> hits;
  for (std::size_t n = n_from; n <= n_to; ++n) {
    if (cache) {
      if (auto o = cache->lookup({fam, n, config.r_max}, config.node_cap)) {
        rows.emplace(n, *o);
        hits.push_back(n);
        continue;
      }
    }
    missing.push_back(n);
  }
  run.cache_hits = hits.size();

  std::vector<std::size_t> recheck;
  if (!hits.empty()) {
    std::mt19937_64 rng(config.seed);
    std::sample(hits.begin(), hits.end(), std::back_inserter(recheck), spot_checks, rng);
  }
  std::vector<std::size_t> todo = missing;
  todo.insert(todo.end(), recheck.begin(), recheck.end());

  const auto fresh = parallel_map<FarPointOutcome>(todo.size(), config.workers, [&](std::size_t i) {
    const Prefix p = family_prefix(family, todo[i]);
    return farpoint(p.x, p.k, limits);
  });

  std::vector<std::pair<CacheKey, CacheEntry>> writes;
  for (std::size_t i = 0; i < todo.size(); ++i) {
    const std::size_t n = todo[i];
    const bool is_recheck = i >= missing.size();
    if (is_recheck && rows.at(n) == fresh[i]) continue;
    if (is_recheck) {
      run.warnings.push_back("cache row " + fam + " n=" + std::to_string(n) +
                             " disagrees with a fresh computation; replacing it");
    }
    rows[n] = fresh[i];
    writes.push_back({CacheKey{fam, n, config.r_max}, CacheEntry{fresh[i], config.node_cap}});
  }
  if (cache) {
    std::sort(writes.begin(), writes.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    cache->append(writes);
  }

  run.reports = build_reports(family, rows);
  return run;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

inline std::string render_table(const TableRun& run, OutputFormat format) {
  const std::string fam = family_name(run.family);
  std::ostringstream os;
  auto period_str = [](const PseudoperiodReport& r) {
    return r.predicted_period ? r.predicted_period->get_str() : std::string();
  };

  switch (format) {
    case OutputFormat::Csv:
      os << "family,n,x,k,farpoint,predicted_period,confirmed_repetitions,nodes_explored\n";
      for (const auto& r : run.reports) {
        os << fam << ',' << r.n << ',' << r.prefix.x.get_str() << ',' << r.prefix.k << ','
           << csv_field(render_farpoint(r.farpoint, r.prefix)) << ',' << period_str(r) << ','
           << r.confirmed_repetitions << ',' << r.farpoint.nodes_explored << '\n';
      }
      break;
    case OutputFormat::Json: {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& r : run.reports) {
        nlohmann::ordered_json j{{"family", fam},
                                 {"n", r.n},
                                 {"x", r.prefix.x.get_str()},
                                 {"k", r.prefix.k},
                                 {"farpoint", render_farpoint(r.farpoint, r.prefix)}};
        const nlohmann::json fields = outcome_to_json(r.farpoint);
        for (auto& [key, val] : fields.items()) j[key] = val;
        j["predicted_period"] = r.predicted_period ? nlohmann::ordered_json(period_str(r)) : nullptr;
        j["confirmed_repetitions"] = r.confirmed_repetitions;
        j["violations"] = r.violations;
        rows.push_back(std::move(j));
      }
      os << rows.dump(2) << '\n';
      break;
    }
    case OutputFormat::Text:
      os << std::left << std::setw(11) << "family" << std::right << std::setw(5) << "n" << std::setw(6) << "k"
         << "  " << std::left << std::setw(22) << "farpoint" << std::right << std::setw(12) << "period"
         << std::setw(10) << "confirmed" << std::setw(10) << "nodes" << '\n';
      for (const auto& r : run.reports) {
        const std::string fp = render_farpoint(r.farpoint, r.prefix);
        // setw counts bytes; pad by code points so the UTF-8 infinity aligns.
        const std::size_t cps = std::count_if(fp.begin(), fp.end(), [](char c) { return (c & 0xC0) != 0x80; });
        std::string period = period_str(r);
        if (period.size() > 12) period = "2^" + std::to_string(mpz_sizeinbase(r.predicted_period->get_mpz_t(), 2) - 1);
        os << std::left << std::setw(11) << fam << std::right << std::setw(5) << r.n << std::setw(6) << r.prefix.k
           << "  " << fp << std::string(cps < 22 ? 22 - cps : 1, ' ') << std::setw(12) << period << std::setw(10)
           << r.confirmed_repetitions << std::setw(10) << r.farpoint.nodes_explored << '\n';
      }
      break;
  }
  return os.str();
}

inline CommandResult cmd_table(Family family, std::size_t n_from, std::size_t n_to, const RunConfig& config) {
  const TableRun run = run_table(family, n_from, n_to, config);
  CommandResult res;
  res.out = render_table(run, config.format);
  std::ostringstream err;
  for (const auto& w : run.warnings) err << "warning: " << w << '\n';
  for (const auto& r : run.reports) {
    for (std::size_t m : r.violations) {
      err << "pseudoperiod violation: " << family_name(family) << " n=" << r.n << " fP=" << r.farpoint.r
          << " predicted to recur at n=" << m << '\n';
      res.exit_code = kExitVerifyFailed;
    }
  }
  res.err = err.str();
  return res;
}

// --- verify ----------------------------------------------------------------

inline CommandResult cmd_verify(const std::string& suite, const RunConfig& config) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = verify_suite_names();
  } else {
    names.push_back(suite);
  }
  CommandResult res;
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  std::ostringstream text;
  for (const auto& name : names) {
    auto report = run_verify_suite(name, config.seed, config.trials);
    if (!report) throw config_error("unknown verify suite '" + name + "'");
    if (!report->passed()) res.exit_code = kExitVerifyFailed;
    text << (report->passed() ? "PASS " : "FAIL ") << name << "  checks " << report->checks << ", failures "
         << report->failures << "  (seed " << config.seed << ", trials " << config.trials << ")\n";
    for (const auto& c : report->counterexamples) text << "  counterexample: " << c << '\n';
    j.push_back({{"suite", name},
                 {"passed", report->passed()},
                 {"checks", report->checks},
                 {"failures", report->failures},
                 {"seed", config.seed},
                 {"trials", config.trials},
                 {"counterexamples", report->counterexamples}});
  }
  res.out = config.format == OutputFormat::Text ? text.str() : j.dump(2) + "\n";
  return res;
}

}  // namespace cphi::runner
