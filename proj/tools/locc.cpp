// Command-line front end: check one conversion, solve the admissible alpha2
// region, analyze a scenario's regimes, or run the randomized verification
// sweep. Inputs accept fractions ("9/10") and decimals; when every numeric
// input is a fraction the whole computation runs on exact rationals unless
// --float is given.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <locc/locc.hpp>

namespace {

using nlohmann::json;

enum class output_format { human, js, csv };

output_format parse_format(const std::string& name) {
  if (name == "human") return output_format::human;
  if (name == "json") return output_format::js;
  if (name == "csv") return output_format::csv;
  throw locc::config_invalid("unknown format: " + name);
}

output_format default_format() {
  if (const char* env = std::getenv("LOCC_DEFAULT_FORMAT")) {
    try {
      return parse_format(env);
    } catch (const locc::config_invalid&) {
      std::cerr << "warning: ignoring invalid LOCC_DEFAULT_FORMAT=\"" << env
                << "\"\n";
    }
  }
  return output_format::human;
}

output_format resolve_format(const std::string& flag) {
  return flag.empty() ? default_format() : parse_format(flag);
}

// Numeric inputs stay strings through flag parsing; the exact-vs-real
// decision needs all of them at once.
struct parsed_inputs {
  std::vector<locc::number> values;
  bool exact = false;
};

parsed_inputs parse_all(const std::vector<std::string>& texts,
                        bool force_float) {
  parsed_inputs out;
  out.exact = !force_float;
  for (const auto& t : texts) {
    out.values.push_back(locc::parse_number(t));
    if (!locc::is_exact(out.values.back())) out.exact = false;
  }
  return out;
}

template <locc::number_type T>
T input_as(const locc::number& n) {
  if constexpr (std::same_as<T, locc::rational>) {
    return std::get<locc::rational>(n);
  } else {
    return locc::number_as_double(n);
  }
}

template <locc::number_type T>
json scalar_json(const T& x) {
  if constexpr (std::same_as<T, locc::rational>) {
    return json(locc::format_scalar(x));
  } else {
    return json(x);
  }
}

template <locc::number_type T>
json spectrum_json(const locc::prob_vector<T>& v) {
  json arr = json::array();
  for (const T& p : v.entries()) arr.push_back(scalar_json(p));
  return arr;
}

template <locc::number_type T>
std::string spectrum_str(const locc::prob_vector<T>& v) {
  std::string out;
  for (const T& p : v.entries()) {
    if (!out.empty()) out += "  ";
    out += locc::format_scalar(p);
  }
  return out;
}

const char* mode_name(bool exact) { return exact ? "exact" : "real"; }

// ---------------------------------------------------------------------------
// check

template <locc::number_type T>
int run_check(const locc::scenario<T>& s, const T& alpha1, const T& alpha2,
              output_format fmt, bool exact) {
  const auto g1 = locc::superposition_schmidt(s.xi1(), s.eta1(), alpha1);
  const auto g2 = locc::superposition_schmidt(s.xi2(), s.eta2(), alpha2);
  const auto oracle = locc::majorizes(g1, g2);
  const auto regimes = locc::classify_regimes(s);

  // Propositions and the entropy condition are stated for interior alphas
  // only; at the endpoints the oracle still decides.
  const bool interior = alpha1 > T{} && alpha1 < T(1) && alpha2 > T{} &&
                        alpha2 < T(1);
  std::optional<locc::proposition_verdict<T>> prop;
  std::optional<locc::condition_status> nec;
  if (interior) {
    prop = locc::convertible_iff(s, alpha1, alpha2);
    nec = locc::necessary_condition(s, locc::to_double(alpha1),
                                    locc::to_double(alpha2));
  }

  const double e1 = locc::von_neumann_entropy(g1);
  const double e2 = locc::von_neumann_entropy(g2);
  const double curve = locc::condition_curve(s, locc::to_double(alpha2));
  const double threshold = locc::condition_threshold(s, locc::to_double(alpha1));

  if (fmt == output_format::js) {
    json j;
    j["schema"] = 1;
    j["command"] = "check";
    j["mode"] = mode_name(exact);
    j["inputs"] = {{"xi1", scalar_json(s.xi1())},
                   {"eta1", scalar_json(s.eta1())},
                   {"xi2", scalar_json(s.xi2())},
                   {"eta2", scalar_json(s.eta2())},
                   {"alpha1", scalar_json(alpha1)},
                   {"alpha2", scalar_json(alpha2)}};
    j["gamma1"] = {{"spectrum", spectrum_json(g1)}, {"entropy", e1}};
    j["gamma2"] = {{"spectrum", spectrum_json(g2)}, {"entropy", e2}};
    json margins = json::array();
    for (const T& m : oracle.margins) margins.push_back(scalar_json(m));
    j["margins"] = margins;
    j["oracle"] = {{"convertible", oracle.convertible},
                   {"first_failure", oracle.first_failure
                                         ? json(*oracle.first_failure)
                                         : json(nullptr)}};
    json regs = json::array();
    for (const auto& r : regimes) {
      regs.push_back({{"tag", locc::to_string(r.tag)},
                      {"alpha1_interval", r.alpha1_interval.str()}});
    }
    j["regimes"] = regs;
    if (prop) {
      j["proposition"] = {
          {"hypotheses_met", prop->hypotheses_met},
          {"convertible",
           prop->hypotheses_met ? json(prop->convertible) : json(nullptr)},
          {"regime", prop->regime_used
                         ? json(locc::to_string(*prop->regime_used))
                         : json(nullptr)},
          {"min_alpha2", {{"value", scalar_json(prop->min_alpha2.infimum)},
                          {"attainable", prop->min_alpha2.attainable},
                          {"feasible", prop->min_alpha2.feasible}}},
          {"reason", prop->reason}};
    } else {
      j["proposition"] = nullptr;
    }
    j["necessary_condition"] =
        nec ? json(locc::to_string(*nec)) : json("skipped");
    j["entropy_condition"] = {{"curve", curve}, {"threshold", threshold}};
    std::cout << j.dump(2) << "\n";
  } else if (fmt == output_format::csv) {
    std::cout << "k,gamma1,gamma2,margin\n";
    for (std::size_t k = 0; k < oracle.margins.size(); ++k) {
      std::cout << (k + 1) << "," << locc::format_scalar(g1[k]) << ","
                << locc::format_scalar(g2[k]) << ","
                << locc::format_scalar(oracle.margins[k]) << "\n";
    }
  } else {
    std::cout << "mode: " << mode_name(exact) << "\n"
              << "gamma1 spectrum: " << spectrum_str(g1) << "\n"
              << "gamma2 spectrum: " << spectrum_str(g2) << "\n"
              << "prefix margins (target - source):\n";
    for (std::size_t k = 0; k < oracle.margins.size(); ++k) {
      std::cout << "  k=" << (k + 1) << ": "
                << locc::format_scalar(oracle.margins[k]) << "\n";
    }
    std::cout << "oracle: "
              << (oracle.convertible ? "convertible"
                                     : "not convertible (first failure k=" +
                                           std::to_string(
                                               *oracle.first_failure) +
                                           ")")
              << "\n";
    if (regimes.empty()) {
      std::cout << "regimes: none applicable\n";
    } else {
      for (const auto& r : regimes) {
        std::cout << "regime " << locc::to_string(r.tag) << ": alpha1 in "
                  << r.alpha1_interval.str() << "\n";
      }
    }
    if (prop) {
      std::cout << "proposition: hypotheses "
                << (prop->hypotheses_met ? "met" : "not met");
      if (prop->regime_used) {
        std::cout << " (" << locc::to_string(*prop->regime_used) << ")";
      }
      if (prop->hypotheses_met) {
        std::cout << "; " << (prop->convertible ? "convertible" : "not convertible");
      }
      std::cout << "; " << prop->reason << "\n";
      std::cout << "min_alpha2: "
                << locc::format_scalar(prop->min_alpha2.infimum) << " ("
                << (prop->min_alpha2.attainable ? "attainable" : "not attainable")
                << ", "
                << (prop->min_alpha2.feasible ? "feasible" : "infeasible")
                << ")\n";
    } else {
      std::cout << "proposition: skipped (alpha at an endpoint)\n";
    }
    std::cout << "entropy: E(gamma1)=" << locc::format_scalar(e1)
              << " E(gamma2)=" << locc::format_scalar(e2) << "\n"
              << "entropy condition: "
              << (nec ? locc::to_string(*nec) : "skipped")
              << " (curve=" << locc::format_scalar(curve)
              << ", threshold=" << locc::format_scalar(threshold) << ")\n";
  }
  return oracle.convertible ? 0 : 1;
}

int cmd_check(const std::vector<std::string>& nums, bool force_float,
              const std::string& fmt_flag) {
  const auto fmt = resolve_format(fmt_flag);
  const auto in = parse_all(nums, force_float);
  if (in.exact) {
    using R = locc::rational;
    const locc::scenario<R> s(input_as<R>(in.values[0]),
                              input_as<R>(in.values[1]),
                              input_as<R>(in.values[2]),
                              input_as<R>(in.values[3]));
    return run_check<R>(s, input_as<R>(in.values[4]),
                        input_as<R>(in.values[5]), fmt, true);
  }
  const locc::scenario<double> s(
      input_as<double>(in.values[0]), input_as<double>(in.values[1]),
      input_as<double>(in.values[2]), input_as<double>(in.values[3]));
  return run_check<double>(s, input_as<double>(in.values[4]),
                           input_as<double>(in.values[5]), fmt, false);
}

// ---------------------------------------------------------------------------
// region

template <locc::number_type T>
int run_region(const locc::scenario<T>& s, double alpha1, double tol,
               int grid, output_format fmt, bool exact) {
  const auto region = locc::alpha2_region(s, alpha1, tol);
  const double threshold = locc::condition_threshold(s, alpha1);

  if (fmt == output_format::js) {
    json j;
    j["schema"] = 1;
    j["command"] = "region";
    j["mode"] = mode_name(exact);
    j["alpha1"] = alpha1;
    j["threshold"] = threshold;
    j["root_tolerance"] = region.root_tolerance;
    json ivs = json::array();
    for (const auto& iv : region.intervals) {
      ivs.push_back({{"lo", iv.lo}, {"hi", iv.hi}});
    }
    j["intervals"] = ivs;
    std::cout << j.dump(2) << "\n";
  } else if (fmt == output_format::csv) {
    for (const auto& iv : region.intervals) {
      std::cout << "# interval," << locc::format_scalar(iv.lo) << ","
                << locc::format_scalar(iv.hi) << "\n";
    }
    std::cout << "alpha2,curve,threshold\n";
    const double lo = 0.0005, hi = 0.9995;
    for (int i = 0; i < grid; ++i) {
      const double a2 =
          grid == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (grid - 1);
      std::cout << locc::format_scalar(a2) << ","
                << locc::format_scalar(locc::condition_curve(s, a2)) << ","
                << locc::format_scalar(threshold) << "\n";
    }
  } else {
    std::cout << "mode: " << mode_name(exact) << "\n"
              << "threshold: " << locc::format_scalar(threshold) << "\n"
              << "admissible alpha2 intervals:\n";
    if (region.intervals.empty()) std::cout << "  (none)\n";
    for (const auto& iv : region.intervals) {
      std::cout << "  (" << locc::format_scalar(iv.lo) << ", "
                << locc::format_scalar(iv.hi) << ")\n";
    }
  }
  return 0;
}

int cmd_region(const std::vector<std::string>& nums, const std::string& a1,
               double tol, int grid, bool force_float,
               const std::string& fmt_flag) {
  const auto fmt = resolve_format(fmt_flag);
  auto texts = nums;
  texts.push_back(a1);
  const auto in = parse_all(texts, force_float);
  const double alpha1 = locc::number_as_double(in.values[4]);
  if (in.exact) {
    using R = locc::rational;
    const locc::scenario<R> s(input_as<R>(in.values[0]),
                              input_as<R>(in.values[1]),
                              input_as<R>(in.values[2]),
                              input_as<R>(in.values[3]));
    return run_region<R>(s, alpha1, tol, grid, fmt, true);
  }
  const locc::scenario<double> s(
      input_as<double>(in.values[0]), input_as<double>(in.values[1]),
      input_as<double>(in.values[2]), input_as<double>(in.values[3]));
  return run_region<double>(s, alpha1, tol, grid, fmt, false);
}

// ---------------------------------------------------------------------------
// analyze

template <locc::number_type T>
int run_analyze(const locc::scenario<T>& s, int alpha1_grid,
                output_format fmt, bool exact) {
  const auto thr = locc::thresholds(s);
  const auto table = locc::regime_table(s);
  // xi2 itself must fit the scenario chain, so a regime window only matters
  // where it meets (1/2, eta1).
  const locc::endpoint_interval<T> xi2_valid{locc::scalar_half<T>(), s.eta1(),
                                             false, false};

  struct grid_row {
    T alpha1;
    locc::alpha2_bound<T> bound;
    bool decides;
  };
  std::vector<grid_row> rows;
  for (const auto& r : table) {
    if (!r.applicable || r.alpha1_interval.empty()) continue;
    const T lo = r.alpha1_interval.lo;
    const T hi = r.alpha1_interval.hi;
    const int n = std::max(alpha1_grid, 1);
    for (int i = 0; i < n; ++i) {
      // Interior-shifted grid keeps every point inside the half-open cases.
      const T a1 = lo + (hi - lo) * T(2 * i + 1) / T(2 * n);
      if (!(a1 > T{} && a1 < T(1))) continue;
      rows.push_back(grid_row{a1, locc::min_alpha2(s, a1),
                              locc::criterion_dominates(s, a1)});
    }
  }

  if (fmt == output_format::js) {
    json j;
    j["schema"] = 1;
    j["command"] = "analyze";
    j["mode"] = mode_name(exact);
    j["thresholds"] = {{"t_low", scalar_json(thr.t_low)},
                       {"t_high", scalar_json(thr.t_high)},
                       {"a", scalar_json(thr.a)}};
    json regs = json::array();
    for (const auto& r : table) {
      const auto reachable = r.xi2_window.intersect(xi2_valid);
      json e = {{"tag", locc::to_string(r.tag)},
                {"xi2_window", r.xi2_window.str()},
                {"reachable_window",
                 reachable.empty() ? json(nullptr) : json(reachable.str())},
                {"applicable", r.applicable}};
      if (r.applicable) e["alpha1_interval"] = r.alpha1_interval.str();
      regs.push_back(e);
    }
    j["regimes"] = regs;
    json grid = json::array();
    for (const auto& row : rows) {
      grid.push_back({{"alpha1", scalar_json(row.alpha1)},
                      {"min_alpha2", scalar_json(row.bound.infimum)},
                      {"attainable", row.bound.attainable},
                      {"feasible", row.bound.feasible},
                      {"criterion_decides", row.decides}});
    }
    j["alpha1_grid"] = grid;
    std::cout << j.dump(2) << "\n";
  } else if (fmt == output_format::csv) {
    std::cout << "# t_low," << locc::format_scalar(thr.t_low) << "\n"
              << "# t_high," << locc::format_scalar(thr.t_high) << "\n"
              << "# a," << locc::format_scalar(thr.a) << "\n";
    for (const auto& r : table) {
      std::cout << "# regime," << locc::to_string(r.tag) << ","
                << (r.applicable ? "applicable" : "not-applicable") << "\n";
    }
    std::cout << "alpha1,min_alpha2,attainable,feasible,criterion_decides\n";
    for (const auto& row : rows) {
      std::cout << locc::format_scalar(row.alpha1) << ","
                << locc::format_scalar(row.bound.infimum) << ","
                << (row.bound.attainable ? "true" : "false") << ","
                << (row.bound.feasible ? "true" : "false") << ","
                << (row.decides ? "true" : "false") << "\n";
    }
  } else {
    std::cout << "mode: " << mode_name(exact) << "\n"
              << "thresholds: t_low=" << locc::format_scalar(thr.t_low)
              << " t_high=" << locc::format_scalar(thr.t_high)
              << " a=" << locc::format_scalar(thr.a) << "\n"
              << "xi2 valid range: " << xi2_valid.str() << "\n";
    for (const auto& r : table) {
      const auto reachable = r.xi2_window.intersect(xi2_valid);
      std::cout << "regime " << locc::to_string(r.tag) << ": window "
                << r.xi2_window.str();
      if (reachable.empty()) {
        std::cout << " -> empty (unreachable for this xi1, eta1)";
      } else {
        std::cout << ", reachable " << reachable.str();
      }
      if (r.applicable) {
        std::cout << "; applies to xi2, alpha1 in " << r.alpha1_interval.str();
      } else {
        std::cout << "; does not apply to xi2";
      }
      std::cout << "\n";
    }
    if (rows.empty()) {
      std::cout << "no applicable regime; no alpha1 grid\n";
    } else {
      std::cout << "alpha1 grid (min_alpha2, attainable, feasible, "
                   "criterion decides):\n";
      for (const auto& row : rows) {
        std::cout << "  alpha1=" << locc::format_scalar(row.alpha1)
                  << " min_alpha2=" << locc::format_scalar(row.bound.infimum)
                  << " " << (row.bound.attainable ? "attainable" : "not-attainable")
                  << " " << (row.bound.feasible ? "feasible" : "infeasible")
                  << " " << (row.decides ? "decides" : "criterion-silent")
                  << "\n";
      }
    }
  }
  return 0;
}

int cmd_analyze(const std::vector<std::string>& nums, int alpha1_grid,
                bool force_float, const std::string& fmt_flag) {
  const auto fmt = resolve_format(fmt_flag);
  const auto in = parse_all(nums, force_float);
  if (in.exact) {
    using R = locc::rational;
    const locc::scenario<R> s(input_as<R>(in.values[0]),
                              input_as<R>(in.values[1]),
                              input_as<R>(in.values[2]),
                              input_as<R>(in.values[3]));
    return run_analyze<R>(s, alpha1_grid, fmt, true);
  }
  const locc::scenario<double> s(
      input_as<double>(in.values[0]), input_as<double>(in.values[1]),
      input_as<double>(in.values[2]), input_as<double>(in.values[3]));
  return run_analyze<double>(s, alpha1_grid, fmt, false);
}

// ---------------------------------------------------------------------------
// verify-props

int cmd_verify_props(const locc::sweep_config& cfg,
                     const std::string& fmt_flag) {
  const auto fmt = resolve_format(fmt_flag);
  const auto report = locc::run_sweep(cfg);
  if (cfg.output_path) locc::write_report(report, *cfg.output_path);

  if (fmt == output_format::js) {
    json j;
    j["schema"] = 1;
    j["command"] = "verify-props";
    j["samples"] = report.config.samples;
    j["seed"] = report.config.seed;
    j["boundary_margin"] = report.config.boundary_margin;
    j["regime_filter"] = report.config.regime_filter
                             ? json(locc::to_string(*report.config.regime_filter))
                             : json(nullptr);
    j["total"] = report.total;
    j["agreements"] = report.agreements;
    j["mismatches"] = report.mismatches;
    j["regime_counts"] = {{"R1", report.regime_counts[0]},
                          {"R2", report.regime_counts[1]},
                          {"R3", report.regime_counts[2]}};
    json failures;
    for (const auto& [name, count] : report.property_failures.items()) {
      failures[name] = count;
    }
    j["property_failures"] = failures;
    json recs = json::array();
    for (const auto& m : report.mismatch_records) {
      recs.push_back({{"xi1", m.sample.xi1},
                      {"eta1", m.sample.eta1},
                      {"xi2", m.sample.xi2},
                      {"eta2", m.sample.eta2},
                      {"alpha1", m.sample.alpha1},
                      {"alpha2", m.sample.alpha2},
                      {"regime", locc::to_string(m.sample.drawn_regime)},
                      {"hypotheses_met", m.proposition.hypotheses_met},
                      {"proposition", m.proposition.convertible},
                      {"oracle", m.oracle.convertible}});
    }
    j["mismatch_records"] = recs;
    std::cout << j.dump(2) << "\n";
  } else if (fmt == output_format::csv) {
    std::cout << "metric,value\n"
              << "total," << report.total << "\n"
              << "agreements," << report.agreements << "\n"
              << "mismatches," << report.mismatches << "\n";
    for (std::size_t i = 0; i < report.regime_counts.size(); ++i) {
      std::cout << "samples_" << locc::to_string(static_cast<locc::regime_tag>(i))
                << "," << report.regime_counts[i] << "\n";
    }
    for (const auto& [name, count] : report.property_failures.items()) {
      std::cout << "property_failures." << name << "," << count << "\n";
    }
  } else {
    std::cout << locc::format_report(report);
  }
  return report.clean() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "LOCC convertibility of two-branch superpositions: majorization "
      "checks, admissible-weight regions, regime analysis, and a "
      "randomized verification sweep"};
  app.require_subcommand(1);
  const char* fmt_help = "Output format: human, json, or csv "
                         "(default from LOCC_DEFAULT_FORMAT, else human)";

  std::vector<std::string> check_nums(6);
  bool check_float = false;
  std::string check_fmt;
  auto* check = app.add_subcommand(
      "check", "Decide one conversion: spectra, margins, verdicts");
  check->add_option("xi1", check_nums[0], "Initial first-branch parameter")
      ->required();
  check->add_option("eta1", check_nums[1], "Initial second-branch parameter")
      ->required();
  check->add_option("xi2", check_nums[2], "Final first-branch parameter")
      ->required();
  check->add_option("eta2", check_nums[3], "Final second-branch parameter")
      ->required();
  check->add_option("alpha1", check_nums[4], "Initial superposition weight")
      ->required();
  check->add_option("alpha2", check_nums[5], "Final superposition weight")
      ->required();
  check->add_flag("--float", check_float, "Force real arithmetic");
  check->add_option("-f,--format", check_fmt, fmt_help);

  std::vector<std::string> region_nums(4);
  std::string region_a1;
  double region_tol = 1e-9;
  int region_grid = 1001;
  bool region_float = false;
  std::string region_fmt;
  auto* region = app.add_subcommand(
      "region",
      "Admissible alpha2 intervals for a fixed alpha1; csv adds a curve "
      "grid with columns alpha2,curve,threshold");
  region->add_option("xi1", region_nums[0], "Initial first-branch parameter")
      ->required();
  region->add_option("eta1", region_nums[1], "Initial second-branch parameter")
      ->required();
  region->add_option("xi2", region_nums[2], "Final first-branch parameter")
      ->required();
  region->add_option("eta2", region_nums[3], "Final second-branch parameter")
      ->required();
  region->add_option("alpha1", region_a1, "Initial superposition weight")
      ->required();
  region->add_option("--tol", region_tol, "Bisection tolerance for interval endpoints");
  region->add_option("--grid", region_grid, "Number of csv curve points")
      ->check(CLI::PositiveNumber);
  region->add_flag("--float", region_float, "Force real arithmetic");
  region->add_option("-f,--format", region_fmt, fmt_help);

  std::vector<std::string> analyze_nums(4);
  int analyze_grid = 9;
  bool analyze_float = false;
  std::string analyze_fmt;
  auto* analyze = app.add_subcommand(
      "analyze",
      "Thresholds, regime windows, and min_alpha2 over an alpha1 grid; csv "
      "columns alpha1,min_alpha2,attainable,feasible,criterion_decides");
  analyze->add_option("xi1", analyze_nums[0], "Initial first-branch parameter")
      ->required();
  analyze->add_option("eta1", analyze_nums[1], "Initial second-branch parameter")
      ->required();
  analyze->add_option("xi2", analyze_nums[2], "Final first-branch parameter")
      ->required();
  analyze->add_option("eta2", analyze_nums[3], "Final second-branch parameter")
      ->required();
  analyze->add_option("--alpha1-grid", analyze_grid,
                      "Grid points per applicable alpha1 interval")
      ->check(CLI::PositiveNumber);
  analyze->add_flag("--float", analyze_float, "Force real arithmetic");
  analyze->add_option("-f,--format", analyze_fmt, fmt_help);

  locc::sweep_config sweep;
  sweep.samples = 10000;
  sweep.seed = 42;
  std::string sweep_regime;
  std::string sweep_output;
  std::string sweep_fmt;
  auto* verify = app.add_subcommand(
      "verify-props",
      "Randomized sweep comparing the regime criterion against brute-force "
      "majorization; exit 0 only on zero mismatches and failures");
  verify->add_option("--samples", sweep.samples, "Number of samples");
  verify->add_option("--seed", sweep.seed, "Sweep seed");
  verify->add_option("--margin", sweep.boundary_margin,
                     "Boundary margin for sample rejection");
  verify->add_option("--regime", sweep_regime,
                     "Restrict samples to one regime: R1, R2, or R3");
  verify->add_option("--output", sweep_output,
                     "Also write the report to this path (atomic)");
  verify->add_option("-f,--format", sweep_fmt, fmt_help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(check_nums, check_float, check_fmt);
    if (*region) {
      return cmd_region(region_nums, region_a1, region_tol, region_grid,
                        region_float, region_fmt);
    }
    if (*analyze) return cmd_analyze(analyze_nums, analyze_grid, analyze_float, analyze_fmt);
    if (*verify) {
      if (!sweep_regime.empty()) {
        if (sweep_regime == "R1" || sweep_regime == "r1") {
          sweep.regime_filter = locc::regime_tag::r1;
        } else if (sweep_regime == "R2" || sweep_regime == "r2") {
          sweep.regime_filter = locc::regime_tag::r2;
        } else if (sweep_regime == "R3" || sweep_regime == "r3") {
          sweep.regime_filter = locc::regime_tag::r3;
        } else {
          throw locc::config_invalid("unknown regime: " + sweep_regime);
        }
      }
      if (!sweep_output.empty()) sweep.output_path = sweep_output;
      return cmd_verify_props(sweep, sweep_fmt);
    }
  } catch (const locc::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
