#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "locc/entanglement.hpp"
#include "locc/errors.hpp"
#include "locc/majorization.hpp"
#include "locc/numeric.hpp"
#include "locc/propositions.hpp"
#include "locc/states.hpp"

namespace locc {

// Direct decision procedure: build both superposition spectra and apply the
// majorization test. Deliberately ignorant of the propositions module; this
// is the ground truth they are checked against.
template <number_type T>
conversion_verdict<T> brute_force_convertible(const scenario<T>& s,
                                              const T& alpha1,
                                              const T& alpha2) {
  const superposition_weights<T> w(alpha1, alpha2);
  const auto gamma1 = superposition_schmidt(s.xi1(), s.eta1(), w.alpha1());
  const auto gamma2 = superposition_schmidt(s.xi2(), s.eta2(), w.alpha2());
  return majorizes(gamma1, gamma2);
}

// ---------------------------------------------------------------------------
// Randomized sweep harness.

struct sweep_config {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double boundary_margin = 1e-9;
  std::optional<regime_tag> regime_filter;
  std::optional<std::string> output_path;
};

struct sample_case {
  double xi1, eta1, xi2, eta2;
  double alpha1, alpha2;
  regime_tag drawn_regime;
};

struct mismatch_record {
  sample_case sample;
  proposition_verdict<double> proposition;
  conversion_verdict<double> oracle;
};

// Per-property failure counts; every field is expected to stay zero.
struct property_counters {
  std::uint64_t superposition_entropy_equality = 0;
  std::uint64_t entropy_monotonicity = 0;
  std::uint64_t necessary_condition_soundness = 0;
  std::uint64_t appendix_a1 = 0;
  std::uint64_t appendix_a2 = 0;
  std::uint64_t appendix_b1 = 0;
  std::uint64_t schmidt_order = 0;

  std::uint64_t total() const {
    return superposition_entropy_equality + entropy_monotonicity +
           necessary_condition_soundness + appendix_a1 + appendix_a2 +
           appendix_b1 + schmidt_order;
  }

  std::vector<std::pair<const char*, std::uint64_t>> items() const {
    return {{"superposition_entropy_equality", superposition_entropy_equality},
            {"entropy_monotonicity", entropy_monotonicity},
            {"necessary_condition_soundness", necessary_condition_soundness},
            {"appendix_a1", appendix_a1},
            {"appendix_a2", appendix_a2},
            {"appendix_b1", appendix_b1},
            {"schmidt_order", schmidt_order}};
  }
};

struct sweep_report {
  sweep_config config;
  std::uint64_t total = 0;
  std::uint64_t agreements = 0;
  std::uint64_t mismatches = 0;
  std::array<std::uint64_t, 3> regime_counts{};
  std::vector<mismatch_record> mismatch_records;
  property_counters property_failures;

  bool clean() const { return mismatches == 0 && property_failures.total() == 0; }
};

// Counter-based per-sample stream: the initial state is a nonlinear hash of
// (seed, index), so any partitioning or ordering of indices reproduces the
// same draws.
class sample_stream {
 public:
  sample_stream(std::uint64_t seed, std::uint64_t index)
      : state_(mix(seed ^ mix(index + 0x9E3779B97F4A7C15ull))) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;  // splitmix64 increment
    return mix(state_);
  }

  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

namespace detail {

// Draws one configuration with alpha1 inside a regime interval and every
// strict comparison at least boundary_margin away from flipping. Retries
// within the sample's own stream keep the result a pure function of
// (seed, index).
inline sample_case draw_sample(sample_stream& rng, double margin,
                               std::optional<regime_tag> filter) {
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    std::array<double, 4> u;
    for (double& x : u) x = 0.5 + 0.5 * rng.next_unit();
    std::sort(u.begin(), u.end(), std::greater<>());
    if (1.0 - u[0] <= margin || u[3] - 0.5 <= margin) continue;
    if (u[0] - u[1] <= margin || u[1] - u[2] <= margin ||
        u[2] - u[3] <= margin) {
      continue;
    }
    const scenario<double> s(u[0], u[1], u[2], u[3]);
    const auto thr = thresholds(s);
    if (std::abs(s.xi2() - thr.t_low) <= margin ||
        std::abs(s.xi2() - thr.t_high) <= margin) {
      continue;
    }

    const auto applicable = classify_regimes(s);
    if (applicable.empty()) continue;
    const regime<double>* chosen = nullptr;
    if (filter) {
      for (const auto& r : applicable) {
        if (r.tag == *filter) chosen = &r;
      }
      if (!chosen) continue;
    } else {
      chosen = &applicable[rng.next() % applicable.size()];
    }

    const double lo = chosen->alpha1_interval.lo + margin;
    const double hi = chosen->alpha1_interval.hi - margin;
    if (!(lo < hi)) continue;
    const double alpha1 = lo + (hi - lo) * rng.next_unit();
    if (!criterion_dominates(s, alpha1)) continue;

    // Mix both sides of the criterion boundary alpha1*xi1/xi2.
    const double ratio = alpha1 * s.xi1() / s.xi2();
    const double below_lo = 0.5 + margin;
    const double below_hi = std::min(1.0 - margin, ratio - margin);
    const double above_lo = std::max(0.5, ratio) + margin;
    const double above_hi = 1.0 - margin;
    const bool want_above = (rng.next() & 1) != 0;
    double a2_lo, a2_hi;
    if ((want_above && above_lo < above_hi) || below_lo >= below_hi) {
      a2_lo = above_lo;
      a2_hi = above_hi;
    } else {
      a2_lo = below_lo;
      a2_hi = below_hi;
    }
    if (!(a2_lo < a2_hi)) continue;
    const double alpha2 = a2_lo + (a2_hi - a2_lo) * rng.next_unit();
    if (std::abs(alpha2 - ratio) <= margin) continue;

    return sample_case{s.xi1(), s.eta1(), s.xi2(), s.eta2(),
                       alpha1,  alpha2,   chosen->tag};
  }
  throw config_invalid("sampler exhausted retries; regime filter too narrow");
}

inline bool spectrum_order_matches(const std::array<double, 4>& raw,
                                   const std::array<int, 4>& order) {
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (!(raw[order[i]] > raw[order[i + 1]])) return false;
  }
  return true;
}

}  // namespace detail

// Checks one drawn configuration against every verified claim and tallies
// failures into the report.
inline void evaluate_sample(const sample_case& c, sweep_report& report) {
  const scenario<double> s(c.xi1, c.eta1, c.xi2, c.eta2);
  const auto prop = convertible_iff(s, c.alpha1, c.alpha2);
  const auto oracle = brute_force_convertible(s, c.alpha1, c.alpha2);

  report.total += 1;
  report.regime_counts[static_cast<std::size_t>(c.drawn_regime)] += 1;
  if (prop.hypotheses_met && prop.convertible == oracle.convertible) {
    report.agreements += 1;
  } else {
    report.mismatches += 1;
    report.mismatch_records.push_back(mismatch_record{c, prop, oracle});
  }

  auto& fail = report.property_failures;

  const auto gamma1 = superposition_schmidt(c.xi1, c.eta1, c.alpha1);
  const auto gamma2 = superposition_schmidt(c.xi2, c.eta2, c.alpha2);
  const double e1 = von_neumann_entropy(gamma1);
  const double e2 = von_neumann_entropy(gamma2);
  const double eq2_1 = superposition_entropy(binary_entropy(c.xi1),
                                             binary_entropy(c.eta1), c.alpha1);
  const double eq2_2 = superposition_entropy(binary_entropy(c.xi2),
                                             binary_entropy(c.eta2), c.alpha2);
  if (std::abs(eq2_1 - e1) >= 1e-10 || std::abs(eq2_2 - e2) >= 1e-10) {
    fail.superposition_entropy_equality += 1;
  }

  bool distinct = false;
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(gamma1[i] - gamma2[i]) > comparison_tolerance) distinct = true;
  }
  if (oracle.convertible && distinct) {
    if (!(e1 >= e2 - comparison_tolerance)) fail.entropy_monotonicity += 1;
    if (necessary_condition(s, c.alpha1, c.alpha2) ==
        condition_status::violated) {
      fail.necessary_condition_soundness += 1;
    }
  }

  if (!appendix_a1(s)) fail.appendix_a1 += 1;
  if (!appendix_a2(c.xi1, c.eta1) || !appendix_a2(c.xi2, c.eta2)) {
    fail.appendix_a2 += 1;
  }
  if (c.alpha1 * c.xi1 <= c.alpha2 * c.xi2 && c.alpha2 < 1.0 &&
      criterion_dominates(s, c.alpha1)) {
    if (!appendix_b1(s, c.alpha1, c.alpha2)) fail.appendix_b1 += 1;
  }

  // Spectrum ordering claimed by the proof of the regime this sample was
  // drawn in, as positions into (a*xi, a*(1-xi), (1-a)*eta, (1-a)*(1-eta)).
  const std::array<double, 4> raw{
      c.alpha1 * c.xi1, c.alpha1 * (1.0 - c.xi1), (1.0 - c.alpha1) * c.eta1,
      (1.0 - c.alpha1) * (1.0 - c.eta1)};
  static constexpr std::array<std::array<int, 4>, 3> orders{
      {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 2, 3, 1}}};
  const auto& order = orders[static_cast<std::size_t>(c.drawn_regime)];
  if (!detail::spectrum_order_matches(raw, order)) fail.schmidt_order += 1;
}

inline sweep_report run_sweep(const sweep_config& cfg) {
  if (cfg.samples < 1) throw config_invalid("samples must be >= 1");
  if (!(cfg.boundary_margin > 0.0)) {
    throw config_invalid("boundary_margin must be positive");
  }
  sweep_report report;
  report.config = cfg;
  for (std::uint64_t i = 0; i < cfg.samples; ++i) {
    sample_stream rng(cfg.seed, i);
    const auto sample =
        detail::draw_sample(rng, cfg.boundary_margin, cfg.regime_filter);
    evaluate_sample(sample, report);
  }
  return report;
}

inline std::string format_report(const sweep_report& r) {
  std::ostringstream out;
  out << "samples: " << r.config.samples << "\n"
      << "seed: " << r.config.seed << "\n"
      << "boundary_margin: " << format_scalar(r.config.boundary_margin) << "\n"
      << "regime_filter: "
      << (r.config.regime_filter ? to_string(*r.config.regime_filter) : "none")
      << "\n"
      << "total: " << r.total << "\n"
      << "agreements: " << r.agreements << "\n"
      << "mismatches: " << r.mismatches << "\n";
  for (std::size_t i = 0; i < r.regime_counts.size(); ++i) {
    out << "samples_" << to_string(static_cast<regime_tag>(i)) << ": "
        << r.regime_counts[i] << "\n";
  }
  for (const auto& [name, count] : r.property_failures.items()) {
    out << "property_failures." << name << ": " << count << "\n";
  }
  for (const auto& m : r.mismatch_records) {
    out << "mismatch: xi1=" << format_scalar(m.sample.xi1)
        << " eta1=" << format_scalar(m.sample.eta1)
        << " xi2=" << format_scalar(m.sample.xi2)
        << " eta2=" << format_scalar(m.sample.eta2)
        << " alpha1=" << format_scalar(m.sample.alpha1)
        << " alpha2=" << format_scalar(m.sample.alpha2)
        << " regime=" << to_string(m.sample.drawn_regime)
        << " hypotheses_met=" << (m.proposition.hypotheses_met ? "true" : "false")
        << " proposition=" << (m.proposition.convertible ? "true" : "false")
        << " oracle=" << (m.oracle.convertible ? "true" : "false")
        << " first_failure=";
    if (m.oracle.first_failure) {
      out << *m.oracle.first_failure;
    } else {
      out << "none";
    }
    out << "\n";
  }
  return out.str();
}

// Writes the whole report in one shot: temp file in the target directory,
// then rename over the destination.
inline void write_report(const sweep_report& r, const std::string& path) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw error("cannot open output path: " + path);
    out << format_report(r);
  }
  fs::rename(tmp, target);
}

}  // namespace locc
