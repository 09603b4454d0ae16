#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "locc/errors.hpp"
#include "locc/numeric.hpp"
#include "locc/states.hpp"

namespace locc {

enum class regime_tag { r1, r2, r3 };

inline const char* to_string(regime_tag tag) {
  switch (tag) {
    case regime_tag::r1: return "R1";
    case regime_tag::r2: return "R2";
    default: return "R3";
  }
}

// Closed-form constants in (xi1, eta1) that carve the xi2 axis into the
// three regimes, plus the alpha1 pivot separating the spectrum orderings:
//   t_low  = (1 - eta1) / (2 - xi1 - eta1)
//   t_high = xi1 * eta1 / (1 - xi1 + eta1)
//   a      = eta1 / (1 - xi1 + eta1)
template <number_type T>
struct regime_thresholds {
  T t_low, t_high, a;
};

template <number_type T>
regime_thresholds<T> thresholds(const scenario<T>& s) {
  const T& xi1 = s.xi1();
  const T& eta1 = s.eta1();
  const T denom_a = T(1) - xi1 + eta1;
  return regime_thresholds<T>{(T(1) - eta1) / (T(2) - xi1 - eta1),
                              xi1 * eta1 / denom_a, eta1 / denom_a};
}

// Interval with explicit endpoint openness. Real-mode membership gives
// closed endpoints a comparison_tolerance cushion and requires clearing open
// endpoints by the same amount; rational membership follows the flags
// exactly.
template <number_type T>
struct endpoint_interval {
  T lo{};
  T hi{};
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(const T& x) const {
    const bool above = lo_closed ? geq(x, lo) : clearly_greater(x, lo);
    const bool below = hi_closed ? geq(hi, x) : clearly_less(x, hi);
    return above && below;
  }

  bool empty() const {
    if (lo < hi) return false;
    if (lo > hi) return true;
    return !(lo_closed && hi_closed);
  }

  endpoint_interval intersect(const endpoint_interval& other) const {
    endpoint_interval out = *this;
    if (other.lo > out.lo) {
      out.lo = other.lo;
      out.lo_closed = other.lo_closed;
    } else if (other.lo == out.lo) {
      out.lo_closed = out.lo_closed && other.lo_closed;
    }
    if (other.hi < out.hi) {
      out.hi = other.hi;
      out.hi_closed = other.hi_closed;
    } else if (other.hi == out.hi) {
      out.hi_closed = out.hi_closed && other.hi_closed;
    }
    return out;
  }

  std::string str() const {
    return std::string(lo_closed ? "[" : "(") + format_scalar(lo) + ", " +
           format_scalar(hi) + (hi_closed ? "]" : ")");
  }
};

// One proposition regime evaluated against a scenario: the xi2 window that
// selects it and, when xi2 falls inside, the admissible alpha1 interval.
template <number_type T>
struct regime {
  regime_tag tag{};
  bool applicable = false;
  endpoint_interval<T> xi2_window;
  endpoint_interval<T> alpha1_interval;
  regime_thresholds<T> thr;
};

// All three regimes against s.xi2(). Windows may overlap when t_low exceeds
// t_high, in which case every applicable claim is reported.
template <number_type T>
std::array<regime<T>, 3> regime_table(const scenario<T>& s) {
  const auto thr = thresholds(s);
  const T& xi2 = s.xi2();
  const T half = scalar_half<T>();

  std::array<regime<T>, 3> table;

  auto& r1 = table[0];
  r1.tag = regime_tag::r1;
  r1.thr = thr;
  r1.xi2_window = {thr.t_high, T(1), true, false};
  r1.alpha1_interval = {thr.a, xi2 / s.xi1(), true, true};
  r1.applicable = r1.xi2_window.contains(xi2);

  auto& r2 = table[1];
  r2.tag = regime_tag::r2;
  r2.thr = thr;
  r2.xi2_window = {thr.t_low, thr.t_high, true, false};
  r2.alpha1_interval = {xi2, thr.a, true, false};
  r2.applicable = r2.xi2_window.contains(xi2);

  auto& r3 = table[2];
  r3.tag = regime_tag::r3;
  r3.thr = thr;
  r3.xi2_window = {half, thr.t_low, false, false};
  r3.alpha1_interval = {xi2, thr.t_low, true, true};
  r3.applicable = r3.xi2_window.contains(xi2);

  return table;
}

// The applicable subset, in R1..R3 order. May be empty, and may hold two
// entries when the windows overlap; nothing is suppressed.
template <number_type T>
std::vector<regime<T>> classify_regimes(const scenario<T>& s) {
  std::vector<regime<T>> out;
  for (auto& r : regime_table(s)) {
    if (r.applicable) out.push_back(r);
  }
  return out;
}

// Infimum of admissible alpha2 for a fixed alpha1: the first majorization
// inequality needs alpha2 >= alpha1*xi1/xi2 and the propositions fix
// alpha2 > 1/2. attainable marks whether the infimum itself qualifies;
// feasible turns false once the bound exceeds 1 and no alpha2 works.
template <number_type T>
struct alpha2_bound {
  T infimum{};
  bool attainable = false;
  bool feasible = false;
};

template <number_type T>
alpha2_bound<T> min_alpha2(const scenario<T>& s, const T& alpha1) {
  if (!(alpha1 > T{} && alpha1 < T(1))) {
    throw out_of_range("alpha1 must lie in (0, 1)");
  }
  const T ratio = alpha1 * s.xi1() / s.xi2();
  const T half = scalar_half<T>();
  alpha2_bound<T> bound;
  if (ratio > half) {
    bound.infimum = ratio;
    bound.attainable = true;
  } else {
    bound.infimum = half;
    bound.attainable = false;
  }
  bound.feasible = geq(T(1), bound.infimum);
  return bound;
}

// Infimum of alpha2 imposed by the last majorization inequality: the final
// prefix sum is 1 minus the smallest coefficient, so conversion needs
// (1-alpha2)(1-eta2) <= w_min where w_min is the smallest entry of the
// initial spectrum, i.e. alpha2 >= 1 - w_min / (1 - eta2).
template <number_type T>
T tail_bound(const scenario<T>& s, const T& alpha1) {
  if (!(alpha1 > T{} && alpha1 < T(1))) {
    throw out_of_range("alpha1 must lie in (0, 1)");
  }
  const T w_min =
      std::min(alpha1 * (T(1) - s.xi1()), (T(1) - alpha1) * (T(1) - s.eta1()));
  return T(1) - w_min / (T(1) - s.eta2());
}

// The single-ratio criterion decides conversion only where the ratio bound
// alpha1*xi1/xi2 dominates tail_bound: then alpha2 above the ratio clears
// the last inequality for free. Configurations with the R3 spectrum order
// satisfy this identically; elsewhere it can fail (see the regression test
// with the 37/50 scenario), and the criterion alone would claim conversions
// that majorization rejects.
template <number_type T>
bool criterion_dominates(const scenario<T>& s, const T& alpha1) {
  return geq(alpha1 * s.xi1() / s.xi2(), tail_bound(s, alpha1));
}

// Decision by the regime criterion. convertible is asserted only when
// hypotheses_met: some regime covers xi2, alpha1 lies in its interval,
// alpha2 > 1/2, and the ratio bound dominates the tail bound. Under those
// hypotheses the conversion is possible iff alpha1*xi1 <= alpha2*xi2 (the
// first majorization inequality); everywhere else only the brute-force
// test decides.
template <number_type T>
struct proposition_verdict {
  bool hypotheses_met = false;
  bool convertible = false;
  std::optional<regime_tag> regime_used;
  alpha2_bound<T> min_alpha2;
  std::string reason;
};

template <number_type T>
proposition_verdict<T> convertible_iff(const scenario<T>& s, const T& alpha1,
                                       const T& alpha2) {
  if (!(alpha1 > T{} && alpha1 < T(1))) {
    throw out_of_range("alpha1 must lie in (0, 1)");
  }
  if (!(alpha2 > T{} && alpha2 < T(1))) {
    throw out_of_range("alpha2 must lie in (0, 1)");
  }

  proposition_verdict<T> verdict;
  verdict.min_alpha2 = min_alpha2(s, alpha1);

  const auto applicable = classify_regimes(s);
  if (applicable.empty()) {
    verdict.reason = "no proposition regime covers xi2";
    return verdict;
  }
  for (const auto& r : applicable) {
    if (r.alpha1_interval.contains(alpha1)) {
      verdict.regime_used = r.tag;
      break;
    }
  }
  if (!verdict.regime_used) {
    verdict.reason = "alpha1 lies outside every applicable regime interval";
    return verdict;
  }
  if (!clearly_greater(alpha2, scalar_half<T>())) {
    verdict.reason = "alpha2 is not above 1/2";
    return verdict;
  }
  if (!criterion_dominates(s, alpha1)) {
    verdict.reason =
        "ratio bound alpha1*xi1/xi2 is below the tail bound from the last "
        "majorization inequality; the criterion does not decide this point";
    return verdict;
  }

  verdict.hypotheses_met = true;
  verdict.convertible = geq(alpha2 * s.xi2(), alpha1 * s.xi1());
  verdict.reason = verdict.convertible
                       ? "first majorization inequality holds "
                         "(alpha1*xi1 <= alpha2*xi2)"
                       : "first majorization inequality fails "
                         "(alpha1*xi1 > alpha2*xi2)";
  return verdict;
}

// Appendix inequality A.1, a theorem under the scenario chain:
// xi1*eta1/(1 - xi1 + eta1) > xi2*eta2/(1 - xi2 + eta2).
template <number_type T>
bool appendix_a1(const scenario<T>& s) {
  const T lhs = s.xi1() * s.eta1() / (T(1) - s.xi1() + s.eta1());
  const T rhs = s.xi2() * s.eta2() / (T(1) - s.xi2() + s.eta2());
  return lhs > rhs;
}

// Appendix inequality A.2 for any pair 1/2 < eta < xi < 1:
// xi > eta / (1 - xi + eta).
template <number_type T>
bool appendix_a2(const T& xi, const T& eta) {
  if (!(eta > scalar_half<T>() && xi > eta && xi < T(1))) {
    throw out_of_range("appendix_a2 requires 1/2 < eta < xi < 1");
  }
  return xi > eta / (T(1) - xi + eta);
}

// Tail inequality (1 - alpha1)(1 - eta1) > (1 - alpha2)(1 - eta2),
// evaluated under the hypothesis alpha1*xi1 <= alpha2*xi2. It is a theorem
// only where criterion_dominates holds; the 37/50 regression scenario
// falsifies it with the bare hypothesis.
template <number_type T>
bool appendix_b1(const scenario<T>& s, const T& alpha1, const T& alpha2) {
  if (!(alpha1 >= T{} && alpha1 <= T(1) && alpha2 >= T{} && alpha2 <= T(1))) {
    throw out_of_range("alphas must lie in [0, 1]");
  }
  if (!(alpha1 * s.xi1() <= alpha2 * s.xi2())) {
    throw hypothesis_violated(
        "appendix_b1 requires alpha1*xi1 <= alpha2*xi2");
  }
  return (T(1) - alpha1) * (T(1) - s.eta1()) >
         (T(1) - alpha2) * (T(1) - s.eta2());
}

}  // namespace locc
