#pragma once

#include <cmath>
#include <vector>

#include "locc/errors.hpp"
#include "locc/numeric.hpp"
#include "locc/states.hpp"

namespace locc {

// h2(x) = -x log2 x - (1-x) log2 (1-x), with 0 log 0 := 0.
inline double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw out_of_range("binary_entropy argument must lie in [0, 1]");
  }
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

// Entanglement entropy of the reduced state, -sum p log2 p. Always computed
// in double precision; zero entries contribute nothing.
template <number_type T>
double von_neumann_entropy(const prob_vector<T>& v) {
  double h = 0.0;
  for (const T& entry : v.entries()) {
    const double p = to_double(entry);
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

// Entanglement of sqrt(alpha)|phi> + sqrt(1-alpha)|psi> for bi-orthogonal
// branches: alpha*E(phi) + (1-alpha)*E(psi) + h2(alpha).
inline double superposition_entropy(double e_phi, double e_psi, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw out_of_range("alpha must lie in [0, 1]");
  }
  if (!(e_phi >= 0.0 && e_psi >= 0.0)) {
    throw out_of_range("branch entropies must be nonnegative");
  }
  return alpha * e_phi + (1.0 - alpha) * e_psi + binary_entropy(alpha);
}

enum class condition_status { satisfied, violated, boundary };

inline const char* to_string(condition_status s) {
  switch (s) {
    case condition_status::satisfied: return "satisfied";
    case condition_status::violated: return "violated";
    default: return "boundary";
  }
}

namespace detail {

template <number_type T>
struct scenario_entropies {
  double phi1, psi1, phi2, psi2;
  explicit scenario_entropies(const scenario<T>& s)
      : phi1(binary_entropy(to_double(s.xi1()))),
        psi1(binary_entropy(to_double(s.eta1()))),
        phi2(binary_entropy(to_double(s.xi2()))),
        psi2(binary_entropy(to_double(s.eta2()))) {}
};

}  // namespace detail

// Left side of the entropy condition with E(psi2) moved across:
// h2(alpha2) + alpha2 * (E(phi2) - E(psi2)). Strictly concave in alpha2.
template <number_type T>
double condition_curve(const scenario<T>& s, double alpha2) {
  const detail::scenario_entropies<T> e(s);
  return binary_entropy(alpha2) + alpha2 * (e.phi2 - e.psi2);
}

// Matching right side: h2(alpha1) + alpha1*(E(phi1)-E(psi1)) + E(psi1)
// - E(psi2). The conversion can only decrease entanglement, so the curve
// must stay strictly below this constant.
template <number_type T>
double condition_threshold(const scenario<T>& s, double alpha1) {
  const detail::scenario_entropies<T> e(s);
  return binary_entropy(alpha1) + alpha1 * (e.phi1 - e.psi1) + e.psi1 - e.psi2;
}

// Strict necessary condition E(Gamma1) > E(Gamma2). Inputs within
// comparison_tolerance of equality are reported as boundary, never silently
// classified either way.
template <number_type T>
condition_status necessary_condition(const scenario<T>& s, double alpha1,
                                     double alpha2) {
  if (!(alpha1 > 0.0 && alpha1 < 1.0)) {
    throw out_of_range("alpha1 must lie in (0, 1)");
  }
  if (!(alpha2 > 0.0 && alpha2 < 1.0)) {
    throw out_of_range("alpha2 must lie in (0, 1)");
  }
  const double lhs = condition_curve(s, alpha2);
  const double rhs = condition_threshold(s, alpha1);
  if (std::abs(lhs - rhs) < comparison_tolerance) {
    return condition_status::boundary;
  }
  return lhs < rhs ? condition_status::satisfied : condition_status::violated;
}

// Open interval (lo, hi) of admissible alpha2 values.
struct alpha_interval {
  double lo, hi;
};

struct alpha_region {
  std::vector<alpha_interval> intervals;  // disjoint, ascending, at most 2
  double root_tolerance;

  bool contains(double x) const {
    for (const auto& iv : intervals) {
      if (x > iv.lo && x < iv.hi) return true;
    }
    return false;
  }
};

namespace detail {

// Root of g - threshold on a half where g is monotone, by plain bisection.
// inside(lo) and !inside(hi) must hold for inside(x) = (g(x) < threshold).
template <class G>
double bisect_edge(const G& g, double threshold, double lo, double hi,
                   double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < threshold) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

template <class G>
double bisect_edge_desc(const G& g, double threshold, double lo, double hi,
                        double tol) {
  // mirror: inside(hi) and !inside(lo)
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < threshold) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

// Open sublevel set {x in (0, 1) : h2(x) + delta*x < threshold}. The map is
// strictly concave with g(0) = 0, g(1) = delta and a single interior maximum
// at x* = 1 / (1 + 2^(-delta)); the set is therefore (0,1) minus a closed
// interval, located by bisection on the two monotone halves.
inline alpha_region sublevel_region(double delta, double threshold,
                                    double tol) {
  if (!(tol > 0.0)) throw out_of_range("root tolerance must be positive");
  const auto g = [delta](double x) {
    return binary_entropy(x) + delta * x;
  };
  const double xstar = 1.0 / (1.0 + std::exp2(-delta));
  const double gmax = g(xstar);

  alpha_region region{{}, tol};
  if (gmax < threshold) {
    region.intervals.push_back({0.0, 1.0});
    return region;
  }
  if (threshold > 0.0) {
    const double r = detail::bisect_edge(g, threshold, 0.0, xstar, tol);
    region.intervals.push_back({0.0, r});
  }
  if (threshold > delta) {
    const double r = detail::bisect_edge_desc(g, threshold, xstar, 1.0, tol);
    region.intervals.push_back({r, 1.0});
  }
  return region;
}

// Admissible alpha2 values for a fixed alpha1: the open subset of (0, 1)
// where the strict entropy condition holds.
template <number_type T>
alpha_region alpha2_region(const scenario<T>& s, double alpha1, double tol) {
  if (!(alpha1 > 0.0 && alpha1 < 1.0)) {
    throw out_of_range("alpha1 must lie in (0, 1)");
  }
  const detail::scenario_entropies<T> e(s);
  return sublevel_region(e.phi2 - e.psi2, condition_threshold(s, alpha1), tol);
}

}  // namespace locc
