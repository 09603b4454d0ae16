#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "locc/errors.hpp"
#include "locc/numeric.hpp"

namespace locc {

// Descending-ordered probability spectrum: the squared Schmidt coefficients
// of one side of a bipartite pure state. Entries are nonnegative, sorted
// non-increasing, and sum to one (exactly for rationals, within
// comparison_tolerance for doubles).
template <number_type T>
class prob_vector {
 public:
  explicit prob_vector(std::vector<T> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw out_of_range("probability vector is empty");
    T sum{};
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (!geq(entries_[i], T{})) {
        throw out_of_range("probability vector has a negative entry");
      }
      if (i > 0 && !geq(entries_[i - 1], entries_[i])) {
        throw out_of_range("probability vector is not sorted non-increasing");
      }
      sum += entries_[i];
    }
    if constexpr (std::same_as<T, rational>) {
      if (sum != 1) throw out_of_range("probability vector does not sum to 1");
    } else {
      if (std::abs(sum - 1.0) > comparison_tolerance) {
        throw out_of_range("probability vector does not sum to 1");
      }
    }
  }

  // Stable descending sort, then validate. Ties keep their input order.
  static prob_vector from_unsorted(std::vector<T> entries) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const T& a, const T& b) { return a > b; });
    return prob_vector(std::move(entries));
  }

  const std::vector<T>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const T& operator[](std::size_t i) const { return entries_[i]; }

  bool operator==(const prob_vector&) const = default;

 private:
  std::vector<T> entries_;
};

// One bi-orthogonal branch sqrt(p)|aa> + sqrt(1-p)|bb> with 1/2 < p < 1.
template <number_type T>
class two_term_state {
 public:
  explicit two_term_state(T p) : p_(std::move(p)) {
    if (!(p_ > scalar_half<T>() && p_ < T(1))) {
      throw out_of_range("two-term state parameter must lie in (1/2, 1)");
    }
  }

  const T& p() const { return p_; }

  prob_vector<T> spectrum() const {
    return prob_vector<T>({p_, T(1) - p_});
  }

 private:
  T p_;
};

template <number_type T>
two_term_state<T> make_two_term_state(const T& p) {
  return two_term_state<T>(p);
}

// The four branch parameters of the initial pair (xi1, eta1) and the final
// pair (xi2, eta2), constrained by the strict chain
//   1/2 < eta2 < xi2 < eta1 < xi1 < 1.
// The chain encodes that neither initial branch converts to either final
// branch on its own (eta1 > xi2).
template <number_type T>
class scenario {
 public:
  scenario(T xi1, T eta1, T xi2, T eta2)
      : xi1_(std::move(xi1)),
        eta1_(std::move(eta1)),
        xi2_(std::move(xi2)),
        eta2_(std::move(eta2)) {
    if (!(scalar_half<T>() < eta2_)) {
      throw chain_violation("1/2 < eta2 fails");
    }
    if (!(eta2_ < xi2_)) throw chain_violation("eta2 < xi2 fails");
    if (!(xi2_ < eta1_)) throw chain_violation("xi2 < eta1 fails");
    if (!(eta1_ < xi1_)) throw chain_violation("eta1 < xi1 fails");
    if (!(xi1_ < T(1))) throw chain_violation("xi1 < 1 fails");
  }

  const T& xi1() const { return xi1_; }
  const T& eta1() const { return eta1_; }
  const T& xi2() const { return xi2_; }
  const T& eta2() const { return eta2_; }

  two_term_state<T> phi1() const { return two_term_state<T>(xi1_); }
  two_term_state<T> psi1() const { return two_term_state<T>(eta1_); }
  two_term_state<T> phi2() const { return two_term_state<T>(xi2_); }
  two_term_state<T> psi2() const { return two_term_state<T>(eta2_); }

 private:
  T xi1_, eta1_, xi2_, eta2_;
};

template <number_type T>
scenario<T> make_scenario(const T& xi1, const T& eta1, const T& xi2,
                          const T& eta2) {
  return scenario<T>(xi1, eta1, xi2, eta2);
}

// Squared superposition amplitudes of the two branches. The closed interval
// is deliberate: the brute-force oracle probes the degenerate endpoints, and
// the propositions impose their own stricter ranges.
template <number_type T>
class superposition_weights {
 public:
  superposition_weights(T alpha1, T alpha2)
      : alpha1_(std::move(alpha1)), alpha2_(std::move(alpha2)) {
    if (!(alpha1_ >= T{} && alpha1_ <= T(1))) {
      throw out_of_range("alpha1 must lie in [0, 1]");
    }
    if (!(alpha2_ >= T{} && alpha2_ <= T(1))) {
      throw out_of_range("alpha2 must lie in [0, 1]");
    }
  }

  const T& alpha1() const { return alpha1_; }
  const T& alpha2() const { return alpha2_; }

 private:
  T alpha1_, alpha2_;
};

// Schmidt spectrum of sqrt(alpha)|phi> + sqrt(1-alpha)|psi> for bi-orthogonal
// branches with parameters xi and eta: the weighted union of the two branch
// spectra, sorted non-increasing.
template <number_type T>
prob_vector<T> superposition_schmidt(const T& xi, const T& eta,
                                     const T& alpha) {
  if (!(xi > scalar_half<T>() && xi < T(1))) {
    throw out_of_range("xi must lie in (1/2, 1)");
  }
  if (!(eta > scalar_half<T>() && eta < T(1))) {
    throw out_of_range("eta must lie in (1/2, 1)");
  }
  if (!(alpha >= T{} && alpha <= T(1))) {
    throw out_of_range("alpha must lie in [0, 1]");
  }
  const T beta = T(1) - alpha;
  std::vector<T> raw{alpha * xi, alpha * (T(1) - xi), beta * eta,
                     beta * (T(1) - eta)};
  return prob_vector<T>::from_unsorted(std::move(raw));
}

}  // namespace locc
