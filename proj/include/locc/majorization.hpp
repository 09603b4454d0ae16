#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "locc/numeric.hpp"
#include "locc/states.hpp"

namespace locc {

// Outcome of the majorization test. margins[k-1] is the target prefix sum
// minus the source prefix sum at position k; the conversion is allowed iff
// every margin is nonnegative. The final margin is zero since both spectra
// sum to one.
template <number_type T>
struct conversion_verdict {
  bool convertible = false;
  std::vector<T> margins;
  std::optional<std::size_t> first_failure;  // 1-based k of the first deficit
};

template <number_type T>
std::vector<T> prefix_sums(const prob_vector<T>& v) {
  std::vector<T> sums;
  sums.reserve(v.size());
  T acc{};
  for (const T& p : v.entries()) {
    acc += p;
    sums.push_back(acc);
  }
  return sums;
}

// Nielsen's criterion: source -> target by LOCC iff the source spectrum is
// majorized by the target spectrum. Vectors of unequal length are compared
// as if the shorter were zero-padded. All margins are reported, not just the
// first deficit.
template <number_type T>
conversion_verdict<T> majorizes(const prob_vector<T>& source,
                                const prob_vector<T>& target) {
  const auto src = prefix_sums(source);
  const auto tgt = prefix_sums(target);
  const std::size_t d = std::max(src.size(), tgt.size());

  conversion_verdict<T> verdict;
  verdict.convertible = true;
  verdict.margins.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    const T& s = src[std::min(k, src.size() - 1)];
    const T& t = tgt[std::min(k, tgt.size() - 1)];
    verdict.margins.push_back(t - s);
    if (!geq(verdict.margins.back(), T{})) {
      verdict.convertible = false;
      if (!verdict.first_failure) verdict.first_failure = k + 1;
    }
  }
  return verdict;
}

}  // namespace locc
