#pragma once

#include <stdexcept>
#include <string>

namespace locc {

// Base of every validation failure raised by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A numeric argument lies outside its admissible range.
struct out_of_range : error {
  using error::error;
};

// The scenario ordering chain 1/2 < eta2 < xi2 < eta1 < xi1 < 1 is broken.
// The message names the first violated link.
struct chain_violation : error {
  using error::error;
};

// A predicate was invoked outside the hypothesis it is proven under.
struct hypothesis_violated : error {
  using error::error;
};

// A sweep configuration fails its own sanity checks.
struct config_invalid : error {
  using error::error;
};

}  // namespace locc
