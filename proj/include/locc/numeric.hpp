#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "locc/errors.hpp"

namespace locc {

// Exact scalar: arbitrary-precision fraction, always fully reduced with a
// positive denominator. Expression templates are off so that arithmetic on
// rationals yields rationals, keeping the number_type concept satisfied in
// compound expressions.
using rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                  boost::multiprecision::et_off>;

// Every algorithm in the library is instantiated with one of these two
// scalars. Rational instantiations compare exactly; double instantiations
// absorb float noise through comparison_tolerance.
template <class T>
concept number_type = std::same_as<T, double> || std::same_as<T, rational>;

// Absolute cushion for order comparisons in real mode. Majorization is
// boundary sensitive, so the cushion is kept at rounding-noise scale.
inline constexpr double comparison_tolerance = 1e-12;

template <number_type T>
double to_double(const T& x) {
  if constexpr (std::same_as<T, rational>) {
    return static_cast<double>(x);
  } else {
    return x;
  }
}

// x >= y: exact for rationals, tolerant for doubles.
template <number_type T>
bool geq(const T& x, const T& y) {
  if constexpr (std::same_as<T, rational>) {
    return x >= y;
  } else {
    return x >= y - comparison_tolerance;
  }
}

// x > y with the full cushion cleared in real mode. Used where a hypothesis
// demands a strict inequality and claiming it on noise would be wrong.
template <number_type T>
bool clearly_greater(const T& x, const T& y) {
  if constexpr (std::same_as<T, rational>) {
    return x > y;
  } else {
    return x > y + comparison_tolerance;
  }
}

template <number_type T>
bool clearly_less(const T& x, const T& y) {
  return clearly_greater(y, x);
}

template <number_type T>
T scalar_half() {
  if constexpr (std::same_as<T, rational>) {
    return rational(1, 2);
  } else {
    return 0.5;
  }
}

// ---------------------------------------------------------------------------
// Mixed-mode value as it arrives from text input. Library entry points are
// templated on the scalar; this variant exists so front ends can defer the
// exact-vs-real decision until all inputs have been seen.

using number = std::variant<rational, double>;

inline bool is_exact(const number& n) { return n.index() == 0; }

inline double number_as_double(const number& n) {
  return is_exact(n) ? static_cast<double>(std::get<rational>(n))
                     : std::get<double>(n);
}

inline std::string format_scalar(const rational& x) { return x.str(); }

inline std::string format_scalar(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

inline std::string format_number(const number& n) {
  return is_exact(n) ? format_scalar(std::get<rational>(n))
                     : format_scalar(std::get<double>(n));
}

namespace detail {

inline bool parse_integer(std::string_view text,
                          boost::multiprecision::cpp_int& out) {
  if (text.empty()) return false;
  std::size_t pos = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (pos == text.size()) return false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  out = boost::multiprecision::cpp_int(std::string(text));
  return true;
}

}  // namespace detail

// Parses "p/q" or a bare integer as an exact rational and a decimal literal
// as a double. Throws out_of_range on anything else (including q = 0 and
// non-finite decimals).
inline number parse_number(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    boost::multiprecision::cpp_int num, den;
    if (!detail::parse_integer(text.substr(0, slash), num) ||
        !detail::parse_integer(text.substr(slash + 1), den)) {
      throw out_of_range("not a valid fraction: \"" + std::string(text) + "\"");
    }
    if (den == 0) {
      throw out_of_range("zero denominator: \"" + std::string(text) + "\"");
    }
    return rational(num, den);
  }
  if (boost::multiprecision::cpp_int i; detail::parse_integer(text, i)) {
    return rational(i);
  }
  double value = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw out_of_range("not a valid number: \"" + std::string(text) + "\"");
  }
  return value;
}

}  // namespace locc
