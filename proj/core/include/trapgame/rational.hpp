#pragma once

// Exact arithmetic types used throughout the library, plus string
// conversions for the "num/den" wire format.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace trapgame {

// Expression templates are disabled so arithmetic results are plain values
// (usable with std::min/max, initializer lists, and structured code).
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Largest integer <= r.
inline Int floor_rat(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (q * denominator(r) > numerator(r)) --q;  // fix truncation for negatives
  return q;
}

inline Int ceil_rat(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (q * denominator(r) < numerator(r)) ++q;
  return q;
}

inline Rat rat_pow(Rat base, unsigned exp) {
  Rat result = 1;
  while (exp != 0) {
    if (exp & 1u) result *= base;
    exp >>= 1u;
    if (exp != 0) base *= base;
  }
  return result;
}

// Formats r as "num/den" in lowest terms; integers print as "n/1" so the
// wire format is uniform.
std::string rat_string(const Rat& r);

// Accepts "num/den", plain integers, and decimal literals such as "2.5"
// (parsed exactly). Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& text);

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace trapgame
