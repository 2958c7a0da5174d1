#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fgt {

// Exact arithmetic for all reported measures, bounds, and recurrence
// iterates. Header-only boost backend, no external library linkage.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num / 2^bits as an exact rational.
Rational dyadic(std::uint64_t num, int bits);

// Canonical "p/q" rendering, always with an explicit denominator >= 1
// ("0/1", "3/4", "1/1"). Stable for CSV/JSON and byte-wise comparisons.
std::string to_fraction_string(const Rational& r);

// Fixed-point decimal rendering with `digits` places (default 4, the
// display precision of all reported trace figures); round half away
// from zero.
std::string to_decimal_string(const Rational& r, int digits = 4);

}  // namespace fgt
