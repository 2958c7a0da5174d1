#pragma once

#include <cstdint>
#include <string>

#include "fgt/rational.hpp"
#include "fgt/word.hpp"

// "p/q (0.1234)" — exact value first, 4-decimal rendering after.
std::string fraction_and_decimal(const fgt::Rational& r);

// Same, but keeping the caller's unreduced numerator/denominator.
std::string counts_and_decimal(std::uint64_t count, std::uint64_t total);

fgt::BracketConvention parse_bracket(const std::string& name);

// Exact rational from "p/q", "0.69", or "1" style text.
fgt::Rational parse_rational_text(const std::string& text);
