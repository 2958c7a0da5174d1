#include "fgt/rational.hpp"

namespace fgt {

Rational dyadic(std::uint64_t num, int bits) {
  Integer den = Integer(1) << bits;
  return Rational(Integer(num), den);
}

std::string to_fraction_string(const Rational& r) {
  // cpp_rational is always stored in lowest terms with positive denominator.
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_decimal_string(const Rational& r, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;

  // round(|r| * scale) half away from zero
  Integer num = numerator(r) * scale * 2;
  Integer den = denominator(r);
  bool negative = num < 0;
  if (negative) num = -num;
  Integer scaled = (num / den + 1) / 2;

  Integer int_part = scaled / scale;
  Integer frac_part = scaled % scale;

  std::string out;
  if (negative && (int_part != 0 || frac_part != 0)) out += '-';
  out += int_part.str();
  if (digits > 0) {
    std::string frac = frac_part.str();
    frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(),
                '0');
    out += '.';
    out += frac;
  }
  return out;
}

}  // namespace fgt
