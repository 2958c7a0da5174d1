#include "format.hpp"

#include "fgt/errors.hpp"

std::string fraction_and_decimal(const fgt::Rational& r) {
  return fgt::to_fraction_string(r) + " (" + fgt::to_decimal_string(r) + ")";
}

std::string counts_and_decimal(std::uint64_t count, std::uint64_t total) {
  return std::to_string(count) + "/" + std::to_string(total) + " (" +
         fgt::to_decimal_string(fgt::Rational(count) / total) + ")";
}

fgt::BracketConvention parse_bracket(const std::string& name) {
  if (name == "paper") return fgt::BracketConvention::Paper;
  if (name == "compat") return fgt::BracketConvention::Compat;
  throw fgt::ParseError("bracket must be \"paper\" or \"compat\"");
}

fgt::Rational parse_rational_text(const std::string& text) {
  const auto malformed = [&] {
    return fgt::ParseError("not a rational: \"" + text + "\"");
  };
  if (text.empty()) throw malformed();
  const bool negative = text[0] == '-';
  const std::string body = negative ? text.substr(1) : text;
  if (body.empty()) throw malformed();

  const auto digits_to_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw malformed();
    }
    return fgt::Integer(s);
  };

  fgt::Rational value;
  if (const auto slash = body.find('/'); slash != std::string::npos) {
    const fgt::Integer den = digits_to_int(body.substr(slash + 1));
    if (den == 0) throw malformed();
    value = fgt::Rational(digits_to_int(body.substr(0, slash)), den);
  } else if (const auto dot = body.find('.'); dot != std::string::npos) {
    const std::string frac = body.substr(dot + 1);
    const std::string whole = body.substr(0, dot);
    if (whole.empty() && frac.empty()) throw malformed();
    fgt::Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const fgt::Integer num =
        digits_to_int(whole.empty() ? "0" : whole) * scale +
        digits_to_int(frac.empty() ? "0" : frac);
    value = fgt::Rational(num, scale);
  } else {
    value = fgt::Rational(digits_to_int(body));
  }
  return negative ? -value : value;
}
