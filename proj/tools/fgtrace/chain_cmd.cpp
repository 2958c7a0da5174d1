#include <charconv>
#include <cstdio>
#include <string>
#include <vector>

#include "commands.hpp"
#include "fgt/actions.hpp"
#include "fgt/errors.hpp"
#include "format.hpp"

namespace {

int parse_small_int(std::string_view text, const char* what) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw fgt::ParseError(std::string("bad ") + what + ": \"" +
                              std::string(text) + "\"");
  }
  return value;
}

// "n" or "n1..n2", inclusive.
std::pair<int, int> parse_range(const std::string& spec, const char* what) {
  if (const auto dots = spec.find(".."); dots != std::string::npos) {
    const int lo = parse_small_int(spec.substr(0, dots), what);
    const int hi = parse_small_int(spec.substr(dots + 2), what);
    if (lo > hi) {
      throw fgt::ParseError(std::string("empty ") + what + " range");
    }
    return {lo, hi};
  }
  const int single = parse_small_int(spec, what);
  return {single, single};
}

// "t" or "t^j" -> t^j, an exact nonnegative translation amount.
long long parse_element(const std::string& spec) {
  long long base = 0;
  int exponent = 1;
  if (const auto caret = spec.find('^'); caret != std::string::npos) {
    base = parse_small_int(spec.substr(0, caret), "element");
    exponent = parse_small_int(spec.substr(caret + 1), "element");
  } else {
    base = parse_small_int(spec, "element");
  }
  if (base < 0 || exponent < 0) {
    throw fgt::ParseError("element must be nonnegative");
  }
  long long value = 1;
  for (int i = 0; i < exponent; ++i) {
    if (value > (1LL << 40) / (base == 0 ? 1 : base)) {
      throw fgt::ParseError("element out of range");
    }
    value *= base;
  }
  return value;
}

int run_z_tower(const ChainArgs& args) {
  const auto [n_lo, n_hi] = parse_range(args.n_spec, "level");
  if (n_lo < 0 || n_hi >= args.m || args.m > 25) {
    throw fgt::ParseError("levels must satisfy 0 <= n < m <= 25");
  }
  std::printf("level,support,support_decimal\n");
  for (int n = n_lo; n <= n_hi; ++n) {
    const fgt::Rational s = fgt::z_tower_support(n, args.m);
    std::printf("%d,%s,%s\n", n, fgt::to_fraction_string(s).c_str(),
                fgt::to_decimal_string(s).c_str());
  }
  return kExitOk;
}

int run_fixed_ratio(const ChainArgs& args) {
  if (args.m_max < 1 || args.m_max > 20) {
    throw fgt::ParseError("m-max must lie in 1..20");
  }
  const long long t = parse_element(args.element);
  std::vector<fgt::Permutation> levels;
  levels.reserve(args.m_max);
  for (int m = 1; m <= args.m_max; ++m) {
    levels.push_back(fgt::translation_perm(1u << m, t));
  }
  const std::vector<fgt::Rational> ratios = fgt::fixed_ratio_chain(levels);
  std::printf("m,fixed_ratio,fixed_ratio_decimal\n");
  for (int m = 1; m <= args.m_max; ++m) {
    const fgt::Rational& r = ratios[static_cast<std::size_t>(m - 1)];
    std::printf("%d,%s,%s\n", m, fgt::to_fraction_string(r).c_str(),
                fgt::to_decimal_string(r).c_str());
  }
  return kExitOk;
}

}  // namespace

int run_chain(const ChainArgs& args) {
  if (args.z_tower == args.fixed_ratio) {
    throw fgt::ParseError("choose exactly one of --z-tower or --fixed-ratio");
  }
  return args.z_tower ? run_z_tower(args) : run_fixed_ratio(args);
}
