#include "fgt/word_parse.hpp"

#include <cctype>
#include <cstdlib>

#include "fgt/errors.hpp"

namespace fgt {

const MacroTable& default_macros() {
  static const MacroTable table = {
      {"a", Word{Letter::V, Letter::U}},
      {"b", Word{Letter::V, Letter::V, Letter::U}},
  };
  return table;
}

namespace {

constexpr int kMaxExponentMagnitude = 1 << 20;
constexpr int kMaxNestingDepth = 256;

class Parser {
 public:
  Parser(std::string_view text, const MacroTable& macros,
         BracketConvention conv)
      : text_(text), macros_(macros), conv_(conv) {}

  Word run() {
    skip_ws();
    if (at_end()) throw ParseError("empty input", 0);
    Word w = parse_expr(0);
    skip_ws();
    if (!at_end()) throw ParseError("unexpected character", pos_);
    return w;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }

  bool at_atom_start() {
    if (at_end()) return false;
    char c = peek();
    return c == '(' || c == '[' || c == '_' ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  Word parse_expr(int depth) {
    if (depth > kMaxNestingDepth) {
      throw ParseError("nesting too deep", pos_);
    }
    skip_ws();
    if (!at_atom_start()) throw ParseError("expected a word", pos_);
    Word out;
    while (true) {
      skip_ws();
      if (!at_atom_start()) break;
      out = concat(out, parse_term(depth));
    }
    return out;
  }

  Word parse_term(int depth) {
    Word atom = parse_atom(depth);
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      return power(atom, parse_int());
    }
    return atom;
  }

  Word parse_atom(int depth) {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Word inner = parse_expr(depth + 1);
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      Word x = parse_expr(depth + 1);
      expect(',');
      Word y = parse_expr(depth + 1);
      expect(']');
      return commutator(x, y, conv_);
    }
    return parse_ident();
  }

  Word parse_ident() {
    std::size_t start = pos_;
    while (!at_end()) {
      char c = peek();
      if (c == '_' || std::isalnum(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
    std::string_view name = text_.substr(start, pos_ - start);
    if (name == "u") return Word{Letter::U};
    if (name == "v") return Word{Letter::V};
    auto it = macros_.find(std::string(name));
    if (it == macros_.end()) {
      throw ParseError("unknown macro '" + std::string(name) + "'", start);
    }
    return it->second;
  }

  int parse_int() {
    std::size_t start = pos_;
    bool negative = false;
    if (!at_end() && peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected an integer exponent", pos_);
    }
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > kMaxExponentMagnitude) {
        throw ParseError("exponent out of range", start);
      }
      ++pos_;
    }
    return static_cast<int>(negative ? -value : value);
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  std::string_view text_;
  const MacroTable& macros_;
  BracketConvention conv_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const MacroTable& macros,
                BracketConvention conv) {
  return Parser(text, macros, conv).run();
}

Word parse_word(std::string_view text, BracketConvention conv) {
  return parse_word(text, default_macros(), conv);
}

}  // namespace fgt
