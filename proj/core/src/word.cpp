#include "fgt/word.hpp"

#include "fgt/errors.hpp"

namespace fgt {

Letter inverse(Letter l) {
  switch (l) {
    case Letter::U:
      return Letter::U;
    case Letter::V:
      return Letter::VINV;
    case Letter::VINV:
      return Letter::V;
  }
  throw Error("invalid letter");
}

Word::Word(std::initializer_list<Letter> letters) {
  for (Letter l : letters) push(l);
}

Word::Word(std::span<const Letter> letters) {
  for (Letter l : letters) push(l);
}

namespace {

// V-exponent of a letter mod 3 (V = 1, VINV = 2); U has none.
int v_exponent(Letter l) { return l == Letter::V ? 1 : 2; }

}  // namespace

void Word::push(Letter l) {
  letters_.push_back(l);
  // Cancel and merge at the tail until the normal form is restored.
  while (letters_.size() >= 2) {
    Letter a = letters_[letters_.size() - 2];
    Letter b = letters_.back();
    if (a == Letter::U && b == Letter::U) {
      letters_.pop_back();
      letters_.pop_back();
    } else if (a != Letter::U && b != Letter::U) {
      int e = (v_exponent(a) + v_exponent(b)) % 3;
      letters_.pop_back();
      letters_.pop_back();
      if (e == 1) {
        letters_.push_back(Letter::V);
      } else if (e == 2) {
        letters_.push_back(Letter::VINV);
      }
    } else {
      break;
    }
  }
}

Word reduce(std::span<const Letter> letters) { return Word(letters); }

Word invert(const Word& w) {
  Word out;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.push(inverse(*it));
  return out;
}

Word concat(const Word& x, const Word& y) {
  Word out = x;
  for (Letter l : y.letters()) out.push(l);
  return out;
}

Word power(const Word& w, int n) {
  if (n < 0) return power(invert(w), -n);
  Word out;
  for (int i = 0; i < n; ++i) out = concat(out, w);
  return out;
}

Word conjugate(const Word& w, const Word& c) {
  return concat(concat(c, w), invert(c));
}

Word commutator(const Word& x, const Word& y, BracketConvention conv) {
  if (conv == BracketConvention::Paper) {
    return concat(concat(x, y), concat(invert(x), invert(y)));
  }
  return concat(concat(invert(x), invert(y)), concat(x, y));
}

int u_count(const Word& w) {
  int n = 0;
  for (Letter l : w.letters()) n += (l == Letter::U);
  return n;
}

std::string to_text(const Word& w) {
  std::string out;
  for (Letter l : w.letters()) {
    if (!out.empty()) out += ' ';
    switch (l) {
      case Letter::U:
        out += 'u';
        break;
      case Letter::V:
        out += 'v';
        break;
      case Letter::VINV:
        out += "v^-1";
        break;
    }
  }
  return out;
}

}  // namespace fgt
