#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fgt {

// Generators of PSL(2,Z) = <u, v | u^2 = v^3 = 1>. VINV is the formal
// inverse of V (v^2 is canonically stored as VINV); U is self-inverse.
// The enumerator order U < V < VINV is the lexicographic order used for
// deterministic tie-breaking.
enum class Letter : std::uint8_t { U = 0, V = 1, VINV = 2 };

Letter inverse(Letter l);

// A word in normal form under u^2 = v^3 = e: no adjacent U,U pair and no
// adjacent V/VINV pair (v-exponents are merged mod 3). Letters are in
// application order: index 0 acts first. The empty word is the identity.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::span<const Letter> letters);

  // Appends one letter and restores normal form at the tail.
  void push(Letter l);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

// Normal form of an arbitrary letter sequence (push-reduces every letter).
Word reduce(std::span<const Letter> letters);

Word invert(const Word& w);
Word concat(const Word& x, const Word& y);
Word power(const Word& w, int n);

// conjugate(w, c) is the element c w c^-1 in application order: the letter
// sequence applies c first, then w, then c^-1. With this convention
// commutator_step(v, a^14) reproduces the reference trace figures; the
// opposite order provably does not.
Word conjugate(const Word& w, const Word& c);

enum class BracketConvention {
  Paper,   // [x,y] = x y x^-1 y^-1
  Compat,  // [x,y] = x^-1 y^-1 x y (the convention behind the reference figures)
};

Word commutator(const Word& x, const Word& y, BracketConvention conv);

// Number of U letters; |w|_u controls the exact-enumeration cost 2^(2|w|_u+2).
int u_count(const Word& w);

// Renders the word in the CLI grammar ("u", "v", "v^-1" separated by
// spaces); parse_word round-trips it. The identity renders as "".
std::string to_text(const Word& w);

}  // namespace fgt
