#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "fgt/word.hpp"

namespace fgt {

// A word in the free product of <u,v | u^2 = v^3 = 1> with a formal
// variable t and named constant slots, e.g. [t^2, g]^3. Factors alternate:
// adjacent factors of the same kind/name merge (powers add, letter blocks
// concatenate), so no two adjacent variable powers survive; empty factors
// are dropped. The empty factor list is the identity.
class MixedWord {
 public:
  struct Factor {
    enum class Kind { Variable, Slot, Letters };
    Kind kind;
    int exponent = 0;   // Variable/Slot: nonzero exponent
    std::string name;   // Slot: constant-slot name
    Word letters;       // Letters: nonempty reduced word

    bool operator==(const Factor&) const = default;
  };

  MixedWord() = default;

  static MixedWord variable(int exponent = 1);
  static MixedWord slot(std::string name, int exponent = 1);
  static MixedWord from_word(const Word& w);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_identity() const { return factors_.empty(); }

  bool operator==(const MixedWord&) const = default;

  friend MixedWord concat(const MixedWord& x, const MixedWord& y);
  friend MixedWord invert(const MixedWord& w);

 private:
  void append(Factor f);

  std::vector<Factor> factors_;
};

MixedWord concat(const MixedWord& x, const MixedWord& y);
MixedWord invert(const MixedWord& w);
MixedWord power(const MixedWord& w, int n);
MixedWord commutator(const MixedWord& x, const MixedWord& y,
                     BracketConvention conv);

// The nested commutator family w_{i_0}(t) = t^{i_0},
// w_{i_0,...,i_m}(t) = [w_{i_0,...,i_{m-1}}(t), g]^{i_m}, with the group
// constant as the slot named "g". Powers must be positive and nonempty.
MixedWord nested_commutator_word(std::span<const int> powers,
                                 BracketConvention conv = BracketConvention::Paper);

// Evaluates the word map: substitutes `variable_value` for t and resolves
// every constant slot through `constants`; throws Error on an unassigned
// slot. Result is reduced.
Word substitute(const MixedWord& w, const Word& variable_value,
                const std::map<std::string, Word>& constants = {});

}  // namespace fgt
