#include "fgt/mixed_word.hpp"

#include "fgt/errors.hpp"

namespace fgt {

MixedWord MixedWord::variable(int exponent) {
  MixedWord w;
  w.append({Factor::Kind::Variable, exponent, {}, {}});
  return w;
}

MixedWord MixedWord::slot(std::string name, int exponent) {
  MixedWord w;
  w.append({Factor::Kind::Slot, exponent, std::move(name), {}});
  return w;
}

MixedWord MixedWord::from_word(const Word& word) {
  MixedWord w;
  w.append({Factor::Kind::Letters, 0, {}, word});
  return w;
}

void MixedWord::append(Factor f) {
  // Drop empty factors outright.
  if (f.kind == Factor::Kind::Letters) {
    if (f.letters.empty()) return;
  } else if (f.exponent == 0) {
    return;
  }
  // Merge with the tail factor when kinds (and slot names) match.
  while (!factors_.empty()) {
    Factor& tail = factors_.back();
    if (tail.kind != f.kind) break;
    if (f.kind == Factor::Kind::Letters) {
      f.letters = fgt::concat(tail.letters, f.letters);
      factors_.pop_back();
      if (f.letters.empty()) return;
    } else if (f.kind == Factor::Kind::Slot && tail.name != f.name) {
      break;
    } else {
      f.exponent += tail.exponent;
      factors_.pop_back();
      if (f.exponent == 0) return;
    }
  }
  factors_.push_back(std::move(f));
}

MixedWord concat(const MixedWord& x, const MixedWord& y) {
  MixedWord out = x;
  for (const auto& f : y.factors_) out.append(f);
  return out;
}

MixedWord invert(const MixedWord& w) {
  MixedWord out;
  const auto& fs = w.factors();
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
    MixedWord::Factor f = *it;
    if (f.kind == MixedWord::Factor::Kind::Letters) {
      f.letters = invert(f.letters);
    } else {
      f.exponent = -f.exponent;
    }
    out.append(std::move(f));
  }
  return out;
}

MixedWord power(const MixedWord& w, int n) {
  if (n < 0) return power(invert(w), -n);
  MixedWord out;
  for (int i = 0; i < n; ++i) out = concat(out, w);
  return out;
}

MixedWord commutator(const MixedWord& x, const MixedWord& y,
                     BracketConvention conv) {
  if (conv == BracketConvention::Paper) {
    return concat(concat(x, y), concat(invert(x), invert(y)));
  }
  return concat(concat(invert(x), invert(y)), concat(x, y));
}

MixedWord nested_commutator_word(std::span<const int> powers,
                                 BracketConvention conv) {
  if (powers.empty()) throw Error("nested commutator word: empty power list");
  for (int p : powers) {
    if (p <= 0) throw Error("nested commutator word: powers must be positive");
  }
  MixedWord w = MixedWord::variable(powers[0]);
  for (std::size_t i = 1; i < powers.size(); ++i) {
    w = power(commutator(w, MixedWord::slot("g"), conv), powers[i]);
  }
  return w;
}

Word substitute(const MixedWord& w, const Word& variable_value,
                const std::map<std::string, Word>& constants) {
  Word out;
  for (const auto& f : w.factors()) {
    switch (f.kind) {
      case MixedWord::Factor::Kind::Variable:
        out = concat(out, power(variable_value, f.exponent));
        break;
      case MixedWord::Factor::Kind::Slot: {
        auto it = constants.find(f.name);
        if (it == constants.end()) {
          throw Error("unassigned constant slot '" + f.name + "'");
        }
        out = concat(out, power(it->second, f.exponent));
        break;
      }
      case MixedWord::Factor::Kind::Letters:
        out = concat(out, f.letters);
        break;
    }
  }
  return out;
}

}  // namespace fgt
