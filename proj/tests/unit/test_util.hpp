#pragma once

#include <random>

#include "fgt/word.hpp"

namespace test_util {

inline fgt::Letter random_letter(std::mt19937_64& rng) {
  return static_cast<fgt::Letter>(rng() % 3);
}

inline fgt::Word random_word(std::mt19937_64& rng, int max_len = 24) {
  fgt::Word w;
  const int len = static_cast<int>(rng() % (max_len + 1));
  for (int i = 0; i < len; ++i) w.push(random_letter(rng));
  return w;
}

inline fgt::Word random_nonempty_word(std::mt19937_64& rng, int max_len = 24) {
  for (;;) {
    fgt::Word w = random_word(rng, max_len);
    if (!w.empty()) return w;
  }
}

// Random reduced word with u_count(w) <= max_u (resampled until it fits).
inline fgt::Word random_word_capped_u(std::mt19937_64& rng, int max_u,
                                      int max_len = 18) {
  for (;;) {
    fgt::Word w = random_word(rng, max_len);
    if (!w.empty() && fgt::u_count(w) <= max_u) return w;
  }
}

}  // namespace test_util
