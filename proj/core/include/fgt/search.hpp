#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "fgt/machine.hpp"
#include "fgt/rational.hpp"
#include "fgt/word.hpp"
#include "fgt/word_parse.hpp"

namespace fgt {

// Conjugators base^k for k in [k_min, k_max].
struct ConjugatorRange {
  Word base;
  int k_min = 1;
  int k_max = 1;
};

struct SearchConfig {
  int ell = 7;
  std::vector<ConjugatorRange> family;
  int depth = 3;
  BracketConvention bracket = BracketConvention::Compat;
  Rational target_trace = Rational(1);  // stop once best fixed_mass reaches it
  int beam_width = 8;

  // Execution plumbing (not part of the search semantics).
  int workers = 1;
  int bit_cap = kDefaultBitCap;
  const std::atomic<bool>* interrupt = nullptr;
  std::function<void(int depth, std::size_t candidates_scored)> on_iteration;
};

struct SearchResult {
  Word word;
  TraceEstimate estimate;
  Word seed;
  std::vector<Word> conjugators;  // lineage: one commutator step each
  BracketConvention bracket = BracketConvention::Compat;
  std::int64_t wall_ms = 0;       // time spent scoring this word
};

enum class SearchStatus {
  Converged,       // best fixed_mass reached target_trace
  DepthExhausted,  // ran all iterations without reaching the target
  Trivialized,     // an iteration produced no new non-identity candidate
  Incomplete,      // interrupted; results hold the last completed beam
};

std::string_view to_string(SearchStatus status);

struct SearchOutcome {
  SearchStatus status;
  std::vector<SearchResult> results;  // retained beam, best first
};

// One contraction step: the commutator of (h w h^-1) with w.
Word commutator_step(const Word& w, const Word& h, BracketConvention conv);

// The reference three-step sequence: g1 = step(v, a^14), g2 = step(g1, a^9),
// g3 = step(g2, b^2), all with the Compat bracket and macros a = v*u,
// b = v^2*u, scored by trace_bounded at `ell` (>= 1). Lineage depths 1, 2, 3.
std::vector<SearchResult> replay_paper_sequence(
    int ell, const TraceOptions& options = {},
    BracketConvention bracket = BracketConvention::Compat);

// Beam search with elitism: each iteration scores commutator_step(w, base^k)
// for every retained w and family conjugator, keeps the best `beam_width`
// of parents + children by (fixed_mass desc, shorter word, lexicographic),
// and stops at `depth` or when the best fixed_mass reaches target_trace.
// Identity children are discarded; duplicates are scored once.
// Deterministic for a fixed config, independent of `workers`.
SearchOutcome greedy_search(const Word& seed, const SearchConfig& config);

// Family spec grammar for the CLI: comma-separated `word:k`
// or `word:k1..k2` items, e.g. "a:1..14,b:1..4".
std::vector<ConjugatorRange> parse_family_spec(std::string_view spec,
                                               const MacroTable& macros,
                                               BracketConvention conv);

}  // namespace fgt
