#include "fgt/search.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <set>
#include <thread>

#include "fgt/errors.hpp"

namespace fgt {

namespace {

using Clock = std::chrono::steady_clock;

struct Candidate {
  Word word;
  TraceEstimate estimate;
  std::vector<Word> conjugators;
  std::int64_t wall_ms = 0;
};

// Retention order: certified lower bound first, then shorter, then
// lexicographic over letters (U < V < VINV).
bool better(const Candidate& x, const Candidate& y) {
  if (x.estimate.fixed_count != y.estimate.fixed_count) {
    return x.estimate.fixed_count > y.estimate.fixed_count;
  }
  if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
  return x.word < y.word;
}

TraceEstimate timed_trace(const Word& w, int ell, const TraceOptions& options,
                          std::int64_t& wall_ms) {
  auto start = Clock::now();
  TraceEstimate est = trace_bounded(w, ell, options);
  wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                Clock::now() - start)
                .count();
  return est;
}

}  // namespace

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Converged:
      return "converged";
    case SearchStatus::DepthExhausted:
      return "depth_exhausted";
    case SearchStatus::Trivialized:
      return "trivialized";
    case SearchStatus::Incomplete:
      return "incomplete";
  }
  return "unknown";
}

Word commutator_step(const Word& w, const Word& h, BracketConvention conv) {
  if (w.empty()) throw Error("commutator step requires a nonempty word");
  return commutator(conjugate(w, h), w, conv);
}

std::vector<SearchResult> replay_paper_sequence(int ell,
                                                const TraceOptions& options,
                                                BracketConvention bracket) {
  if (ell < 1) throw Error("replay requires a window radius >= 1");
  const Word seed{Letter::V};
  const Word a = default_macros().at("a");
  const Word b = default_macros().at("b");
  const std::vector<Word> conjugators = {power(a, 14), power(a, 9),
                                         power(b, 2)};

  std::vector<SearchResult> results;
  Word current = seed;
  std::vector<Word> lineage;
  for (const Word& h : conjugators) {
    current = commutator_step(current, h, bracket);
    lineage.push_back(h);
    SearchResult r;
    r.word = current;
    r.estimate = timed_trace(current, ell, options, r.wall_ms);
    r.seed = seed;
    r.conjugators = lineage;
    r.bracket = bracket;
    results.push_back(std::move(r));
  }
  return results;
}

SearchOutcome greedy_search(const Word& seed, const SearchConfig& config) {
  if (seed.empty()) throw Error("search seed must be nonempty");
  if (config.depth < 1) throw Error("search depth must be >= 1");
  if (config.beam_width < 1) throw Error("beam width must be >= 1");
  for (const auto& range : config.family) {
    if (range.k_min > range.k_max) {
      throw Error("conjugator exponent range is empty");
    }
  }
  if (!(config.target_trace >= 0 && config.target_trace <= 1)) {
    throw Error("target trace must lie in [0, 1]");
  }

  TraceOptions trace_options;
  trace_options.bit_cap = config.bit_cap;
  trace_options.interrupt = config.interrupt;

  auto interrupted = [&] {
    return config.interrupt &&
           config.interrupt->load(std::memory_order_relaxed);
  };

  Candidate seed_candidate;
  seed_candidate.word = seed;
  {
    TraceOptions opts = trace_options;
    opts.workers = config.workers;
    seed_candidate.estimate =
        timed_trace(seed, config.ell, opts, seed_candidate.wall_ms);
  }
  if (seed_candidate.estimate.fixed_mass() == 1) {
    throw Error("search seed already fixes everything at this window");
  }

  std::vector<Candidate> beam = {std::move(seed_candidate)};

  auto to_results = [&](SearchStatus status) {
    SearchOutcome outcome;
    outcome.status = status;
    for (const Candidate& c : beam) {
      SearchResult r;
      r.word = c.word;
      r.estimate = c.estimate;
      r.seed = seed;
      r.conjugators = c.conjugators;
      r.bracket = config.bracket;
      r.wall_ms = c.wall_ms;
      outcome.results.push_back(std::move(r));
    }
    return outcome;
  };

  for (int iteration = 1; iteration <= config.depth; ++iteration) {
    // Expand: all non-identity children not already in the pool.
    struct Pending {
      Word word;
      std::size_t parent;
      Word conjugator;
    };
    std::vector<Pending> pending;
    std::set<Word> pool_words;
    for (const Candidate& c : beam) pool_words.insert(c.word);
    for (std::size_t p = 0; p < beam.size(); ++p) {
      for (const auto& range : config.family) {
        for (int k = range.k_min; k <= range.k_max; ++k) {
          Word child = commutator_step(beam[p].word, power(range.base, k),
                                       config.bracket);
          if (child.empty()) continue;
          if (!pool_words.insert(child).second) continue;
          pending.push_back({std::move(child), p, power(range.base, k)});
        }
      }
    }
    if (pending.empty()) {
      return SearchOutcome{SearchStatus::Trivialized, {}};
    }

    // Score children across the worker pool (one candidate per task),
    // then merge in index order so the outcome is scheduling-independent.
    std::vector<Candidate> children(pending.size());
    std::atomic<std::size_t> next{0};
    auto score_worker = [&] {
      while (!interrupted()) {
        std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= pending.size()) break;
        Candidate& c = children[i];
        c.word = pending[i].word;
        c.estimate =
            timed_trace(c.word, config.ell, trace_options, c.wall_ms);
        c.conjugators = beam[pending[i].parent].conjugators;
        c.conjugators.push_back(pending[i].conjugator);
      }
    };
    int workers = std::max(1, config.workers);
    if (static_cast<std::size_t>(workers) > pending.size()) {
      workers = static_cast<int>(pending.size());
    }
    if (workers == 1) {
      score_worker();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (int i = 0; i < workers; ++i) pool.emplace_back(score_worker);
      for (auto& t : pool) t.join();
    }
    if (interrupted()) {
      return to_results(SearchStatus::Incomplete);
    }

    // Elitism: parents compete with their children.
    for (Candidate& c : children) beam.push_back(std::move(c));
    std::sort(beam.begin(), beam.end(), better);
    if (beam.size() > static_cast<std::size_t>(config.beam_width)) {
      beam.resize(config.beam_width);
    }

    if (config.on_iteration) config.on_iteration(iteration, pending.size());

    if (beam.front().estimate.fixed_mass() >= config.target_trace) {
      return to_results(SearchStatus::Converged);
    }
  }
  return to_results(SearchStatus::DepthExhausted);
}

std::vector<ConjugatorRange> parse_family_spec(std::string_view spec,
                                               const MacroTable& macros,
                                               BracketConvention conv) {
  std::vector<ConjugatorRange> family;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    std::string_view item = spec.substr(
        pos, comma == std::string_view::npos ? spec.size() - pos : comma - pos);

    std::size_t colon = item.rfind(':');
    if (colon == std::string_view::npos) {
      throw ParseError("family item '" + std::string(item) +
                       "' must look like word:k or word:k1..k2");
    }
    ConjugatorRange range;
    range.base = parse_word(item.substr(0, colon), macros, conv);

    std::string_view bounds = item.substr(colon + 1);
    auto strict_int = [&](std::string_view text) {
      int value = 0;
      auto [ptr, ec] =
          std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("bad exponent range '" + std::string(bounds) + "'");
      }
      return value;
    };
    std::size_t dots = bounds.find("..");
    if (dots == std::string_view::npos) {
      range.k_min = range.k_max = strict_int(bounds);
    } else {
      range.k_min = strict_int(bounds.substr(0, dots));
      range.k_max = strict_int(bounds.substr(dots + 2));
    }
    if (range.k_min > range.k_max) {
      throw ParseError("empty exponent range '" + std::string(bounds) + "'");
    }
    family.push_back(std::move(range));

    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (family.empty()) throw ParseError("empty conjugator family");
  return family;
}

}  // namespace fgt
