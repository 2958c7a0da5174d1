#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "commands.hpp"
#include "fgt/errors.hpp"
#include "fgt/search.hpp"
#include "fgt/search_io.hpp"
#include "fgt/word_parse.hpp"
#include "format.hpp"

namespace {

void write_out_file(const std::string& path, const std::string& status,
                    const std::vector<fgt::SearchResult>& results) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fgt::Error("cannot open output file: " + path);
  out << fgt::to_json_string(
      status, std::span<const fgt::SearchResult>(results.data(),
                                                 results.size()));
  if (!out.flush()) throw fgt::Error("write failed: " + path);
}

void print_result_line(const char* label, const fgt::SearchResult& r) {
  std::printf("%s: fixed_mass %s discarded_mass %s length %zu\n", label,
              counts_and_decimal(r.estimate.fixed_count,
                                 r.estimate.total).c_str(),
              counts_and_decimal(r.estimate.discarded_count,
                                 r.estimate.total).c_str(),
              r.word.size());
}

// Stdout JSON carries everything the archival file does except wall_ms,
// so identical runs emit identical bytes.
nlohmann::ordered_json stdout_json(const std::string& status,
                                   const std::vector<fgt::SearchResult>& rs) {
  nlohmann::ordered_json doc;
  doc["status"] = status;
  auto& list = doc["results"] = nlohmann::ordered_json::array();
  for (const fgt::SearchResult& r : rs) {
    nlohmann::ordered_json lineage = nlohmann::ordered_json::array();
    fgt::Word parent = r.seed;
    for (const fgt::Word& h : r.conjugators) {
      lineage.push_back({{"parent", fgt::to_text(parent)},
                         {"conjugator", fgt::to_text(h)}});
      parent = fgt::commutator_step(parent, h, r.bracket);
    }
    list.push_back({{"word", fgt::to_text(r.word)},
                    {"ell", r.estimate.ell},
                    {"fixed_mass", r.estimate.fixed_fraction()},
                    {"discarded_mass", r.estimate.discarded_fraction()},
                    {"lineage", std::move(lineage)}});
  }
  return doc;
}

int run_replay(const SearchArgs& args, fgt::BracketConvention conv) {
  fgt::TraceOptions opts;
  opts.workers = args.workers;
  opts.bit_cap = args.bit_cap;
  opts.interrupt = &g_interrupted;

  const auto results = fgt::replay_paper_sequence(args.ell, opts, conv);
  bool complete = true;
  for (const auto& r : results) complete = complete && r.estimate.complete;
  const std::string status = complete ? "replayed" : "incomplete";

  if (!args.out.empty()) write_out_file(args.out, status, results);

  if (args.format == "json") {
    std::printf("%s\n", stdout_json(status, results).dump(2).c_str());
  } else {
    std::printf("mode: replay\nbracket: %s\nell: %d\n",
                args.bracket.empty() ? "compat" : args.bracket.c_str(),
                args.ell);
    for (std::size_t i = 0; i < results.size(); ++i) {
      const std::string label = "step " + std::to_string(i + 1);
      print_result_line(label.c_str(), results[i]);
    }
    std::printf("status: %s\n", status.c_str());
  }
  return complete ? kExitOk : kExitInterrupted;
}

}  // namespace

int run_search(const SearchArgs& args) {
  const fgt::BracketConvention conv =
      args.bracket.empty()
          ? (args.replay ? fgt::BracketConvention::Compat
                         : fgt::BracketConvention::Paper)
          : parse_bracket(args.bracket);

  if (args.replay) return run_replay(args, conv);

  fgt::SearchConfig config;
  config.ell = args.ell;
  config.family =
      fgt::parse_family_spec(args.family, fgt::default_macros(), conv);
  config.depth = args.depth;
  config.bracket = conv;
  config.target_trace = parse_rational_text(args.target);
  if (config.target_trace < 0 || config.target_trace > 1) {
    throw fgt::ParseError("target trace must lie in [0, 1]");
  }
  config.beam_width = args.beam;
  config.workers = args.workers;
  config.bit_cap = args.bit_cap;
  config.interrupt = &g_interrupted;
  config.on_iteration = [](int depth, std::size_t scored) {
    std::fprintf(stderr, "iteration %d: scored %zu candidates\n", depth,
                 scored);
  };

  const fgt::Word seed =
      fgt::parse_word(args.seed_word, fgt::default_macros(), conv);
  const fgt::SearchOutcome outcome = fgt::greedy_search(seed, config);
  const std::string status{fgt::to_string(outcome.status)};

  if (!args.out.empty()) write_out_file(args.out, status, outcome.results);

  if (args.format == "json") {
    std::printf("%s\n", stdout_json(status, outcome.results).dump(2).c_str());
  } else {
    std::printf("mode: search\nbracket: %s\nell: %d\nseed: %s\nfamily: %s\n",
                args.bracket.empty() ? "paper" : args.bracket.c_str(),
                args.ell, fgt::to_text(seed).c_str(), args.family.c_str());
    std::printf("status: %s\n", status.c_str());
    for (std::size_t i = 0; i < outcome.results.size(); ++i) {
      const std::string label = "rank " + std::to_string(i + 1);
      print_result_line(label.c_str(), outcome.results[i]);
    }
    if (!outcome.results.empty()) {
      std::printf("best_word: %s\n",
                  fgt::to_text(outcome.results.front().word).c_str());
    }
  }

  switch (outcome.status) {
    case fgt::SearchStatus::Trivialized:
      return kExitDegenerate;
    case fgt::SearchStatus::Incomplete:
      return kExitInterrupted;
    default:
      return kExitOk;
  }
}
