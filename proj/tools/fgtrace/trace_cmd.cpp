#include <cstdio>
#include <string>

#include "json.hpp"

#include "commands.hpp"
#include "fgt/machine.hpp"
#include "fgt/word_parse.hpp"
#include "format.hpp"

namespace {

void print_text(const fgt::Word& w, const fgt::TraceEstimate& est) {
  const std::uint64_t free_count =
      est.total - est.fixed_count - est.discarded_count;
  const std::uint64_t moved_cap = est.total - est.fixed_count;
  std::printf("word: %s\n", fgt::to_text(w).c_str());
  std::printf("ell: %d\n", est.ell);
  std::printf("configurations: %llu\n",
              static_cast<unsigned long long>(est.total));
  std::printf("fixed_mass: %s\n",
              counts_and_decimal(est.fixed_count, est.total).c_str());
  std::printf("discarded_mass: %s\n",
              counts_and_decimal(est.discarded_count, est.total).c_str());
  std::printf("support_lo: %s\n",
              counts_and_decimal(free_count, est.total).c_str());
  std::printf("support_hi: %s\n",
              counts_and_decimal(moved_cap, est.total).c_str());
  std::printf("exact: %s\n", est.is_exact ? "yes" : "no");
}

void print_json(const fgt::Word& w, const fgt::TraceEstimate& est) {
  const std::uint64_t free_count =
      est.total - est.fixed_count - est.discarded_count;
  nlohmann::ordered_json doc = {
      {"word", fgt::to_text(w)},
      {"ell", est.ell},
      {"configurations", est.total},
      {"fixed_mass", est.fixed_fraction()},
      {"fixed_decimal", fgt::to_decimal_string(est.fixed_mass())},
      {"discarded_mass", est.discarded_fraction()},
      {"discarded_decimal", fgt::to_decimal_string(est.discarded_mass())},
      {"support_lo",
       std::to_string(free_count) + "/" + std::to_string(est.total)},
      {"support_hi", std::to_string(est.total - est.fixed_count) + "/" +
                         std::to_string(est.total)},
      {"exact", est.is_exact},
      {"complete", est.complete},
  };
  std::printf("%s\n", doc.dump(2).c_str());
}

void print_csv(const fgt::Word& w, const fgt::TraceEstimate& est) {
  const std::uint64_t free_count =
      est.total - est.fixed_count - est.discarded_count;
  std::printf(
      "word,ell,configurations,fixed_mass,fixed_decimal,discarded_mass,"
      "discarded_decimal,support_lo,support_hi,exact\n");
  std::printf("\"%s\",%d,%llu,%s,%s,%s,%s,%llu/%llu,%llu/%llu,%s\n",
              fgt::to_text(w).c_str(), est.ell,
              static_cast<unsigned long long>(est.total),
              est.fixed_fraction().c_str(),
              fgt::to_decimal_string(est.fixed_mass()).c_str(),
              est.discarded_fraction().c_str(),
              fgt::to_decimal_string(est.discarded_mass()).c_str(),
              static_cast<unsigned long long>(free_count),
              static_cast<unsigned long long>(est.total),
              static_cast<unsigned long long>(est.total - est.fixed_count),
              static_cast<unsigned long long>(est.total),
              est.is_exact ? "yes" : "no");
}

}  // namespace

int run_trace(const TraceArgs& args) {
  const fgt::BracketConvention conv = parse_bracket(args.bracket);
  const fgt::Word w = fgt::parse_word(args.word, fgt::default_macros(), conv);

  fgt::TraceOptions opts;
  opts.workers = args.workers;
  opts.bit_cap = args.bit_cap;
  opts.interrupt = &g_interrupted;
  opts.progress = [](int sixteenth, std::uint64_t fixed,
                     std::uint64_t discarded) {
    std::fprintf(stderr, "progress %d/16 fixed=%llu discarded=%llu\n",
                 sixteenth, static_cast<unsigned long long>(fixed),
                 static_cast<unsigned long long>(discarded));
  };

  const int ell = args.ell >= 0 ? args.ell : fgt::u_count(w);
  const fgt::TraceEstimate est = fgt::trace_bounded(w, ell, opts);

  if (args.format == "json") {
    print_json(w, est);
  } else if (args.format == "csv") {
    print_csv(w, est);
  } else {
    print_text(w, est);
    if (!est.complete) std::printf("status: incomplete\n");
  }
  return est.complete ? kExitOk : kExitInterrupted;
}
