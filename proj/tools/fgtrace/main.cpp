#include <atomic>
#include <csignal>
#include <cstdio>

#include "CLI11.hpp"

#include "commands.hpp"
#include "fgt/errors.hpp"
#include "fgt/machine.hpp"

std::atomic<bool> g_interrupted{false};

namespace {

extern "C" void handle_sigint(int) { g_interrupted.store(true); }

void add_workers(CLI::App* cmd, int& workers) {
  cmd->add_option("--workers", workers, "worker threads for enumeration")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
}

void add_bit_cap(CLI::App* cmd, int& bit_cap) {
  cmd->add_option("--bit-cap", bit_cap,
                  "refuse enumerations beyond this many configuration bits")
      ->check(CLI::Range(2, 62))
      ->capture_default_str();
}

void add_config(CLI::App* cmd) {
  cmd->set_config("--config", "",
                  "flat key=value file mirroring this subcommand's flags");
}

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, handle_sigint);

  CLI::App app{
      "supports and fixed-point masses of group words acting on the "
      "two-sided binary tape"};
  app.require_subcommand(1);

  TraceArgs trace_args;
  CLI::App* trace = app.add_subcommand(
      "trace", "certified fixed-mass bounds for one word");
  trace->add_option("--word", trace_args.word, "word text, e.g. \"[a^14 v a^-14, v]\"")
      ->required();
  trace->add_option("--ell", trace_args.ell,
                    "window radius (default: the word's u-count, which "
                    "makes the enumeration exact)")
      ->check(CLI::Range(0, 31));
  trace->add_option("--bracket", trace_args.bracket,
                    "commutator convention inside [x,y]")
      ->check(CLI::IsMember({"paper", "compat"}))
      ->capture_default_str();
  trace->add_option("--format", trace_args.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  add_workers(trace, trace_args.workers);
  add_bit_cap(trace, trace_args.bit_cap);
  add_config(trace);

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand(
      "search", "beam search for words of large fixed mass");
  search->add_flag("--replay-paper", search_args.replay,
                   "rerun the reference iterated-commutator sequence "
                   "(seed v, conjugators a^14, a^9, b^2)");
  search->add_option("--seed-word", search_args.seed_word, "starting word")
      ->capture_default_str();
  search->add_option("--family", search_args.family,
                     "conjugator family, e.g. \"a:1..14,b:1..4\"")
      ->capture_default_str();
  search->add_option("--depth", search_args.depth, "commutator iterations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  search->add_option("--ell", search_args.ell, "window radius")
      ->check(CLI::Range(1, 16))
      ->capture_default_str();
  search->add_option("--beam", search_args.beam, "beam width")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  search->add_option("--target", search_args.target,
                     "stop once the best fixed mass reaches this value")
      ->capture_default_str();
  search->add_option("--bracket", search_args.bracket,
                     "commutator convention (default: compat when "
                     "replaying, paper otherwise)")
      ->check(CLI::IsMember({"paper", "compat"}));
  search->add_option("--out", search_args.out,
                     "write the full result list as JSON to this path");
  search->add_option("--format", search_args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  add_workers(search, search_args.workers);
  add_bit_cap(search, search_args.bit_cap);
  add_config(search);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "run a randomized property suite until it passes or fails");
  verify->add_option("suite", verify_args.suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"commutator-support", "recurrence", "khintchine",
                             "amdelta", "machine-relations", "fiber",
                             "monotone"}));
  verify->add_option("--count", verify_args.count,
                     "cases to run (0 = suite default)")
      ->capture_default_str();
  verify->add_option("--seed", verify_args.seed, "random generator seed")
      ->capture_default_str();
  add_workers(verify, verify_args.workers);
  add_config(verify);

  ChainArgs chain_args;
  CLI::App* chain = app.add_subcommand(
      "chain", "per-level support or fixed-ratio tables for coset towers");
  chain->add_flag("--z-tower", chain_args.z_tower,
                  "support of one-block translations along the dyadic tower");
  chain->add_flag("--fixed-ratio", chain_args.fixed_ratio,
                  "fixed-point ratio of a translation along the tower");
  chain->add_option("--n", chain_args.n_spec, "tower level or range, e.g. 1..4")
      ->capture_default_str();
  chain->add_option("--m", chain_args.m, "tower depth (points = 2^m)")
      ->capture_default_str();
  chain->add_option("--element", chain_args.element,
                    "translation amount, \"t\" or \"t^j\"")
      ->capture_default_str();
  chain->add_option("--m-max", chain_args.m_max,
                    "deepest level for --fixed-ratio")
      ->capture_default_str();
  add_config(chain);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (trace->parsed()) return run_trace(trace_args);
    if (search->parsed()) return run_search(search_args);
    if (verify->parsed()) return run_verify(verify_args);
    return run_chain(chain_args);
  } catch (const fgt::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const fgt::ResourceError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitResource;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFailure;
  }
}
