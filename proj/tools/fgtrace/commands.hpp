#pragma once

#include <atomic>
#include <cstdint>
#include <string>

#include "fgt/machine.hpp"

// Exit codes shared by every subcommand.
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;      // verification failure / internal error
constexpr int kExitUsage = 2;        // bad flags or unparsable input
constexpr int kExitResource = 3;     // an explicit resource cap was hit
constexpr int kExitDegenerate = 4;   // search produced no usable candidate
constexpr int kExitInterrupted = 130;

// Set by the SIGINT handler; long computations poll it and flush partial
// results with an "incomplete" status.
extern std::atomic<bool> g_interrupted;

struct TraceArgs {
  std::string word;
  int ell = -1;  // negative: use the word's u-count (exact enumeration)
  std::string bracket = "paper";
  std::string format = "text";
  int workers = 1;
  int bit_cap = fgt::kDefaultBitCap;
};

struct SearchArgs {
  bool replay = false;
  std::string seed_word = "v";
  std::string family = "a:1..14,b:1..4";
  int depth = 3;
  int ell = 7;
  int beam = 8;
  std::string target = "1";  // decimal or p/q; search stops at this mass
  std::string bracket;  // empty: compat when replaying, paper otherwise
  std::string out;      // optional JSON result path
  std::string format = "text";
  int workers = 1;
  int bit_cap = fgt::kDefaultBitCap;
};

struct VerifyArgs {
  std::string suite;
  std::uint64_t count = 0;  // 0: per-suite default
  std::uint64_t seed = 2024;
  int workers = 1;
};

struct ChainArgs {
  bool z_tower = false;
  bool fixed_ratio = false;
  std::string n_spec = "1..4";  // z-tower levels, "n" or "n1..n2"
  int m = 10;                   // z-tower depth
  std::string element = "2^0";  // translation amount, "t" or "t^j" = t^j
  int m_max = 8;                // fixed-ratio levels 1..m_max
};

int run_trace(const TraceArgs& args);
int run_search(const SearchArgs& args);
int run_verify(const VerifyArgs& args);
int run_chain(const ChainArgs& args);
