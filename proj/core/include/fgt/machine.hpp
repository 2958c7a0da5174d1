#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "fgt/rational.hpp"
#include "fgt/word.hpp"

namespace fgt {

// One configuration of the two-sided tape machine on {0,1}^Z x {0,1},
// restricted to a finite window. Tape positions are absolute: shifts are
// tracked as head movement, so position p keeps its identity while the
// head moves. Bit (p + ell) of `tape` holds tape[p] for p in [-ell, ell];
// positions outside the window are unknown and never touched.
struct MachineState {
  int ell = 0;
  int head = 0;
  std::uint8_t signal = 0;
  std::uint64_t tape = 0;

  bool operator==(const MachineState&) const = default;
};

// `tape_bits` uses the same layout as MachineState::tape (bit p + ell).
MachineState make_state(int ell, std::uint8_t signal, std::uint64_t tape_bits,
                        int head = 0);

int tape_bit(const MachineState& s, int pos);

// Generator u: signal 0 -> head moves +1, signal := 1; signal 1 -> head
// moves -1, signal := 0. Returns nullopt (OUT_OF_WINDOW) when the head
// would leave [-ell, ell].
std::optional<MachineState> apply_u(const MachineState& s);

// Generator v permutes (tape[head], signal) by the 3-cycle
// (0,0)->(0,0), (0,1)->(1,1)->(1,0)->(0,1); apply_v_inv is its inverse.
// Only tape[head] and the signal change.
MachineState apply_v(const MachineState& s);
MachineState apply_v_inv(const MachineState& s);

// Letters applied in order (index 0 first); OUT_OF_WINDOW short-circuits.
std::optional<MachineState> apply_word(const Word& w, const MachineState& s);

// Exhaustive enumeration refuses to run above this many configuration
// bits (2*ell + 2) unless the caller raises the cap explicitly.
constexpr int kDefaultBitCap = 34;

// Largest u-count whose exact enumeration fits under `bit_cap`.
constexpr int max_exact_u_count(int bit_cap = kDefaultBitCap) {
  return (bit_cap - 2) / 2;
}

// Called at most 16 times per sweep as the processed-configuration count
// crosses each 1/16 of the range; counts are the running totals.
using ProgressFn = std::function<void(int sixteenth, std::uint64_t fixed_so_far,
                                      std::uint64_t discarded_so_far)>;

struct TraceOptions {
  int bit_cap = kDefaultBitCap;
  int workers = 1;
  ProgressFn progress;                            // optional
  const std::atomic<bool>* interrupt = nullptr;   // optional cooperative stop
};

// Certified counts over all 2^(2*ell+2) configurations (signal bit plus
// the window tape bits). fixed_mass is a lower bound for the fixed-point
// measure, fixed_mass + discarded_mass an upper bound. A run stopped by
// `interrupt` has complete = false and its counts cover only the
// configurations actually processed (both masses stay lower bounds).
struct TraceEstimate {
  int ell = 0;
  std::uint64_t total = 0;
  std::uint64_t fixed_count = 0;
  std::uint64_t discarded_count = 0;
  bool complete = true;
  bool is_exact = false;  // complete && discarded_count == 0

  Rational fixed_mass() const;
  Rational discarded_mass() const;

  // Unreduced "count/total" renderings, keeping the 2^(2*ell+2) denominator
  // visible (e.g. "34784/65536" rather than "1087/2048").
  std::string fixed_fraction() const;
  std::string discarded_fraction() const;
};

// Enumerates every configuration with displacement bound `ell`: a
// configuration is fixed when the word maps it to itself with the head
// back at 0; it is discarded the moment the head leaves the window.
// Deterministic: counts are independent of partitioning and worker count.
// Throws ResourceError when 2*ell+2 exceeds options.bit_cap.
TraceEstimate trace_bounded(const Word& w, int ell,
                            const TraceOptions& options = {});

// Partitioning contract used by trace_bounded's workers: adds the counts
// of the configuration subrange [lo, hi) to `fixed`/`discarded`. Summing
// disjoint subranges reproduces the full sweep bit-for-bit.
void trace_count_range(const Word& w, int ell, std::uint64_t lo,
                       std::uint64_t hi, std::uint64_t& fixed,
                       std::uint64_t& discarded);

// trace_bounded at ell = u_count(w), which the displacement bound makes
// exact (no configuration can be discarded). Refuses words whose u-count
// exceeds max_exact_u_count(options.bit_cap).
TraceEstimate trace_exact(const Word& w, const TraceOptions& options = {});

// (support_lo, support_hi) = (1 - fixed - discarded, 1 - fixed): certified
// bounds for the measure of the support.
std::pair<Rational, Rational> support_bounds(const TraceEstimate& estimate);
std::pair<Rational, Rational> support_bounds(const Word& w, int ell,
                                             const TraceOptions& options = {});

// Ergodic-component label of a configuration: the stopping zero is the
// rightmost tape zero at a position <= head (signal 0) or <= head - 1
// (signal 1); the label is that position together with the window bits
// strictly to its left. Generator applications never change it while it
// stays inside the window. nullopt when no zero lies in the scanned range.
struct FiberLabel {
  int zero_pos = 0;
  std::string left_bits;  // tape[-ell .. zero_pos-1] as '0'/'1'

  bool operator==(const FiberLabel&) const = default;
};

std::optional<FiberLabel> fiber_label(const MachineState& s);

}  // namespace fgt
