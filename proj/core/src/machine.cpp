#include "fgt/machine.hpp"

#include <algorithm>
#include <mutex>
#include <thread>
#include <vector>

#include "fgt/errors.hpp"

namespace fgt {

namespace {

// Local (tape bit, signal) permutation tables for v and v^-1, indexed by
// (bit << 1) | signal, yielding (new bit << 1) | new signal.
// v: (0,0)->(0,0), (0,1)->(1,1), (1,1)->(1,0), (1,0)->(0,1).
constexpr std::uint8_t kVTable[4] = {0, 3, 1, 2};
constexpr std::uint8_t kVInvTable[4] = {0, 2, 3, 1};

constexpr int kSweepBlock = 4096;

void check_window(const MachineState& s, int pos) {
  if (pos < -s.ell || pos > s.ell) {
    throw Error("tape position outside the window");
  }
}

}  // namespace

MachineState make_state(int ell, std::uint8_t signal, std::uint64_t tape_bits,
                        int head) {
  if (ell < 0 || ell > 31) throw Error("window radius must be in [0, 31]");
  if (head < -ell || head > ell) throw Error("head outside the window");
  MachineState s;
  s.ell = ell;
  s.head = head;
  s.signal = signal & 1;
  s.tape = tape_bits & ((std::uint64_t(1) << (2 * ell + 1)) - 1);
  return s;
}

int tape_bit(const MachineState& s, int pos) {
  check_window(s, pos);
  return static_cast<int>((s.tape >> (pos + s.ell)) & 1);
}

std::optional<MachineState> apply_u(const MachineState& s) {
  MachineState out = s;
  out.head += s.signal == 0 ? 1 : -1;
  out.signal = s.signal ^ 1;
  if (out.head < -s.ell || out.head > s.ell) return std::nullopt;
  return out;
}

namespace {

MachineState apply_v_table(const MachineState& s, const std::uint8_t* table) {
  check_window(s, s.head);
  int idx = s.head + s.ell;
  std::uint64_t bit = (s.tape >> idx) & 1;
  std::uint8_t out = table[(bit << 1) | s.signal];
  MachineState r = s;
  r.tape = (s.tape & ~(std::uint64_t(1) << idx)) |
           (std::uint64_t(out >> 1) << idx);
  r.signal = out & 1;
  return r;
}

}  // namespace

MachineState apply_v(const MachineState& s) {
  return apply_v_table(s, kVTable);
}

MachineState apply_v_inv(const MachineState& s) {
  return apply_v_table(s, kVInvTable);
}

std::optional<MachineState> apply_word(const Word& w, const MachineState& s) {
  MachineState cur = s;
  for (Letter l : w.letters()) {
    if (l == Letter::U) {
      auto next = apply_u(cur);
      if (!next) return std::nullopt;
      cur = *next;
    } else if (l == Letter::V) {
      cur = apply_v(cur);
    } else {
      cur = apply_v_inv(cur);
    }
  }
  return cur;
}

Rational TraceEstimate::fixed_mass() const {
  return dyadic(fixed_count, 2 * ell + 2);
}

Rational TraceEstimate::discarded_mass() const {
  return dyadic(discarded_count, 2 * ell + 2);
}

std::string TraceEstimate::fixed_fraction() const {
  return std::to_string(fixed_count) + "/" + std::to_string(total);
}

std::string TraceEstimate::discarded_fraction() const {
  return std::to_string(discarded_count) + "/" + std::to_string(total);
}

void trace_count_range(const Word& w, int ell, std::uint64_t lo,
                       std::uint64_t hi, std::uint64_t& fixed,
                       std::uint64_t& discarded) {
  const Letter* letters = w.letters().data();
  const std::size_t len = w.letters().size();
  std::uint64_t f = 0;
  std::uint64_t d = 0;
  for (std::uint64_t k = lo; k < hi; ++k) {
    std::uint32_t signal = static_cast<std::uint32_t>(k & 1);
    std::uint64_t tape = k >> 1;
    const std::uint32_t signal0 = signal;
    const std::uint64_t tape0 = tape;
    int head = 0;
    bool alive = true;
    for (std::size_t i = 0; i < len; ++i) {
      Letter l = letters[i];
      if (l == Letter::U) {
        head += 1 - 2 * static_cast<int>(signal);
        signal ^= 1;
        if (head < -ell || head > ell) {
          alive = false;
          break;
        }
      } else {
        const std::uint8_t* table = l == Letter::V ? kVTable : kVInvTable;
        int idx = head + ell;
        std::uint64_t bit = (tape >> idx) & 1;
        std::uint8_t out = table[(bit << 1) | signal];
        tape = (tape & ~(std::uint64_t(1) << idx)) |
               (std::uint64_t(out >> 1) << idx);
        signal = out & 1;
      }
    }
    if (!alive) {
      ++d;
    } else if (head == 0 && signal == signal0 && tape == tape0) {
      ++f;
    }
  }
  fixed += f;
  discarded += d;
}

TraceEstimate trace_bounded(const Word& w, int ell,
                            const TraceOptions& options) {
  if (ell < 0) throw Error("window radius must be >= 0");
  const int bits = 2 * ell + 2;
  if (bits > options.bit_cap) {
    throw ResourceError("enumeration of 2^" + std::to_string(bits) +
                        " configurations exceeds the bit cap of " +
                        std::to_string(options.bit_cap));
  }
  const std::uint64_t total = std::uint64_t(1) << bits;

  std::atomic<std::uint64_t> fixed{0};
  std::atomic<std::uint64_t> discarded{0};
  std::atomic<std::uint64_t> processed{0};
  std::atomic<bool> stopped{false};
  std::mutex progress_mutex;

  auto sweep = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t block = lo; block < hi; block += kSweepBlock) {
      if (options.interrupt &&
          options.interrupt->load(std::memory_order_relaxed)) {
        stopped.store(true, std::memory_order_relaxed);
        return;
      }
      std::uint64_t block_end = std::min<std::uint64_t>(block + kSweepBlock, hi);
      std::uint64_t f = 0;
      std::uint64_t d = 0;
      trace_count_range(w, ell, block, block_end, f, d);
      fixed.fetch_add(f, std::memory_order_relaxed);
      discarded.fetch_add(d, std::memory_order_relaxed);
      std::uint64_t before =
          processed.fetch_add(block_end - block, std::memory_order_relaxed);
      std::uint64_t after = before + (block_end - block);
      if (options.progress) {
        for (int i = 1; i <= 16; ++i) {
          std::uint64_t boundary = total / 16 * i + (i == 16 ? total % 16 : 0);
          if (before < boundary && boundary <= after) {
            std::scoped_lock lock(progress_mutex);
            options.progress(i, fixed.load(std::memory_order_relaxed),
                             discarded.load(std::memory_order_relaxed));
          }
        }
      }
    }
  };

  int workers = std::max(1, options.workers);
  if (std::uint64_t(workers) > total / kSweepBlock + 1) {
    workers = static_cast<int>(total / kSweepBlock + 1);
  }
  if (workers == 1) {
    sweep(0, total);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::uint64_t chunk = total / workers;
    for (int i = 0; i < workers; ++i) {
      std::uint64_t lo = chunk * i;
      std::uint64_t hi = i + 1 == workers ? total : chunk * (i + 1);
      pool.emplace_back(sweep, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  TraceEstimate est;
  est.ell = ell;
  est.total = total;
  est.fixed_count = fixed.load();
  est.discarded_count = discarded.load();
  est.complete = !stopped.load();
  est.is_exact = est.complete && est.discarded_count == 0;
  return est;
}

TraceEstimate trace_exact(const Word& w, const TraceOptions& options) {
  int n = u_count(w);
  if (n > max_exact_u_count(options.bit_cap)) {
    throw ResourceError(
        "exact enumeration needs 2^" + std::to_string(2 * n + 2) +
        " configurations, above the bit cap of " +
        std::to_string(options.bit_cap) +
        "; use trace_bounded with an explicit window instead");
  }
  return trace_bounded(w, n, options);
}

std::pair<Rational, Rational> support_bounds(const TraceEstimate& estimate) {
  Rational fixed = estimate.fixed_mass();
  Rational discarded = estimate.discarded_mass();
  return {Rational(1) - fixed - discarded, Rational(1) - fixed};
}

std::pair<Rational, Rational> support_bounds(const Word& w, int ell,
                                             const TraceOptions& options) {
  return support_bounds(trace_bounded(w, ell, options));
}

std::optional<FiberLabel> fiber_label(const MachineState& s) {
  int scan_max = s.head - (s.signal ? 1 : 0);
  if (scan_max > s.ell) scan_max = s.ell;
  for (int pos = scan_max; pos >= -s.ell; --pos) {
    if (((s.tape >> (pos + s.ell)) & 1) == 0) {
      FiberLabel label;
      label.zero_pos = pos;
      label.left_bits.reserve(pos + s.ell);
      for (int p = -s.ell; p < pos; ++p) {
        label.left_bits += ((s.tape >> (p + s.ell)) & 1) ? '1' : '0';
      }
      return label;
    }
  }
  return std::nullopt;
}

}  // namespace fgt
