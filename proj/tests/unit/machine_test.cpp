#include <atomic>
#include <cstdint>
#include <random>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "fgt/errors.hpp"
#include "fgt/machine.hpp"
#include "fgt/rational.hpp"
#include "fgt/word.hpp"
#include "test_util.hpp"

using fgt::BracketConvention;
using fgt::Letter;
using fgt::MachineState;
using fgt::Rational;
using fgt::Word;

namespace {

Word g1_word() {
  const Word a{Letter::V, Letter::U};
  const Word v{Letter::V};
  return fgt::commutator(fgt::conjugate(v, fgt::power(a, 14)), v,
                         BracketConvention::Compat);
}

// Reference counter driven through the public MachineState API; the
// production sweep uses its own inlined loop, so agreement is meaningful.
std::pair<std::uint64_t, std::uint64_t> naive_counts(const Word& w, int ell) {
  const std::uint64_t total = std::uint64_t(1) << (2 * ell + 2);
  std::uint64_t fixed = 0;
  std::uint64_t discarded = 0;
  for (std::uint64_t k = 0; k < total; ++k) {
    const MachineState s0 =
        fgt::make_state(ell, static_cast<std::uint8_t>(k & 1), k >> 1);
    const auto s1 = fgt::apply_word(w, s0);
    if (!s1) {
      ++discarded;
    } else if (s1->head == 0 && s1->signal == s0.signal &&
               s1->tape == s0.tape) {
      ++fixed;
    }
  }
  return {fixed, discarded};
}

}  // namespace

TEST_CASE("make_state validates and masks") {
  const MachineState s = fgt::make_state(2, 1, 0b10110, -1);
  CHECK(s.ell == 2);
  CHECK(s.head == -1);
  CHECK(s.signal == 1);
  CHECK(s.tape == 0b10110);

  CHECK(fgt::make_state(1, 0, 0xFF).tape == 0b111);
  CHECK(fgt::make_state(1, 2, 0).signal == 0);
  CHECK(fgt::make_state(0, 0, 0).tape == 0);

  CHECK_THROWS_AS(fgt::make_state(-1, 0, 0), fgt::Error);
  CHECK_THROWS_AS(fgt::make_state(32, 0, 0), fgt::Error);
  CHECK_THROWS_AS(fgt::make_state(2, 0, 0, 3), fgt::Error);
  CHECK_THROWS_AS(fgt::make_state(2, 0, 0, -3), fgt::Error);
}

TEST_CASE("tape_bit uses absolute positions") {
  const MachineState s = fgt::make_state(2, 0, 0b10110);
  CHECK(fgt::tape_bit(s, -2) == 0);
  CHECK(fgt::tape_bit(s, -1) == 1);
  CHECK(fgt::tape_bit(s, 0) == 1);
  CHECK(fgt::tape_bit(s, 1) == 0);
  CHECK(fgt::tape_bit(s, 2) == 1);
  CHECK_THROWS_AS(fgt::tape_bit(s, 3), fgt::Error);
  CHECK_THROWS_AS(fgt::tape_bit(s, -3), fgt::Error);
}

TEST_CASE("apply_u moves by the signal and flips it") {
  const MachineState s = fgt::make_state(2, 0, 0b10101);
  const auto fwd = fgt::apply_u(s);
  REQUIRE(fwd.has_value());
  CHECK(fwd->head == 1);
  CHECK(fwd->signal == 1);
  CHECK(fwd->tape == s.tape);

  const auto back = fgt::apply_u(fgt::make_state(2, 1, 0b10101));
  REQUIRE(back.has_value());
  CHECK(back->head == -1);
  CHECK(back->signal == 0);

  CHECK_FALSE(fgt::apply_u(fgt::make_state(2, 0, 0, 2)).has_value());
  CHECK_FALSE(fgt::apply_u(fgt::make_state(2, 1, 0, -2)).has_value());
  CHECK(fgt::apply_u(fgt::make_state(2, 1, 0, 2)).has_value());
}

TEST_CASE("u is an involution wherever it is defined") {
  for (int head = -2; head <= 2; ++head) {
    for (int sig = 0; sig < 2; ++sig) {
      for (std::uint64_t tape = 0; tape < 32; ++tape) {
        const MachineState s =
            fgt::make_state(2, static_cast<std::uint8_t>(sig), tape, head);
        const auto once = fgt::apply_u(s);
        if (!once) continue;
        const auto twice = fgt::apply_u(*once);
        // the return move re-enters the window, so u^2 is total here
        REQUIRE(twice.has_value());
        CHECK(*twice == s);
      }
    }
  }
}

TEST_CASE("v realizes the local 3-cycle on (tape[head], signal)") {
  // (0,0) is fixed; (0,1) -> (1,1) -> (1,0) -> (0,1).
  const auto local = [](std::uint64_t bit, std::uint8_t sig) {
    return fgt::make_state(0, sig, bit);
  };
  CHECK(fgt::apply_v(local(0, 0)) == local(0, 0));
  CHECK(fgt::apply_v(local(0, 1)) == local(1, 1));
  CHECK(fgt::apply_v(local(1, 1)) == local(1, 0));
  CHECK(fgt::apply_v(local(1, 0)) == local(0, 1));

  CHECK(fgt::apply_v_inv(local(0, 0)) == local(0, 0));
  CHECK(fgt::apply_v_inv(local(1, 1)) == local(0, 1));
  CHECK(fgt::apply_v_inv(local(1, 0)) == local(1, 1));
  CHECK(fgt::apply_v_inv(local(0, 1)) == local(1, 0));
}

TEST_CASE("v has order three and v_inv inverts it") {
  for (int head = -1; head <= 1; ++head) {
    for (int sig = 0; sig < 2; ++sig) {
      for (std::uint64_t tape = 0; tape < 8; ++tape) {
        const MachineState s =
            fgt::make_state(1, static_cast<std::uint8_t>(sig), tape, head);
        CHECK(fgt::apply_v(fgt::apply_v(fgt::apply_v(s))) == s);
        CHECK(fgt::apply_v_inv(fgt::apply_v(s)) == s);
        CHECK(fgt::apply_v(fgt::apply_v_inv(s)) == s);
        CHECK(fgt::apply_v(fgt::apply_v(s)) == fgt::apply_v_inv(s));
      }
    }
  }
}

TEST_CASE("v only touches the cell under the head") {
  const MachineState s = fgt::make_state(2, 1, 0b11011, 1);
  const MachineState t = fgt::apply_v(s);
  CHECK(t.head == s.head);
  for (int pos = -2; pos <= 2; ++pos) {
    if (pos != s.head) CHECK(fgt::tape_bit(t, pos) == fgt::tape_bit(s, pos));
  }
}

TEST_CASE("apply_word applies index 0 first") {
  const MachineState s = fgt::make_state(1, 0, 0b000);
  const Word uv{Letter::U, Letter::V};
  const auto direct = fgt::apply_word(uv, s);
  REQUIRE(direct.has_value());

  const auto step = fgt::apply_u(s);
  REQUIRE(step.has_value());
  CHECK(*direct == fgt::apply_v(*step));
  CHECK(*direct == fgt::make_state(1, 1, 0b100, 1));

  const auto id = fgt::apply_word(Word{}, s);
  REQUIRE(id.has_value());
  CHECK(*id == s);

  // OUT_OF_WINDOW short-circuits the whole word
  CHECK_FALSE(fgt::apply_word(Word{Letter::U, Letter::V},
                              fgt::make_state(1, 0, 0, 1))
                  .has_value());
}

TEST_CASE("exact traces of the short words") {
  const auto v = fgt::trace_exact(Word{Letter::V});
  CHECK(v.ell == 0);
  CHECK(v.total == 4);
  CHECK(v.fixed_count == 1);
  CHECK(v.discarded_count == 0);
  CHECK(v.is_exact);
  CHECK(v.fixed_mass() == Rational(1, 4));
  CHECK(fgt::trace_exact(Word{Letter::VINV}).fixed_mass() == Rational(1, 4));

  const auto u = fgt::trace_exact(Word{Letter::U});
  CHECK(u.ell == 1);
  CHECK(u.total == 16);
  CHECK(u.fixed_count == 0);
  CHECK(u.discarded_count == 0);
  CHECK(u.is_exact);

  const auto id = fgt::trace_bounded(Word{}, 2);
  CHECK(id.total == 64);
  CHECK(id.fixed_count == 64);
  CHECK(id.is_exact);
  CHECK(id.fixed_mass() == Rational(1));

  for (BracketConvention conv :
       {BracketConvention::Paper, BracketConvention::Compat}) {
    const Word comm = fgt::commutator(Word{Letter::U}, Word{Letter::V}, conv);
    const auto est = fgt::trace_exact(comm);
    CHECK(est.ell == 2);
    CHECK(est.total == 64);
    CHECK(est.fixed_count == 0);
    CHECK(est.discarded_count == 0);
    CHECK(est.is_exact);
  }
}

TEST_CASE("a window too small to move in discards everything") {
  const auto est = fgt::trace_bounded(Word{Letter::U}, 0);
  CHECK(est.total == 4);
  CHECK(est.fixed_count == 0);
  CHECK(est.discarded_count == 4);
  CHECK(est.complete);
  CHECK_FALSE(est.is_exact);
}

TEST_CASE("window sweep of the depth-one commutator") {
  const Word g1 = g1_word();
  REQUIRE(fgt::u_count(g1) == 56);

  struct Row {
    int ell;
    std::uint64_t fixed;
    std::uint64_t discarded;
  };
  const Row rows[] = {{0, 0, 4},          {1, 0, 16},      {2, 19, 43},
                      {3, 110, 96},       {4, 488, 218},   {5, 2064, 534},
                      {6, 8600, 1070},    {7, 34784, 2207}};
  for (const Row& row : rows) {
    const auto est = fgt::trace_bounded(g1, row.ell);
    CHECK(est.ell == row.ell);
    CHECK(est.total == (std::uint64_t(1) << (2 * row.ell + 2)));
    CHECK(est.fixed_count == row.fixed);
    CHECK(est.discarded_count == row.discarded);
    CHECK(est.complete);
  }

  const auto at7 = fgt::trace_bounded(g1, 7);
  CHECK(at7.fixed_fraction() == "34784/65536");
  CHECK(at7.discarded_fraction() == "2207/65536");
  CHECK(at7.fixed_mass() == Rational(34784, 65536));
}

TEST_CASE("the sweep agrees with the plain MachineState walk") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 30; ++i) {
    const Word w = test_util::random_word(rng);
    const int ell = static_cast<int>(rng() % 4);
    const auto [fixed, discarded] = naive_counts(w, ell);
    const auto est = fgt::trace_bounded(w, ell);
    CHECK(est.fixed_count == fixed);
    CHECK(est.discarded_count == discarded);
  }
}

TEST_CASE("fixed mass grows and discarded mass shrinks with the window") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 20; ++i) {
    const Word w = test_util::random_word_capped_u(rng, 4);
    const int exact_ell = fgt::u_count(w);
    Rational prev_fixed(0);
    Rational prev_discarded(1);
    Rational exact_value(0);
    for (int ell = 0; ell <= 5; ++ell) {
      const auto est = fgt::trace_bounded(w, ell);
      CHECK(est.fixed_mass() >= prev_fixed);
      CHECK(est.discarded_mass() <= prev_discarded);
      prev_fixed = est.fixed_mass();
      prev_discarded = est.discarded_mass();
      if (ell == exact_ell) {
        CHECK(est.discarded_count == 0);
        CHECK(est.is_exact);
        exact_value = est.fixed_mass();
      } else if (ell > exact_ell) {
        CHECK(est.fixed_mass() == exact_value);
        CHECK(est.is_exact);
      }
    }
  }
}

TEST_CASE("trace is invariant under inversion and conjugation") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    const Word w = test_util::random_word_capped_u(rng, 3);
    const auto est = fgt::trace_exact(w);
    const auto inv = fgt::trace_exact(fgt::invert(w));
    CHECK(inv.total == est.total);
    CHECK(inv.fixed_count == est.fixed_count);
  }
  for (int i = 0; i < 40; ++i) {
    const Word w = test_util::random_word_capped_u(rng, 2);
    const Word c = test_util::random_word(rng, 12);
    if (fgt::u_count(c) > 2) continue;
    const auto base = fgt::trace_exact(w);
    const auto conj = fgt::trace_exact(fgt::conjugate(w, c));
    CHECK(conj.fixed_mass() == base.fixed_mass());
  }
}

TEST_CASE("partition sums reproduce the full sweep") {
  const Word g1 = g1_word();
  const int ell = 4;
  const std::uint64_t total = 1024;

  std::uint64_t full_f = 0;
  std::uint64_t full_d = 0;
  fgt::trace_count_range(g1, ell, 0, total, full_f, full_d);
  CHECK(full_f == 488);
  CHECK(full_d == 218);

  std::mt19937_64 rng(24);
  for (int i = 0; i < 10; ++i) {
    const std::uint64_t mid = 1 + rng() % (total - 1);
    std::uint64_t f = 0;
    std::uint64_t d = 0;
    fgt::trace_count_range(g1, ell, 0, mid, f, d);
    fgt::trace_count_range(g1, ell, mid, total, f, d);
    CHECK(f == full_f);
    CHECK(d == full_d);
  }
}

TEST_CASE("worker count never changes the counts") {
  const Word g1 = g1_word();
  const auto one = fgt::trace_bounded(g1, 5);
  for (int workers : {2, 3, 8}) {
    fgt::TraceOptions opts;
    opts.workers = workers;
    const auto est = fgt::trace_bounded(g1, 5, opts);
    CHECK(est.total == one.total);
    CHECK(est.fixed_count == one.fixed_count);
    CHECK(est.discarded_count == one.discarded_count);
    CHECK(est.complete == one.complete);
    CHECK(est.is_exact == one.is_exact);
  }
}

TEST_CASE("progress reports all sixteen slices in order") {
  const Word g1 = g1_word();
  std::vector<std::tuple<int, std::uint64_t, std::uint64_t>> calls;
  fgt::TraceOptions opts;
  opts.progress = [&](int sixteenth, std::uint64_t fixed,
                      std::uint64_t discarded) {
    calls.emplace_back(sixteenth, fixed, discarded);
  };
  const auto est = fgt::trace_bounded(g1, 6, opts);

  REQUIRE(calls.size() == 16);
  std::uint64_t prev_fixed = 0;
  std::uint64_t prev_discarded = 0;
  for (int i = 0; i < 16; ++i) {
    CHECK(std::get<0>(calls[i]) == i + 1);
    CHECK(std::get<1>(calls[i]) >= prev_fixed);
    CHECK(std::get<2>(calls[i]) >= prev_discarded);
    prev_fixed = std::get<1>(calls[i]);
    prev_discarded = std::get<2>(calls[i]);
  }
  CHECK(std::get<1>(calls.back()) == est.fixed_count);
  CHECK(std::get<2>(calls.back()) == est.discarded_count);
  CHECK(est.fixed_count == 8600);
}

TEST_CASE("a pre-set interrupt stops the sweep before any work") {
  std::atomic<bool> stop{true};
  fgt::TraceOptions opts;
  opts.interrupt = &stop;
  const auto est = fgt::trace_bounded(g1_word(), 6, opts);
  CHECK_FALSE(est.complete);
  CHECK_FALSE(est.is_exact);
  CHECK(est.fixed_count == 0);
  CHECK(est.discarded_count == 0);
  CHECK(est.total == 16384);
}

TEST_CASE("a mid-run interrupt keeps the processed counts") {
  const Word g1 = g1_word();
  std::atomic<bool> stop{false};
  fgt::TraceOptions opts;
  opts.interrupt = &stop;
  opts.progress = [&](int sixteenth, std::uint64_t, std::uint64_t) {
    if (sixteenth == 4) stop.store(true);
  };
  const auto est = fgt::trace_bounded(g1, 6, opts);

  // one 4096-configuration block finished before the flag was seen
  std::uint64_t f = 0;
  std::uint64_t d = 0;
  fgt::trace_count_range(g1, 6, 0, 4096, f, d);
  CHECK_FALSE(est.complete);
  CHECK(est.fixed_count == f);
  CHECK(est.discarded_count == d);
}

TEST_CASE("resource limits refuse oversized enumerations") {
  CHECK_THROWS_AS(fgt::trace_bounded(Word{Letter::U}, 17), fgt::ResourceError);
  CHECK_THROWS_AS(fgt::trace_bounded(Word{Letter::U}, -1), fgt::Error);

  const Word long_word = fgt::power(Word{Letter::U, Letter::V}, 17);
  REQUIRE(fgt::u_count(long_word) == 17);
  CHECK_THROWS_AS(fgt::trace_exact(long_word), fgt::ResourceError);

  fgt::TraceOptions tight;
  tight.bit_cap = 8;
  CHECK(fgt::trace_bounded(Word{Letter::V}, 3, tight).total == 256);
  CHECK_THROWS_AS(fgt::trace_bounded(Word{Letter::V}, 4, tight),
                  fgt::ResourceError);
  CHECK(fgt::max_exact_u_count() == 16);
  CHECK(fgt::max_exact_u_count(8) == 3);
}

TEST_CASE("support bounds bracket the support measure") {
  const auto v_bounds = fgt::support_bounds(Word{Letter::V}, 0);
  CHECK(v_bounds.first == Rational(3, 4));
  CHECK(v_bounds.second == Rational(3, 4));

  const Word g1 = g1_word();
  const auto est = fgt::trace_bounded(g1, 2);
  const auto bounds = fgt::support_bounds(est);
  CHECK(bounds.first == Rational(1, 32));
  CHECK(bounds.second == Rational(45, 64));
  CHECK(bounds == fgt::support_bounds(g1, 2));

  const auto exact = fgt::support_bounds(fgt::trace_exact(Word{Letter::U}));
  CHECK(exact.first == exact.second);
  CHECK(exact.first == Rational(1));
}

TEST_CASE("fiber labels pick the stopping zero") {
  const auto wide = fgt::fiber_label(fgt::make_state(4, 0, 507));
  REQUIRE(wide.has_value());
  CHECK(wide->zero_pos == -2);
  CHECK(wide->left_bits == "11");

  // with signal 1 the scan starts one cell to the left of the head
  const auto shifted = fgt::fiber_label(fgt::make_state(1, 1, 0b110));
  REQUIRE(shifted.has_value());
  CHECK(shifted->zero_pos == -1);
  CHECK(shifted->left_bits == "");

  CHECK_FALSE(fgt::fiber_label(fgt::make_state(2, 0, 0b11111)).has_value());
  // zeros to the right of the scan range stay invisible
  CHECK_FALSE(fgt::fiber_label(fgt::make_state(1, 0, 0b001, -1)).has_value());

  const auto zero = fgt::fiber_label(fgt::make_state(2, 0, 0));
  REQUIRE(zero.has_value());
  CHECK(zero->zero_pos == 0);
  CHECK(zero->left_bits == "00");
}

TEST_CASE("generator applications preserve the fiber label") {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 1000; ++i) {
    const int ell = 1 + static_cast<int>(rng() % 5);
    const std::uint64_t tape = rng() & ((std::uint64_t(1) << (2 * ell + 1)) - 1);
    const int head = static_cast<int>(rng() % (2 * ell + 1)) - ell;
    const MachineState s = fgt::make_state(
        ell, static_cast<std::uint8_t>(rng() & 1), tape, head);
    const Word step = test_util::random_word(rng, 3);
    const auto t = fgt::apply_word(step, s);
    if (!t) continue;
    CHECK(fgt::fiber_label(s) == fgt::fiber_label(*t));
  }
}
