#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iterator>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "commands.hpp"
#include "fgt/actions.hpp"
#include "fgt/errors.hpp"
#include "fgt/machine.hpp"
#include "fgt/sequences.hpp"
#include "fgt/word.hpp"
#include "format.hpp"

namespace {

using fgt::Permutation;
using fgt::PointSet;
using fgt::Rational;

struct SuiteTally {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;

  void check(bool ok, const char* what) {
    ++cases;
    if (!ok) {
      ++failures;
      std::printf("FAIL case %llu: %s\n",
                  static_cast<unsigned long long>(cases), what);
    }
  }
};

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

Permutation random_permutation(std::mt19937_64& rng, std::uint32_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  for (std::uint32_t i = degree; i > 1; --i) {
    std::swap(images[i - 1], images[rand_below(rng, i)]);
  }
  return Permutation(std::move(images));
}

PointSet random_subset(std::mt19937_64& rng, std::uint32_t degree) {
  PointSet points;
  for (std::uint32_t x = 0; x < degree; ++x) {
    if (rng() & 1) points.push_back(x);
  }
  return points;
}

fgt::MachineState random_state(std::mt19937_64& rng) {
  const int ell = 2 + static_cast<int>(rand_below(rng, 9));
  const int head = -ell + static_cast<int>(rand_below(rng, 2 * ell + 1));
  const auto signal = static_cast<std::uint8_t>(rng() & 1);
  const std::uint64_t tape = rng() & ((1ull << (2 * ell + 1)) - 1);
  return fgt::make_state(ell, signal, tape, head);
}

fgt::Word random_word(std::mt19937_64& rng, int max_u_count) {
  for (;;) {
    fgt::Word w;
    const std::uint64_t letters = 1 + rand_below(rng, 18);
    for (std::uint64_t i = 0; i < letters; ++i) {
      switch (rand_below(rng, 3)) {
        case 0: w.push(fgt::Letter::U); break;
        case 1: w.push(fgt::Letter::V); break;
        default: w.push(fgt::Letter::VINV); break;
      }
    }
    if (!w.empty() && fgt::u_count(w) <= max_u_count) return w;
  }
}

Rational set_measure(const PointSet& points, std::uint32_t degree) {
  return Rational(points.size()) / degree;
}

PointSet apply_set(const Permutation& g, const PointSet& points) {
  PointSet out;
  out.reserve(points.size());
  for (std::uint32_t x : points) out.push_back(g(x));
  std::sort(out.begin(), out.end());
  return out;
}

PointSet intersect(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

SuiteTally suite_machine_relations(std::uint64_t count, std::mt19937_64& rng) {
  SuiteTally tally;
  // Exhaustive over every ell=1 configuration.
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    const auto s = fgt::make_state(1, static_cast<std::uint8_t>(bits & 1),
                                   bits >> 1, 0);
    const auto uu = fgt::apply_u(*fgt::apply_u(s));
    tally.check(uu && *uu == s, "u^2 != id on an ell=1 state");
    const auto vvv = fgt::apply_v(fgt::apply_v(fgt::apply_v(s)));
    tally.check(vvv == s, "v^3 != id on an ell=1 state");
    const auto vv = fgt::apply_v_inv(fgt::apply_v(s));
    tally.check(vv == s, "v v^-1 != id on an ell=1 state");
  }
  std::printf("exhaustive ell=1: 16 states, 48 checks\n");

  std::uint64_t done = 0;
  while (done < count) {
    const auto s = random_state(rng);
    const auto s1 = fgt::apply_u(s);
    if (!s1) continue;  // u walked out of the window; not a live state
    const auto s2 = fgt::apply_u(*s1);
    tally.check(s2 && *s2 == s, "u^2 != id");
    const auto v3 = fgt::apply_v(fgt::apply_v(fgt::apply_v(s)));
    tally.check(v3 == s, "v^3 != id");
    const auto vv = fgt::apply_v_inv(fgt::apply_v(s));
    tally.check(vv == s, "v v^-1 != id");
    ++done;
  }
  std::printf("randomized: %llu states, 3 relations each\n",
              static_cast<unsigned long long>(done));
  return tally;
}

SuiteTally suite_commutator_support(std::uint64_t count,
                                    std::mt19937_64& rng) {
  SuiteTally tally;
  const auto s3 = fgt::check_commutator_support(
      Permutation({1, 0, 2}), Permutation({0, 2, 1}));
  std::printf("s3 example: lhs %s rhs %s\n",
              fgt::to_fraction_string(s3.lhs).c_str(),
              fgt::to_fraction_string(s3.rhs).c_str());
  tally.check(s3.containment_ok && s3.inequality_ok && s3.lhs == 1 &&
                  s3.rhs == 1,
              "transposition pair on 3 points must give lhs = rhs = 1");

  for (std::uint64_t i = 0; i < count; ++i) {
    const auto degree = static_cast<std::uint32_t>(2 + rand_below(rng, 11));
    const auto g = random_permutation(rng, degree);
    const auto h = random_permutation(rng, degree);
    const auto report = fgt::check_commutator_support(g, h);
    tally.check(report.containment_ok, "S([g,h]) not inside A u gA u hA");
    tally.check(report.inequality_ok, "commutator support inequality failed");
  }
  std::printf("random pairs: %llu, degrees 2..12\n",
              static_cast<unsigned long long>(count));
  return tally;
}

SuiteTally suite_recurrence(std::uint64_t count, std::mt19937_64& rng) {
  SuiteTally tally;
  const int z6 = fgt::recurrence_witness(fgt::translation_perm(6, 1),
                                         {0, 1, 2}, Rational(1, 2),
                                         Rational(1, 2));
  std::printf("z6 example: j %d\n", z6);
  tally.check(z6 == 1, "rotation on Z/6 with A={0,1,2} must witness at j=1");

  int max_j = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto degree = static_cast<std::uint32_t>(2 + rand_below(rng, 39));
    const auto T = random_permutation(rng, degree);
    PointSet A = random_subset(rng, degree);
    if (A.empty()) A.push_back(static_cast<std::uint32_t>(
        rand_below(rng, degree)));
    const Rational nu = set_measure(A, degree);
    const Rational c = nu / (1 + static_cast<int>(rand_below(rng, 3)));
    const Rational eps(1, 1 + static_cast<long>(rand_below(rng, 20)));
    const int j = fgt::recurrence_witness(T, A, c, eps);
    max_j = std::max(max_j, j);
    const auto TjA = apply_set(fgt::perm_power(T, j), A);
    tally.check(set_measure(intersect(TjA, A), degree) > nu * nu * (1 - eps),
                "returned j does not satisfy the recurrence inequality");
  }
  std::printf("random instances: %llu, max witness j: %d\n",
              static_cast<unsigned long long>(count), max_j);
  return tally;
}

SuiteTally suite_khintchine(std::uint64_t count, std::mt19937_64& rng) {
  SuiteTally tally;
  const auto rotation_action = [](std::uint32_t n) {
    fgt::FiniteAction action;
    action.degree = n;
    action.generators.emplace("t", fgt::translation_perm(n, 1));
    return action;
  };

  const auto z4 = fgt::khintchine_witness(rotation_action(4), {0, 1}, {0, 1},
                                          Rational(1, 8));
  std::printf("z4 example: word length %zu\n", z4.word.size());
  tally.check(z4.word.empty(), "identity must already witness on Z/4");

  const auto z5 = fgt::khintchine_witness(rotation_action(5), {0}, {2},
                                          Rational(1, 25));
  std::printf("z5 example: word length %zu\n", z5.word.size());
  tally.check(z5.word.size() == 2 &&
                  z5.element == fgt::translation_perm(5, 2),
              "Z/5 witness must be the double rotation");

  std::size_t max_len = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto degree = static_cast<std::uint32_t>(2 + rand_below(rng, 59));
    const PointSet A = random_subset(rng, degree);
    const PointSet B = random_subset(rng, degree);
    const Rational eps = rng() & 1 ? Rational(1, 4) : Rational(1, 10);
    const auto witness =
        fgt::khintchine_witness(rotation_action(degree), A, B, eps);
    max_len = std::max(max_len, witness.word.size());
    tally.check(set_measure(intersect(apply_set(witness.element, A), B),
                            degree) >
                    set_measure(A, degree) * set_measure(B, degree) - eps,
                "witness element misses the correlation target");
  }
  std::printf("random instances: %llu, max word length: %zu\n",
              static_cast<unsigned long long>(count), max_len);
  return tally;
}

SuiteTally suite_amdelta(std::uint64_t m_max, std::mt19937_64& rng) {
  SuiteTally tally;

  tally.check(fgt::a_m_recurrence({Rational(1, 2), Rational(0)}, 1) ==
                  Rational(2, 3),
              "one recurrence step from 1/2 must give 2/3");
  tally.check(fgt::a_m_recurrence({Rational(1, 2), Rational(0)}, 2) ==
                  Rational(3, 4),
              "two recurrence steps from 1/2 must give 3/4");
  tally.check(fgt::a_m_closed(Rational(1, 2), 2) == Rational(3, 4),
              "closed form at m=2 from 1/2 must give 3/4");
  tally.check(fgt::recurrence_sample_bound(Rational(1), Rational(1, 2)) == 2,
              "sample bound for c=1 must be 2");
  tally.check(
      fgt::recurrence_sample_bound(Rational(1, 2), Rational(1, 2)) == 4,
      "sample bound for c=1/2, eps=1/2 must be 4");
  tally.check(
      fgt::recurrence_sample_bound(Rational(1, 6), Rational(1, 100)) == 502,
      "sample bound for c=1/6, eps=1/100 must be 502");
  std::printf("pinned values: ok\n");

  // Closed form == recurrence at delta = 0, every m up to m_max.
  bool identity_ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    const long den = 2 + static_cast<long>(rand_below(rng, 999));
    const long num = 1 + static_cast<long>(rand_below(rng, den - 1));
    const Rational a0(num, den);
    Rational a = a0;
    for (std::uint64_t m = 0; m <= m_max; ++m) {
      if (a != fgt::a_m_closed(a0, static_cast<unsigned>(m))) {
        identity_ok = false;
        break;
      }
      a = 1 / (2 - a);
    }
    if (!identity_ok) break;
  }
  tally.check(identity_ok, "closed form differs from the delta=0 recurrence");
  std::printf("closed form vs recurrence: 100 starts, m <= %llu\n",
              static_cast<unsigned long long>(m_max));

  // Monotone in m; antitone and strictly bounded in delta.
  const Rational a0(1, 2);
  const std::vector<Rational> deltas = {
      Rational(0),     Rational(1, 100), Rational(1, 10),
      Rational(1, 4),  Rational(1, 2),   Rational(3, 4)};
  bool monotone_ok = true;
  for (const Rational& delta : deltas) {
    if (!fgt::limit_precondition_holds(a0, delta)) monotone_ok = false;
    Rational prev = a0;
    for (unsigned m = 1; m <= 60; ++m) {
      const Rational cur = fgt::a_m_recurrence({a0, delta}, m);
      if (!(cur > 0 && cur < 1 && cur >= prev)) monotone_ok = false;
      prev = cur;
    }
  }
  for (std::size_t i = 1; i < deltas.size(); ++i) {
    for (unsigned m = 1; m <= 60; ++m) {
      if (!(fgt::a_m_recurrence({a0, deltas[i]}, m) <=
            fgt::a_m_recurrence({a0, deltas[i - 1]}, m))) {
        monotone_ok = false;
      }
    }
  }
  tally.check(monotone_ok, "iterate monotonicity in m or delta failed");
  std::printf("monotone in m and delta: %zu deltas, m <= 60\n", deltas.size());

  // Domination: perturbed super-solutions stay above the recurrence.
  bool domination_ok = true;
  for (int trial = 0; trial < 20; ++trial) {
    const Rational delta = deltas[rand_below(rng, deltas.size())];
    Rational a = a0;
    Rational b = a0 + (1 - a0) / (2 + static_cast<long>(rand_below(rng, 6)));
    for (unsigned m = 1; m <= 50; ++m) {
      a = 1 / (2 - a * (1 - delta));
      b = 1 / (2 - b * (1 - delta));
      if (rng() & 1) b = b + (1 - b) / 1000;
      if (b < a) {
        domination_ok = false;
        break;
      }
    }
  }
  tally.check(domination_ok, "perturbed sequence dipped below the recurrence");
  std::printf("domination: 20 perturbed sequences, m <= 50\n");

  // Iterates approach 1/(1 + sqrt(delta)).
  for (const auto& [dnum, dden] : {std::pair{1L, 4L}, std::pair{1L, 100L}}) {
    const Rational delta(dnum, dden);
    const auto it = fgt::iterate_to_limit({a0, delta}, 1e-9);
    const double limit = fgt::a_m_delta_limit(delta);
    const double gap = std::abs(it.value.convert_to<double>() - limit);
    std::printf("limit delta=%ld/%ld: value %s steps %lu gap %.2e\n", dnum,
                dden, fgt::to_decimal_string(it.value, 7).c_str(), it.steps,
                gap);
    tally.check(it.converged && gap < 1e-6,
                "iterates missed the closed-form limit");
  }

  // The delta -> 0 gap at fixed m shrinks monotonically.
  bool gap_ok = true;
  const unsigned m_fixed = 50;
  const Rational am = fgt::a_m_closed(a0, m_fixed);
  Rational prev_gap(-1);
  Rational last_gap(0);
  Rational delta(1, 10);
  for (int j = 1; j <= 8; ++j, delta /= 10) {
    const Rational gap = am - fgt::a_m_recurrence({a0, delta}, m_fixed);
    if (gap < 0) gap_ok = false;
    if (prev_gap >= 0 && gap > prev_gap) gap_ok = false;
    prev_gap = gap;
    last_gap = gap;
  }
  if (!(last_gap < Rational(1, 10000))) gap_ok = false;
  tally.check(gap_ok, "a_{m,delta} does not tighten to a_m as delta -> 0");
  std::printf("delta -> 0 at m=50: final gap %s\n",
              fgt::to_decimal_string(last_gap, 7).c_str());
  return tally;
}

SuiteTally suite_fiber(std::uint64_t count, std::mt19937_64& rng) {
  SuiteTally tally;
  std::uint64_t done = 0;
  while (done < count) {
    const auto s = random_state(rng);
    const auto before = fgt::fiber_label(s);
    if (!before) continue;
    std::optional<fgt::MachineState> next;
    switch (rand_below(rng, 3)) {
      case 0: next = fgt::apply_u(s); break;
      case 1: next = fgt::apply_v(s); break;
      default: next = fgt::apply_v_inv(s); break;
    }
    if (!next) continue;
    const auto after = fgt::fiber_label(*next);
    if (!after) continue;
    tally.check(*before == *after, "generator application moved the label");
    ++done;
  }
  std::printf("labelled pairs: %llu\n", static_cast<unsigned long long>(done));
  return tally;
}

SuiteTally suite_monotone(std::uint64_t count, std::mt19937_64& rng,
                          int workers) {
  SuiteTally tally;
  fgt::TraceOptions opts;
  opts.workers = workers;
  opts.interrupt = &g_interrupted;

  for (std::uint64_t i = 0; i < count; ++i) {
    const fgt::Word w = random_word(rng, 6);
    const int exact_ell = fgt::u_count(w);
    std::string fixed_list;
    std::string discarded_list;
    bool monotone_ok = true;
    Rational prev_fixed(0);
    Rational prev_discarded(1);
    for (int ell = 1; ell <= 6; ++ell) {
      const auto est = fgt::trace_bounded(w, ell, opts);
      if (est.fixed_mass() < prev_fixed) monotone_ok = false;
      if (est.discarded_mass() > prev_discarded) monotone_ok = false;
      prev_fixed = est.fixed_mass();
      prev_discarded = est.discarded_mass();
      if (ell > 1) {
        fixed_list += " ";
        discarded_list += " ";
      }
      fixed_list += est.fixed_fraction();
      discarded_list += est.discarded_fraction();
    }
    const auto exact = fgt::trace_bounded(w, exact_ell, opts);
    std::printf("word %llu: u_count %d\n",
                static_cast<unsigned long long>(i + 1), exact_ell);
    std::printf("  fixed: %s\n", fixed_list.c_str());
    std::printf("  discarded: %s\n", discarded_list.c_str());
    std::printf("  window %d: discarded %s\n", exact_ell,
                exact.discarded_fraction().c_str());
    tally.check(monotone_ok, "bounds degraded as the window grew");
    tally.check(exact.discarded_count == 0 && exact.is_exact,
                "window = u_count must resolve every configuration");
  }
  return tally;
}

}  // namespace

int run_verify(const VerifyArgs& args) {
  std::mt19937_64 rng(args.seed);
  std::printf("suite: %s\nseed: %llu\n", args.suite.c_str(),
              static_cast<unsigned long long>(args.seed));

  const auto pick = [&](std::uint64_t suite_default) {
    return args.count == 0 ? suite_default : args.count;
  };

  SuiteTally tally;
  if (args.suite == "machine-relations") {
    tally = suite_machine_relations(pick(10000), rng);
  } else if (args.suite == "commutator-support") {
    tally = suite_commutator_support(pick(10000), rng);
  } else if (args.suite == "recurrence") {
    tally = suite_recurrence(pick(1000), rng);
  } else if (args.suite == "khintchine") {
    tally = suite_khintchine(pick(300), rng);
  } else if (args.suite == "amdelta") {
    tally = suite_amdelta(pick(1000), rng);
  } else if (args.suite == "fiber") {
    tally = suite_fiber(pick(10000), rng);
  } else if (args.suite == "monotone") {
    tally = suite_monotone(pick(50), rng, args.workers);
  } else {
    throw fgt::ParseError("unknown suite: \"" + args.suite + "\"");
  }

  std::printf("cases: %llu\nfailures: %llu\nresult: %s\n",
              static_cast<unsigned long long>(tally.cases),
              static_cast<unsigned long long>(tally.failures),
              tally.failures == 0 ? "PASS" : "FAIL");
  return tally.failures == 0 ? kExitOk : kExitFailure;
}
