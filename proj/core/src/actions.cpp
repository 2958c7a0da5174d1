#include "fgt/actions.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "fgt/errors.hpp"
#include "fgt/sequences.hpp"

namespace fgt {

namespace {

std::vector<bool> set_to_mask(const PointSet& set, std::uint32_t degree) {
  std::vector<bool> mask(degree, false);
  for (std::uint32_t x : set) {
    if (x >= degree) throw Error("point outside the action's degree");
    mask[x] = true;
  }
  return mask;
}

std::size_t intersection_size(const std::vector<bool>& a,
                              const std::vector<bool>& b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += a[i] && b[i];
  return n;
}

Rational uniform_measure(std::size_t count, std::uint32_t degree) {
  if (degree == 0) return Rational(0);
  return Rational(Integer(count), Integer(degree));
}

}  // namespace

SupportReport support(const Permutation& p) {
  SupportReport report;
  for (std::uint32_t x = 0; x < p.degree(); ++x) {
    if (p(x) != x) {
      report.support_set.push_back(x);
    } else {
      report.fixed_set.push_back(x);
    }
  }
  report.measure = uniform_measure(report.support_set.size(), p.degree());
  return report;
}

std::pair<Rational, Rational> length_and_distance(const Permutation& g,
                                                  const Permutation& h) {
  if (g.degree() != h.degree()) {
    throw Error("degree mismatch in length_and_distance");
  }
  Rational length = support(g).measure;
  Rational distance = support(compose(g, h.inverse())).measure;
  return {length, distance};
}

CommutatorSupportReport check_commutator_support(const Permutation& g,
                                                 const Permutation& h) {
  if (g.degree() != h.degree()) {
    throw Error("degree mismatch in check_commutator_support");
  }
  const std::uint32_t n = g.degree();

  std::vector<bool> moved_g(n, false);
  std::vector<bool> moved_h(n, false);
  for (std::uint32_t x = 0; x < n; ++x) {
    moved_g[x] = g(x) != x;
    moved_h[x] = h(x) != x;
  }

  CommutatorSupportReport report;
  std::vector<bool> a_mask(n, false);
  std::vector<bool> ga_mask(n, false);
  std::vector<bool> ha_mask(n, false);
  for (std::uint32_t x = 0; x < n; ++x) {
    if (moved_g[x] && moved_h[x]) {
      a_mask[x] = true;
      report.A.push_back(x);
      ga_mask[g(x)] = true;
      ha_mask[h(x)] = true;
    }
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    if (ga_mask[x]) report.gA.push_back(x);
    if (ha_mask[x]) report.hA.push_back(x);
  }

  Permutation comm =
      compose(compose(g, h), compose(g.inverse(), h.inverse()));
  std::size_t comm_support = 0;
  report.containment_ok = true;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (comm(x) != x) {
      ++comm_support;
      if (!a_mask[x] && !ga_mask[x] && !ha_mask[x]) {
        report.containment_ok = false;
      }
    }
  }

  report.lhs = uniform_measure(comm_support, n);
  report.rhs = Rational(3) * uniform_measure(report.A.size(), n) -
               uniform_measure(intersection_size(ga_mask, a_mask), n) -
               uniform_measure(intersection_size(ha_mask, a_mask), n);
  report.inequality_ok = report.lhs <= report.rhs;
  return report;
}

int recurrence_witness(const Permutation& T, const PointSet& A,
                       const Rational& c, const Rational& eps) {
  const std::uint32_t n = T.degree();
  if (n == 0) throw Error("recurrence_witness needs a nonempty point set");
  std::vector<bool> a_mask = set_to_mask(A, n);
  Rational nu_a = uniform_measure(A.size(), n);
  if (!(c > 0 && nu_a >= c)) {
    throw Error("recurrence_witness requires nu(A) >= c > 0");
  }
  if (!(eps > 0 && eps <= 1)) {
    throw Error("recurrence_witness requires 0 < eps <= 1");
  }

  long long n_bound = recurrence_sample_bound(c, eps);
  Rational threshold = nu_a * nu_a * (Rational(1) - eps);

  std::vector<bool> current = a_mask;
  for (long long j = 1; j < n_bound; ++j) {
    std::vector<bool> next(n, false);
    for (std::uint32_t x = 0; x < n; ++x) {
      if (current[x]) next[T(x)] = true;
    }
    current = std::move(next);
    Rational overlap = uniform_measure(intersection_size(current, a_mask), n);
    if (overlap > threshold) return static_cast<int>(j);
  }
  throw Error(
      "recurrence witness not found below the sample bound; this "
      "contradicts the recurrence lemma and indicates a bug");
}

KhintchineWitness khintchine_witness(const FiniteAction& action,
                                     const PointSet& A, const PointSet& B,
                                     const Rational& eps,
                                     std::size_t expansion_cap) {
  const std::uint32_t n = action.degree;
  if (n == 0) throw Error("khintchine_witness needs a nonempty point set");
  if (!(eps > 0)) throw Error("khintchine_witness requires eps > 0");
  for (const auto& [name, gen] : action.generators) {
    if (gen.degree() != n) {
      throw Error("generator '" + name + "' has the wrong degree");
    }
  }
  std::vector<bool> a_mask = set_to_mask(A, n);
  std::vector<bool> b_mask = set_to_mask(B, n);
  Rational target = uniform_measure(A.size(), n) * uniform_measure(B.size(), n);
  target -= eps;

  struct Node {
    std::vector<std::string> word;
    Permutation element;
  };
  std::deque<Node> queue;
  std::set<std::vector<std::uint32_t>> seen;
  queue.push_back({{}, Permutation::identity(n)});
  seen.insert(queue.front().element.images());

  std::size_t expanded = 0;
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    if (++expanded > expansion_cap) {
      throw ResourceError(
          "khintchine_witness search cap exceeded (non-transitive action "
          "or cap too small)");
    }

    std::size_t overlap = 0;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (a_mask[x] && b_mask[node.element(x)]) ++overlap;
    }
    if (uniform_measure(overlap, n) > target) {
      return {std::move(node.word), std::move(node.element)};
    }

    for (const auto& [name, gen] : action.generators) {
      Permutation child = compose(gen, node.element);
      if (seen.insert(child.images()).second) {
        std::vector<std::string> word = node.word;
        word.push_back(name);
        queue.push_back({std::move(word), std::move(child)});
      }
    }
  }
  throw Error(
      "khintchine_witness exhausted the generated group without a witness; "
      "the joint action is not transitive");
}

DiscretenessModulus modulus_of_discreteness(
    const std::vector<Permutation>& generators, std::size_t element_cap) {
  if (generators.empty()) {
    throw Error("modulus_of_discreteness needs at least one generator");
  }
  const std::uint32_t n = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != n) {
      throw Error("degree mismatch among generators");
    }
  }

  // Breadth-first closure; products of generators exhaust a finite group.
  std::vector<Permutation> closure;
  std::set<std::vector<std::uint32_t>> seen;
  closure.push_back(Permutation::identity(n));
  seen.insert(closure.front().images());
  for (std::size_t i = 0; i < closure.size(); ++i) {
    for (const auto& gen : generators) {
      Permutation next = compose(closure[i], gen);
      if (seen.insert(next.images()).second) {
        if (closure.size() >= element_cap) {
          throw ResourceError(
              "group closure exceeds the element cap of " +
              std::to_string(element_cap));
        }
        closure.push_back(std::move(next));
      }
    }
  }

  DiscretenessModulus result{Rational(1), Permutation::identity(n)};
  bool found = false;
  for (const auto& g : closure) {
    if (g.is_identity()) continue;
    Rational measure = support(g).measure;
    if (!found || measure < result.delta) {
      result.delta = measure;
      result.witness = g;
      found = true;
    }
  }
  return result;
}

FiniteAction wreath_model(std::uint32_t k, const FiniteAction& block_action) {
  if (k < 1) throw Error("wreath_model requires k >= 1");
  const std::uint32_t b = block_action.degree;
  if (b < 1) throw Error("wreath_model requires a nonempty block");
  if (k == 1) return block_action;

  const std::uint32_t n = k * b;
  FiniteAction model;
  model.degree = n;

  // Point (block i, block point y) <-> index i*b + y.
  for (const auto& [name, gen] : block_action.generators) {
    if (name == "shift" || name == "swap") {
      throw Error("block generator name '" + name +
                  "' collides with a wreath generator");
    }
    std::vector<std::uint32_t> images(n);
    for (std::uint32_t x = 0; x < n; ++x) images[x] = x;
    for (std::uint32_t y = 0; y < b; ++y) images[y] = gen(y);
    model.generators.emplace(name, Permutation(std::move(images)));
  }

  std::vector<std::uint32_t> shift(n);
  std::vector<std::uint32_t> swap(n);
  for (std::uint32_t i = 0; i < k; ++i) {
    for (std::uint32_t y = 0; y < b; ++y) {
      shift[i * b + y] = ((i + 1) % k) * b + y;
      std::uint32_t j = i == 0 ? 1 : (i == 1 ? 0 : i);
      swap[i * b + y] = j * b + y;
    }
  }
  model.generators.emplace("shift", Permutation(std::move(shift)));
  model.generators.emplace("swap", Permutation(std::move(swap)));
  return model;
}

Permutation translation_perm(std::uint32_t points, long long t) {
  if (points == 0) throw Error("translation needs at least one point");
  long long r = t % static_cast<long long>(points);
  if (r < 0) r += points;
  std::vector<std::uint32_t> images(points);
  for (std::uint32_t x = 0; x < points; ++x) {
    images[x] = static_cast<std::uint32_t>((x + r) % points);
  }
  return Permutation(std::move(images));
}

Permutation z_tower_block_element(int n, int m) {
  if (!(0 <= n && n < m && m <= 25)) {
    throw Error("z_tower requires 0 <= n < m <= 25");
  }
  const std::uint32_t points = std::uint32_t(1) << m;
  const std::uint32_t step = std::uint32_t(1) << n;
  std::vector<std::uint32_t> images(points);
  for (std::uint32_t x = 0; x < points; ++x) {
    images[x] = x % step == 0 ? (x + step) % points : x;
  }
  return Permutation(std::move(images));
}

Rational z_tower_support(int n, int m) {
  return support(z_tower_block_element(n, m)).measure;
}

std::vector<Rational> fixed_ratio_chain(
    const std::vector<Permutation>& levels) {
  std::vector<Rational> ratios;
  ratios.reserve(levels.size());
  for (const auto& g : levels) {
    ratios.push_back(Rational(1) - support(g).measure);
  }
  return ratios;
}

}  // namespace fgt
