#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fgt/perm.hpp"
#include "fgt/rational.hpp"

namespace fgt {

// A finite set {0,...,degree-1} with uniform measure 1/degree per point
// and named generator permutations.
struct FiniteAction {
  std::uint32_t degree = 0;
  std::map<std::string, Permutation> generators;

  bool operator==(const FiniteAction&) const = default;
};

// Point sets are sorted, duplicate-free lists of points.
using PointSet = std::vector<std::uint32_t>;

struct SupportReport {
  PointSet support_set;  // points moved
  PointSet fixed_set;    // points fixed
  Rational measure;      // |support_set| / degree
};

SupportReport support(const Permutation& p);

// (length l(g), distance d(g,h) = l(g o h^-1)); degrees must match.
std::pair<Rational, Rational> length_and_distance(const Permutation& g,
                                                  const Permutation& h);

// Checks the commutator-support identity on A = S(g) & S(h):
//   S([g,h]) is contained in A u gA u hA, and
//   mu(S([g,h])) <= 3 mu(A) - mu(gA & A) - mu(hA & A),
// with the commutator [g,h] = g h g^-1 h^-1. All measures exact.
struct CommutatorSupportReport {
  PointSet A;
  PointSet gA;
  PointSet hA;
  bool containment_ok = false;
  Rational lhs;  // mu(S([g,h]))
  Rational rhs;  // 3 mu(A) - mu(gA & A) - mu(hA & A)
  bool inequality_ok = false;
};

CommutatorSupportReport check_commutator_support(const Permutation& g,
                                                 const Permutation& h);

// Least j with 1 <= j < n_bound and nu(T^j A & A) > nu(A)^2 (1 - eps),
// where n_bound = recurrence_sample_bound(c, eps). Requires
// nu(A) >= c > 0 and 0 < eps <= 1. A witness always exists (recurrence
// lemma); its absence throws, signalling a bug.
int recurrence_witness(const Permutation& T, const PointSet& A,
                       const Rational& c, const Rational& eps);

// Breadth-first search over products of the generators (transitive joint
// action assumed) for the first g with mu(gA & B) > mu(A) mu(B) - eps.
// The word lists generator names in application order (first applied
// first); the identity is the empty word. Throws ResourceError past
// `expansion_cap` dequeued elements.
struct KhintchineWitness {
  std::vector<std::string> word;
  Permutation element;
};

KhintchineWitness khintchine_witness(const FiniteAction& action,
                                     const PointSet& A, const PointSet& B,
                                     const Rational& eps,
                                     std::size_t expansion_cap = 1000000);

// Minimum support measure over the non-identity elements of the group
// generated by `generators` (breadth-first closure, deduplicated), with a
// first-found minimizing element. The trivial group yields delta = 1 with
// the identity as witness (empty infimum, reported as the trivial upper
// bound). Throws ResourceError when the closure exceeds `element_cap`.
struct DiscretenessModulus {
  Rational delta;
  Permutation witness;
};

DiscretenessModulus modulus_of_discreteness(
    const std::vector<Permutation>& generators,
    std::size_t element_cap = 1000000);

// Permutational wreath-product model on k blocks of size b = degree of
// `block_action`: each block_action generator acts on block 0 only
// (same names); for k >= 2 the blocks are permuted rigidly by "shift"
// (the k-cycle) and "swap" (blocks 0 and 1). k = 1 returns block_action.
FiniteAction wreath_model(std::uint32_t k, const FiniteAction& block_action);

// Support measure of the element that acts as translation by 2^n on the
// coset 2^n Z inside Z / 2^m Z and as the identity elsewhere; equals
// 1/2^n (= 1/k for k = 2^n blocks). Requires 0 <= n < m <= 25.
Rational z_tower_support(int n, int m);

// The same element as a permutation, for closure/chain experiments.
Permutation z_tower_block_element(int n, int m);

// Translation x -> x + t on Z / points Z.
Permutation translation_perm(std::uint32_t points, long long t);

// Fixed-point ratio |Fix(g)| / degree for each level's permutation: the
// finite truncation of the limit fixed ratio along a coset tower.
std::vector<Rational> fixed_ratio_chain(const std::vector<Permutation>& levels);

}  // namespace fgt
