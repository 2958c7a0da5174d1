#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace fgt {

// A bijection on {0, ..., n-1}, stored as its image array. Composition is
// (g o h)(x) = g(h(x)) throughout: h acts first.
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::uint32_t degree);

  std::uint32_t degree() const {
    return static_cast<std::uint32_t>(images_.size());
  }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

// (g o h)(x) = g(h(x)); degrees must match.
Permutation compose(const Permutation& g, const Permutation& h);

Permutation perm_power(const Permutation& g, long long n);

}  // namespace fgt
