#include "fgt/perm.hpp"

#include <numeric>

#include "fgt/errors.hpp"

namespace fgt {

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t y : images_) {
    if (y >= images_.size() || seen[y]) {
      throw Error("permutation images do not form a bijection");
    }
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::uint32_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::uint32_t x = 0; x < degree(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t x = 0; x < degree(); ++x) inv[images_[x]] = x;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) {
    throw Error("degree mismatch in permutation composition");
  }
  std::vector<std::uint32_t> images(g.degree());
  for (std::uint32_t x = 0; x < g.degree(); ++x) images[x] = g(h(x));
  return Permutation(std::move(images));
}

Permutation perm_power(const Permutation& g, long long n) {
  Permutation base = n < 0 ? g.inverse() : g;
  if (n < 0) n = -n;
  Permutation out = Permutation::identity(g.degree());
  while (n > 0) {
    if (n & 1) out = compose(out, base);
    base = compose(base, base);
    n >>= 1;
  }
  return out;
}

}  // namespace fgt
