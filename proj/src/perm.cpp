#include "cactus/perm.hpp"

#include <algorithm>
#include <numeric>

namespace cactus {

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > degree() || hit[static_cast<std::size_t>(v)]) {
      throw Error("not a permutation of 1.." + std::to_string(degree()));
    }
    hit[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree()) {
    throw DegreeMismatch("cannot compose permutations of degree " +
                         std::to_string(degree()) + " and " +
                         std::to_string(next.degree()));
  }
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = next(images_[i]);
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i]);
  }
  return out + "]";
}

Permutation interval_reversal(int p, int q, int n) {
  const Generator g(p, q, n);  // validates the interval
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    images[static_cast<std::size_t>(i - 1)] =
        (i >= g.p() && i <= g.q()) ? g.p() + g.q() - i : i;
  }
  return Permutation(std::move(images));
}

Permutation project(const Word& w) {
  auto acc = Permutation::identity(w.degree());
  for (const auto& g : w.letters()) {
    acc = acc.then(interval_reversal(g.p(), g.q(), g.degree()));
  }
  return acc;
}

bool is_pure(const Word& w) { return project(w).is_identity(); }

}  // namespace cactus
