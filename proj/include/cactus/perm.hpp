#pragma once

// The projection J_n -> S_n sending s_{p,q} to the reversal of [p, q].
// Words act left to right: the leftmost letter is applied first.

#include <string>
#include <vector>

#include "cactus/words.hpp"

namespace cactus {

class Permutation {
 public:
  static Permutation identity(int n);
  // Throws Error unless images is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const noexcept { return images_; }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }

  // Apply *this first, then next.
  Permutation then(const Permutation& next) const;
  bool is_identity() const noexcept;

  // One-line notation, e.g. "[2,3,1]".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// i -> p + q - i on [p, q], fixed elsewhere. Throws InvalidGenerator.
Permutation interval_reversal(int p, int q, int n);
Permutation project(const Word& w);
bool is_pure(const Word& w);

}  // namespace cactus
