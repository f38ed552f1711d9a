#pragma once

// Combinatorial model of the configuration space X(n) of n distinct points on
// a circle. A chamber (connected component) is a cyclic ordering of the
// labels 1..n up to rotation and reflection.
//
// For n = 4 there are three chambers. They are named by fixing label 4 at a
// basepoint and reading the other three labels around the circle, taking
// the smaller of the two reading directions: [123], [132], [213]. The
// compactification of X(4) glues them along three collision walls into a
// circle, whose universal cover is the line
//
//   ... [213]_k -- [123]_k -- [132]_k -- [213]_{k+1} -- ...
//
// with deck group generated by lambda: [abc]_k -> [abc]_{k+1}.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cactus/error.hpp"

namespace cactus {

class Chamber {
 public:
  int degree() const noexcept { return static_cast<int>(cyclic_.size()); }
  // Lexicographically least representative over all rotations and reflections.
  const std::vector<int>& cyclic_word() const noexcept { return cyclic_; }

  // Basepoint reading of the other labels, e.g. "[213]". Labels are written
  // as digits for n <= 10 and comma separated above that.
  std::string name() const;

  friend auto operator<=>(const Chamber&, const Chamber&) = default;
  friend bool operator==(const Chamber&, const Chamber&) = default;

 private:
  friend Chamber canonical_chamber(const std::vector<int>& seq);
  explicit Chamber(std::vector<int> cyclic) : cyclic_(std::move(cyclic)) {}
  std::vector<int> cyclic_;
};

// Throws Error unless seq is a permutation of 1..n with n >= 3.
Chamber canonical_chamber(const std::vector<int>& seq);
// Inverse of Chamber::name(); throws ParseError.
Chamber parse_chamber(std::string_view text);

// All chambers of X(n), sorted; there are (n-1)!/2 of them.
std::vector<Chamber> enumerate_chambers(int n);

// True iff the chambers differ by swapping two cyclically adjacent labels
// (a wall where exactly two adjacent points collide). For n > 4 this is the
// same rule applied beyond the compactified X(4). Throws DegreeMismatch.
bool chamber_adjacent(const Chamber& a, const Chamber& b);

// Dual cell structure of the compactified X(4): chambers joined by walls.
struct DualComplexX4 {
  std::vector<Chamber> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j

  std::size_t degree(std::size_t v) const;
  bool connected() const;
};

DualComplexX4 build_x4bar();

// Cover labels in line order within one period.
enum class CoverLabel { L213 = 0, L123 = 1, L132 = 2 };

std::string to_string(CoverLabel label);  // "[213]" etc.
Chamber chamber_of(CoverLabel label);
// Throws ParseError for anything but the three names.
CoverLabel parse_cover_label(std::string_view text);

struct CoverVertex {
  CoverLabel label = CoverLabel::L123;
  std::int64_t k = 0;

  // Index along the cover line: 3k + label position.
  std::int64_t position() const noexcept {
    return 3 * k + static_cast<std::int64_t>(label);
  }
  static CoverVertex at_position(std::int64_t pos);

  // "[213]_k"
  std::string to_string() const;

  friend auto operator<=>(const CoverVertex&, const CoverVertex&) = default;
  friend bool operator==(const CoverVertex&, const CoverVertex&) = default;
};

// Throws ParseError.
CoverVertex parse_cover_vertex(std::string_view text);

// The element lambda^j of the fundamental group.
struct DeckElement {
  std::int64_t j = 0;

  DeckElement operator*(const DeckElement& other) const { return {j + other.j}; }
  DeckElement inverse() const { return {-j}; }

  friend auto operator<=>(const DeckElement&, const DeckElement&) = default;
  friend bool operator==(const DeckElement&, const DeckElement&) = default;
};

// Vertices with k in [-K, K] in line order. Throws Error for K < 0.
std::vector<CoverVertex> cover_window(std::int64_t K);
// Consecutive vertices on the cover line.
bool cover_adjacent(const CoverVertex& a, const CoverVertex& b);

CoverVertex deck_act(const DeckElement& d, const CoverVertex& v);
Chamber covering_map(const CoverVertex& v);

}  // namespace cactus
