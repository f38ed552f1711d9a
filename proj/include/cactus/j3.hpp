#pragma once

// Exact arithmetic in J_3 = <s12, s23, s13>, which is infinite dihedral.
//
// Every element has a unique form  A(m) * s13^eps  where A(m) is the reduced
// alternating word over {s12, s23} of length |m|, starting with s12 when
// m > 0 and with s23 when m < 0:
//
//   A(m) = (s12 s23)^(m/2)          m even
//   A(m) = (s12 s23)^((m-1)/2) s12  m odd
//
// Conjugation by s13 swaps s12 and s23, so s13 A(m) = A(-m) s13. The index-2
// subgroup J_3^{2} = <s12, s23> is exactly the set of elements with eps = 0.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cactus/report.hpp"
#include "cactus/words.hpp"

namespace cactus {

struct CanonicalJ3 {
  std::int64_t m = 0;
  int eps = 0;

  static CanonicalJ3 identity() { return {}; }

  std::int64_t length() const noexcept { return (m < 0 ? -m : m) + eps; }

  // "(m=<int>, eps=<0|1>)"
  std::string to_string() const;

  friend auto operator<=>(const CanonicalJ3&, const CanonicalJ3&) = default;
  friend bool operator==(const CanonicalJ3&, const CanonicalJ3&) = default;
};

// Parses the canonical-form text format; throws ParseError.
CanonicalJ3 parse_canonical(const std::string& text);

// Degree-3 generators by name.
Generator s12();
Generator s23();
Generator s13();

// Word-level normalization: pushes each s13 to the right with
// s13 s12 -> s23 s13 and s13 s23 -> s12 s13, cancels s13 pairs and freely
// reduces the {s12, s23} part. Throws DegreeMismatch unless degree 3.
CanonicalJ3 canonicalize(const Word& w);

CanonicalJ3 from_index(std::int64_t m);
CanonicalJ3 from_generator(const Generator& g);
Word to_word(const CanonicalJ3& c);

// Group law directly in (m, eps) coordinates.
CanonicalJ3 mul(const CanonicalJ3& a, const CanonicalJ3& b);
CanonicalJ3 inv(const CanonicalJ3& c);

inline CanonicalJ3 operator*(const CanonicalJ3& a, const CanonicalJ3& b) {
  return mul(a, b);
}

bool in_subgroup_2(const CanonicalJ3& c);

// Canonical form of (s12 s13)^(3k): (m = 3k, eps = k mod 2).
CanonicalJ3 pure_element(std::int64_t k);

// x -> sign * x + shift on the integers.
//
// s12 -> -x, s13 -> 1 - x, s23 -> 2 - x is a faithful action of J_3 by
// reflections of Z, built independently of canonicalize so the two can be
// cross-checked.
struct AffineModelElement {
  int sign = 1;
  std::int64_t shift = 0;

  static AffineModelElement identity() { return {}; }

  std::int64_t operator()(std::int64_t x) const { return sign * x + shift; }
  // Apply *this first, then next.
  AffineModelElement then(const AffineModelElement& next) const;

  std::string to_string() const;

  friend auto operator<=>(const AffineModelElement&,
                          const AffineModelElement&) = default;
  friend bool operator==(const AffineModelElement&,
                         const AffineModelElement&) = default;
};

AffineModelElement affine_model(const Generator& g);
// Letters act left to right, matching the permutation projection.
AffineModelElement evaluate_word(const Word& w);

// The five defining relators of J_3 as words that must equal the identity.
std::vector<Word> j3_relators();

// Cross-checks canonicalize against the affine model on every word of length
// <= max_length: two words share a canonical form iff they share an affine
// image. Also checks that every relator evaluates to the identity map.
VerificationReport verify_affine_oracle(std::size_t max_length);

}  // namespace cactus
