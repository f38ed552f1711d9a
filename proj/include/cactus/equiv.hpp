#pragma once

// The action of PJ_3 = <(s12 s13)^3> on the vertices of the Cayley graph of
// J_3^{2}, the vertex map phi0 from the universal cover of the compactified
// X(4) to J_3^{2}, and the isomorphism PJ_3 -> pi_1 given by
// (s12 s13)^(3j) -> lambda^j.
//
// In (m, eps) coordinates everything is a shift of m:
//   gamma0((s12 s13)^(3k), (m, 0)) = (m + 3k, 0)
//   phi0([213]_k) = 3k + 1,  phi0([123]_k) = 3k,  phi0([132]_k) = 3k - 1

#include <cstdint>
#include <functional>

#include "cactus/confspace.hpp"
#include "cactus/j3.hpp"
#include "cactus/report.hpp"

namespace cactus {

// The pure element (s12 s13)^(3k).
struct PureCactus3 {
  std::int64_t k = 0;

  PureCactus3 operator*(const PureCactus3& other) const { return {k + other.k}; }
  PureCactus3 inverse() const { return {-k}; }
  CanonicalJ3 canonical() const { return pure_element(k); }
  Word word() const;

  friend bool operator==(const PureCactus3&, const PureCactus3&) = default;
};

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;  // inclusive

  // Throws Error if lo > hi.
  void validate(const char* what) const;
  std::int64_t size() const noexcept { return hi - lo + 1; }
};

// g * h, right-multiplied by s13 when that product leaves J_3^{2}.
// Throws DomainError when h has eps = 1.
CanonicalJ3 gamma0(const PureCactus3& g, const CanonicalJ3& h);

CanonicalJ3 phi0(const CoverVertex& v);
// Throws DomainError when c has eps = 1.
CoverVertex phi0_inv(const CanonicalJ3& c);

using VertexMap = std::function<CanonicalJ3(const CoverVertex&)>;

// For each j, k and label, compares phi(lambda^j . [abc]_k) against
// gamma0((s12 s13)^(3j), phi([abc]_k)). Failure lines:
//   FAIL j=<j> v=<vertex> lhs=<canon> rhs=<canon>
VerificationReport check_equivariance(const IntRange& j_range,
                                      const IntRange& k_range,
                                      const VertexMap& phi = phi0);

// gamma0(g1 g2, h) = gamma0(g1, gamma0(g2, h)) for k1, k2 in k_range and
// h = (m, 0) for m in m_range, plus gamma0(1, h) = h.
VerificationReport verify_action_axioms(const IntRange& k_range,
                                        const IntRange& m_range);

DeckElement iso_h(const PureCactus3& g);
PureCactus3 iso_h_inv(const DeckElement& d);

// h(g1 g2) = h(g1) h(g2), h' likewise, and h o h' = h' o h = id on the range.
VerificationReport verify_iso(const IntRange& k_range);

// phi0 is injective on labels x k_range with image exactly
// {(m, 0) : 3 lo - 1 <= m <= 3 hi + 1}, and phi0_inv inverts it.
VerificationReport verify_phi0_bijection(const IntRange& k_range);

namespace testing {

// phi0 with one case broken: [213]_k for even k goes to (3k, 0). Used as a
// negative control for check_equivariance.
CanonicalJ3 phi0_perturbed(const CoverVertex& v);

}  // namespace testing

}  // namespace cactus
