#include "cactus/equiv.hpp"

#include <set>

namespace cactus {

namespace {

bool is_odd(std::int64_t x) { return (x % 2) != 0; }

std::int64_t label_offset(CoverLabel label) {
  switch (label) {
    case CoverLabel::L213: return 1;
    case CoverLabel::L123: return 0;
    case CoverLabel::L132: return -1;
  }
  return 0;
}

constexpr CoverLabel kLabels[] = {CoverLabel::L213, CoverLabel::L123,
                                  CoverLabel::L132};

}  // namespace

Word PureCactus3::word() const {
  return Word(3, {s12(), s13()}).power(3 * k);
}

void IntRange::validate(const char* what) const {
  if (lo > hi) {
    throw Error(std::string("empty range for ") + what + ": " +
                std::to_string(lo) + " > " + std::to_string(hi));
  }
}

CanonicalJ3 gamma0(const PureCactus3& g, const CanonicalJ3& h) {
  if (!in_subgroup_2(h)) {
    throw DomainError("gamma0 acts on J_3^{2} only, got " + h.to_string());
  }
  auto gh = mul(g.canonical(), h);
  if (!in_subgroup_2(gh)) gh = mul(gh, from_generator(s13()));
  return gh;
}

CanonicalJ3 phi0(const CoverVertex& v) {
  return from_index(3 * v.k + label_offset(v.label));
}

CoverVertex phi0_inv(const CanonicalJ3& c) {
  if (!in_subgroup_2(c)) {
    throw DomainError("phi0 maps onto J_3^{2} only, got " + c.to_string());
  }
  std::int64_t r = c.m % 3;
  if (r < 0) r += 3;
  switch (r) {
    case 1: return {CoverLabel::L213, (c.m - 1) / 3};
    case 0: return {CoverLabel::L123, c.m / 3};
    default: return {CoverLabel::L132, (c.m + 1) / 3};
  }
}

VerificationReport check_equivariance(const IntRange& j_range,
                                      const IntRange& k_range,
                                      const VertexMap& phi) {
  j_range.validate("j");
  k_range.validate("k");
  VerificationReport report;
  for (std::int64_t j = j_range.lo; j <= j_range.hi; ++j) {
    const DeckElement deck{j};
    const PureCactus3 g{j};
    for (std::int64_t k = k_range.lo; k <= k_range.hi; ++k) {
      for (auto label : kLabels) {
        const CoverVertex v{label, k};
        ++report.total;
        const auto lhs = phi(deck_act(deck, v));
        const auto rhs = gamma0(g, phi(v));
        if (lhs != rhs) {
          report.failures.push_back("FAIL j=" + std::to_string(j) +
                                    " v=" + v.to_string() +
                                    " lhs=" + lhs.to_string() +
                                    " rhs=" + rhs.to_string());
        }
      }
    }
  }
  return report;
}

VerificationReport verify_action_axioms(const IntRange& k_range,
                                        const IntRange& m_range) {
  k_range.validate("k");
  m_range.validate("m");
  VerificationReport report;
  for (std::int64_t m = m_range.lo; m <= m_range.hi; ++m) {
    const auto h = from_index(m);
    ++report.total;
    if (gamma0(PureCactus3{0}, h) != h) {
      report.failures.push_back("FAIL k1=0 h=" + h.to_string() +
                                " identity moved it to " +
                                gamma0(PureCactus3{0}, h).to_string());
    }
    for (std::int64_t k1 = k_range.lo; k1 <= k_range.hi; ++k1) {
      for (std::int64_t k2 = k_range.lo; k2 <= k_range.hi; ++k2) {
        const PureCactus3 g1{k1}, g2{k2};
        ++report.total;
        const auto lhs = gamma0(g1 * g2, h);
        const auto rhs = gamma0(g1, gamma0(g2, h));
        if (lhs != rhs) {
          report.failures.push_back(
              "FAIL k1=" + std::to_string(k1) + " k2=" + std::to_string(k2) +
              " h=" + h.to_string() + " lhs=" + lhs.to_string() +
              " rhs=" + rhs.to_string());
        }
      }
    }
  }
  return report;
}

DeckElement iso_h(const PureCactus3& g) { return {g.k}; }

PureCactus3 iso_h_inv(const DeckElement& d) { return {d.j}; }

VerificationReport verify_iso(const IntRange& k_range) {
  k_range.validate("k");
  VerificationReport report;
  auto fail = [&](const std::string& what, std::int64_t a, std::int64_t b) {
    report.failures.push_back("FAIL " + what + " k1=" + std::to_string(a) +
                              " k2=" + std::to_string(b));
  };
  for (std::int64_t k1 = k_range.lo; k1 <= k_range.hi; ++k1) {
    const PureCactus3 g1{k1};
    const DeckElement d1{k1};
    report.total += 2;
    if (iso_h_inv(iso_h(g1)) != g1) fail("h'(h(g))!=g", k1, k1);
    if (iso_h(iso_h_inv(d1)) != d1) fail("h(h'(d))!=d", k1, k1);
    for (std::int64_t k2 = k_range.lo; k2 <= k_range.hi; ++k2) {
      const PureCactus3 g2{k2};
      const DeckElement d2{k2};
      report.total += 3;
      if (iso_h(g1 * g2) != iso_h(g1) * iso_h(g2)) fail("h(g1g2)", k1, k2);
      if (iso_h_inv(d1 * d2) != iso_h_inv(d1) * iso_h_inv(d2)) {
        fail("h'(d1d2)", k1, k2);
      }
      // The product in PJ_3 must agree with the product in J_3.
      if ((g1 * g2).canonical() != mul(g1.canonical(), g2.canonical())) {
        fail("g1g2 in J_3", k1, k2);
      }
    }
  }
  return report;
}

VerificationReport verify_phi0_bijection(const IntRange& k_range) {
  k_range.validate("k");
  VerificationReport report;
  std::set<CanonicalJ3> image;
  for (std::int64_t k = k_range.lo; k <= k_range.hi; ++k) {
    for (auto label : kLabels) {
      const CoverVertex v{label, k};
      ++report.total;
      const auto c = phi0(v);
      if (!image.insert(c).second) {
        report.failures.push_back("FAIL v=" + v.to_string() +
                                  " collides at " + c.to_string());
      }
      if (phi0_inv(c) != v) {
        report.failures.push_back("FAIL v=" + v.to_string() +
                                  " phi0_inv gives " +
                                  phi0_inv(c).to_string());
      }
    }
  }
  for (std::int64_t m = 3 * k_range.lo - 1; m <= 3 * k_range.hi + 1; ++m) {
    ++report.total;
    if (!image.count(from_index(m))) {
      report.failures.push_back("FAIL m=" + std::to_string(m) +
                                " not in image");
    }
  }
  if (image.size() != static_cast<std::size_t>(3 * k_range.size())) {
    report.failures.push_back("FAIL image has " + std::to_string(image.size()) +
                              " elements");
  }
  return report;
}

namespace testing {

CanonicalJ3 phi0_perturbed(const CoverVertex& v) {
  if (v.label == CoverLabel::L213 && !is_odd(v.k)) {
    return from_index(3 * v.k);  // should be 3k + 1
  }
  return phi0(v);
}

}  // namespace testing

}  // namespace cactus
