#include <deque>
#include <map>

#include "cactus/j3.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cactus;
using cactus::test::for_each_word;
using cactus::test::w3;

namespace {

CanonicalJ3 C(std::int64_t m, int eps) { return {m, eps}; }

}  // namespace

TEST_CASE("canonicalize") {
  CHECK(canonicalize(Word(3)) == C(0, 0));
  CHECK(canonicalize(w3({{2, 3}})) == C(-1, 0));
  CHECK(canonicalize(Word(3, {s12(), s13()}).power(3)) == C(3, 1));
  CHECK(canonicalize(w3({{1, 3}, {1, 2}, {1, 3}})) == C(-1, 0));
  CHECK_THROWS_AS(canonicalize(make_word(4, {{1, 2}})), DegreeMismatch);
}

TEST_CASE("from_index and to_word") {
  CHECK(to_word(from_index(0)).empty());
  CHECK(to_word(from_index(4)) == w3({{1, 2}, {2, 3}, {1, 2}, {2, 3}}));
  CHECK(to_word(from_index(-3)) == w3({{2, 3}, {1, 2}, {2, 3}}));
  CHECK(to_word(C(1, 1)) == w3({{1, 2}, {1, 3}}));
  CHECK(to_word(C(-2, 0)) == w3({{2, 3}, {1, 2}}));
}

TEST_CASE("from_index matches the (s12 s23)^(m/2), (s12 s23)^((m-1)/2) s12 form") {
  const Word ab(3, {s12(), s23()});
  const Word a(3, {s12()});
  for (std::int64_t m = -40; m <= 40; ++m) {
    CAPTURE(m);
    const Word expanded =
        (m % 2 == 0) ? ab.power(m / 2) : ab.power((m - 1) / 2) * a;
    CHECK(free_reduce(expanded) == to_word(from_index(m)));
  }
}

TEST_CASE("round trip and word length for m in [-40, 40]") {
  for (std::int64_t m = -40; m <= 40; ++m) {
    for (int eps = 0; eps <= 1; ++eps) {
      const auto c = C(m, eps);
      CHECK(canonicalize(to_word(c)) == c);
      CHECK(static_cast<std::int64_t>(to_word(c).size()) == (m < 0 ? -m : m) + eps);
      CHECK(c.length() == static_cast<std::int64_t>(to_word(c).size()));
    }
  }
}

TEST_CASE("mul examples") {
  for (std::int64_t m = -5; m <= 5; ++m) {
    CHECK(mul(C(m, 0), C(0, 0)) == C(m, 0));
    CHECK(mul(C(m, 1), C(0, 0)) == C(m, 1));
  }
  CHECK(mul(C(1, 0), C(1, 0)) == C(0, 0));
  // (s12 s23 s12 s13)(s13) by the word-level route.
  CHECK(canonicalize(w3({{1, 2}, {2, 3}, {1, 2}, {1, 3}, {1, 3}})) == C(3, 0));
  CHECK(mul(C(3, 1), C(0, 1)) == C(3, 0));
}

TEST_CASE("mul agrees with canonicalize of the concatenation") {
  for (std::int64_t m1 = -12; m1 <= 12; ++m1) {
    for (std::int64_t m2 = -12; m2 <= 12; ++m2) {
      for (int e1 = 0; e1 <= 1; ++e1) {
        for (int e2 = 0; e2 <= 1; ++e2) {
          const auto a = C(m1, e1), b = C(m2, e2);
          if (mul(a, b) != canonicalize(to_word(a) * to_word(b))) {
            FAIL(a.to_string() << " * " << b.to_string());
          }
        }
      }
    }
  }
}

TEST_CASE("inv") {
  CHECK(inv(C(0, 0)) == C(0, 0));
  CHECK(inv(C(1, 0)) == C(1, 0));
  CHECK(canonicalize(to_word(C(4, 0)).inverse()) == C(-4, 0));
  CHECK(inv(C(4, 0)) == C(-4, 0));
  for (std::int64_t m = -20; m <= 20; ++m) {
    for (int e = 0; e <= 1; ++e) {
      CHECK(inv(C(m, e)) == canonicalize(to_word(C(m, e)).inverse()));
    }
  }
}

TEST_CASE("group axioms in coordinates, m in [-10, 10]") {
  std::vector<CanonicalJ3> window;
  for (std::int64_t m = -10; m <= 10; ++m) {
    window.push_back(C(m, 0));
    window.push_back(C(m, 1));
  }
  for (const auto& a : window) {
    CHECK(mul(a, inv(a)) == CanonicalJ3::identity());
    CHECK(mul(inv(a), a) == CanonicalJ3::identity());
    for (const auto& b : window) {
      CHECK(in_subgroup_2(mul(a, b)) == ((a.eps ^ b.eps) == 0));
      for (const auto& c : window) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          FAIL(a.to_string() << b.to_string() << c.to_string());
        }
      }
    }
  }
}

TEST_CASE("in_subgroup_2") {
  CHECK(in_subgroup_2(C(5, 0)));
  CHECK_FALSE(in_subgroup_2(C(0, 1)));
  CHECK(in_subgroup_2(canonicalize(w3({{1, 3}, {1, 2}, {1, 3}}))));
}

TEST_CASE("pure_element") {
  CHECK(pure_element(0) == C(0, 0));
  CHECK(pure_element(1) == C(3, 1));
  CHECK(pure_element(2) == C(6, 0));
  const Word base(3, {s12(), s13()});
  for (std::int64_t k = -10; k <= 10; ++k) {
    CHECK(pure_element(k) == canonicalize(base.power(3 * k)));
    for (std::int64_t k2 = -10; k2 <= 10; ++k2) {
      CHECK(mul(pure_element(k), pure_element(k2)) == pure_element(k + k2));
    }
  }
}

TEST_CASE("canonical text format") {
  CHECK(C(-3, 1).to_string() == "(m=-3, eps=1)");
  CHECK(parse_canonical("(m=-3, eps=1)") == C(-3, 1));
  CHECK_THROWS_AS(parse_canonical("(m=1, eps=2)"), ParseError);
}

TEST_CASE("affine model") {
  // Relators first, before the model is trusted for anything else.
  for (const auto& r : j3_relators()) {
    CHECK(evaluate_word(r) == AffineModelElement::identity());
  }
  CHECK(evaluate_word(Word(3)) == AffineModelElement::identity());
  CHECK(evaluate_word(w3({{1, 2}, {1, 2}})) == AffineModelElement::identity());
  for (const auto& g : {s12(), s23(), s13()}) {
    const auto f = affine_model(g);
    CHECK(f.sign == -1);
    CHECK(f.then(f) == AffineModelElement::identity());
  }

  const Word base(3, {s12(), s13()});
  const auto six = evaluate_word(base.power(6));
  CHECK(six.sign == 1);
  CHECK(six.shift != 0);
  CHECK(six.shift % 2 == 0);
  // s12 s13 is a unit translation, so it has infinite order.
  CHECK(evaluate_word(base) == AffineModelElement{1, 1});
  for (int e = 1; e <= 20; ++e) {
    CHECK(evaluate_word(base.power(e)) == AffineModelElement{1, e});
  }
}

TEST_CASE("oracle equivalence: canonicalize vs affine model, length <= 8") {
  const auto report = verify_affine_oracle(8);
  CHECK(report.ok());
  CHECK(report.total == 5 + (1 + 3 + 9 + 27 + 81 + 243 + 729 + 2187 + 6561));
  INFO(report.to_text());
}

TEST_CASE("length |m| + eps is the geodesic length over {s12, s23, s13}") {
  // Breadth-first search in the affine model, independent of canonicalize
  // except for labelling the reached elements.
  std::map<AffineModelElement, std::size_t> depth;
  std::deque<std::pair<AffineModelElement, Word>> queue;
  depth[AffineModelElement::identity()] = 0;
  queue.emplace_back(AffineModelElement::identity(), Word(3));
  const std::size_t max_depth = 10;
  while (!queue.empty()) {
    auto [f, w] = queue.front();
    queue.pop_front();
    CHECK(canonicalize(w).length() == static_cast<std::int64_t>(depth[f]));
    if (w.size() == max_depth) continue;
    for (const auto& g : {s12(), s23(), s13()}) {
      const auto next = f.then(affine_model(g));
      if (depth.count(next)) continue;
      depth[next] = w.size() + 1;
      queue.emplace_back(next, w * Word(3, {g}));
    }
  }
  // Elements of length <= 10: |{(m, eps) : |m| + eps <= 10}| = 21 + 19.
  CHECK(depth.size() == 40);
}
