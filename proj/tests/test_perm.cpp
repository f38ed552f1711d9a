#include "cactus/j3.hpp"
#include "cactus/perm.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cactus;
using cactus::test::for_each_word;
using cactus::test::w3;

TEST_CASE("interval_reversal") {
  CHECK(interval_reversal(1, 2, 3).images() == std::vector<int>{2, 1, 3});
  CHECK(interval_reversal(1, 3, 3).images() == std::vector<int>{3, 2, 1});
  CHECK(interval_reversal(2, 4, 5).images() == std::vector<int>{1, 4, 3, 2, 5});
  CHECK_THROWS_AS(interval_reversal(2, 2, 3), InvalidGenerator);
  CHECK_THROWS_AS(interval_reversal(1, 4, 3), InvalidGenerator);
}

TEST_CASE("Permutation basics") {
  CHECK(Permutation::identity(3).to_string() == "[1,2,3]");
  CHECK_THROWS_AS(Permutation({1, 1, 2}), Error);
  CHECK_THROWS_AS(Permutation({0, 1, 2}), Error);
  CHECK_THROWS_AS(Permutation::identity(3).then(Permutation::identity(4)),
                  DegreeMismatch);
}

TEST_CASE("project composes left to right") {
  CHECK(project(Word(3)) == Permutation::identity(3));
  // 1 -(12)-> 2 -(13)-> 2, 2 -> 1 -> 3, 3 -> 3 -> 1
  CHECK(project(w3({{1, 2}, {1, 3}})).to_string() == "[2,3,1]");
  CHECK(project(Word(3, {s12(), s13()}).power(3)).is_identity());
}

TEST_CASE("is_pure") {
  CHECK(is_pure(Word(3)));
  CHECK_FALSE(is_pure(w3({{1, 2}})));
  const Word base(3, {s12(), s13()});
  for (int j = -30; j <= 30; ++j) {
    CAPTURE(j);
    CHECK(is_pure(base.power(j)) == (j % 3 == 0));
  }
}

TEST_CASE("a generator squared projects to the identity") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : all_generators(n)) {
      CHECK(project(Word(n, {g, g})).is_identity());
    }
  }
}

TEST_CASE("projection respects every relation instance, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    std::size_t instances = 0;
    for (int p = 1; p <= n; ++p) {
      for (int q = p + 1; q <= n; ++q) {
        const auto outer = interval_reversal(p, q, n);
        for (int m = 1; m <= n; ++m) {
          for (int r = m + 1; r <= n; ++r) {
            const auto inner = interval_reversal(m, r, n);
            if (q < m || r < p) {
              ++instances;
              CHECK(outer.then(inner) == inner.then(outer));
            }
            if (p <= m && r <= q) {
              ++instances;
              const auto moved = interval_reversal(p + q - r, p + q - m, n);
              CHECK(outer.then(inner) == moved.then(outer));
            }
          }
        }
      }
    }
    // relations(n) enumerates the same instances plus the involutions.
    CHECK(relations(n).size() == instances + all_generators(n).size());
    for (const auto& rel : relations(n)) {
      CHECK(project(rel.lhs) == project(rel.rhs));
    }
  }
}

TEST_CASE("degree 3: pure iff the canonical form is a power of (s12 s13)^3") {
  for_each_word(3, 7, [](const Word& w) {
    const auto c = canonicalize(w);
    const bool is_power = (c.m % 3 == 0) && c == pure_element(c.m / 3);
    if (is_pure(w) != is_power) FAIL(w.to_string());
  });
}
