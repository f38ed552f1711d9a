#include <set>

#include "cactus/j3.hpp"
#include "cactus/perm.hpp"
#include "cactus/words.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cactus;
using cactus::test::for_each_word;
using cactus::test::w3;

TEST_CASE("make_generator validates 1 <= p < q <= n") {
  CHECK(make_generator(1, 2, 3).to_string() == "s1,2");
  CHECK(make_generator(1, 3, 3).to_string() == "s1,3");
  CHECK_THROWS_AS(make_generator(2, 2, 3), InvalidGenerator);
  CHECK_THROWS_AS(make_generator(0, 2, 3), InvalidGenerator);
  CHECK_THROWS_AS(make_generator(1, 4, 3), InvalidGenerator);
  CHECK_THROWS_AS(make_generator(3, 2, 3), InvalidGenerator);
}

TEST_CASE("word text format") {
  const auto w = parse_word("s1,2 s1,3", 3);
  CHECK(w == w3({{1, 2}, {1, 3}}));
  CHECK(w.to_string() == "s1,2 s1,3");
  CHECK(parse_word("", 3).empty());
  CHECK(parse_word("  \t s2,3\n", 3) == w3({{2, 3}}));
  CHECK(max_index("s1,2 s3,5") == 5);

  SUBCASE("errors carry the token index") {
    auto index_of_error = [](const char* text) {
      try {
        parse_word(text, 3);
      } catch (const ParseError& e) {
        return static_cast<long>(e.token_index());
      }
      return -1L;
    };
    CHECK(index_of_error("s1,2 x1,2") == 1);
    CHECK(index_of_error("s1,2 s1,3 s1") == 2);
    CHECK(index_of_error("s2,2") == 0);
    CHECK(index_of_error("s1,2 s1,4") == 1);
    CHECK(index_of_error("s1,2a") == 0);
  }
}

TEST_CASE("degree mismatch is an error") {
  CHECK_THROWS_AS(make_word(3, {{1, 2}}) * make_word(4, {{1, 2}}),
                  DegreeMismatch);
  CHECK_THROWS_AS(Word(4, {make_generator(1, 2, 3)}), DegreeMismatch);
  CHECK_THROWS_AS(equal_by_search(Word(3), Word(4), 4, 100), DegreeMismatch);
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(w3({{1, 2}, {1, 2}})).empty());
  CHECK(free_reduce(w3({{1, 2}, {2, 3}, {2, 3}, {1, 2}})).empty());
  const auto w = w3({{1, 2}, {2, 3}, {1, 2}});
  // No adjacent equal pair, so nothing to cancel.
  for (std::size_t i = 0; i + 1 < w.size(); ++i) CHECK(w[i] != w[i + 1]);
  CHECK(free_reduce(w) == w);
}

TEST_CASE("free_reduce is idempotent on all words of length <= 8, degree <= 4") {
  std::size_t count = 0;
  for (int n = 2; n <= 4; ++n) {
    for_each_word(n, 8, [&](const Word& w) {
      const auto once = free_reduce(w);
      if (free_reduce(once) != once) FAIL(w.to_string());
      for (std::size_t i = 0; i + 1 < once.size(); ++i) {
        if (once[i] == once[i + 1]) FAIL(w.to_string());
      }
      ++count;
    });
  }
  CHECK(count > 2'000'000);
}

TEST_CASE("apply_commute") {
  const auto w = make_word(4, {{1, 2}, {3, 4}});
  CHECK(apply_commute(w, 0) == make_word(4, {{3, 4}, {1, 2}}));
  CHECK(apply_commute(make_word(4, {{3, 4}, {1, 2}}), 0) == w);
  CHECK_THROWS_AS(apply_commute(make_word(4, {{1, 2}, {2, 3}}), 0),
                  MoveNotApplicable);
  CHECK_THROWS_AS(apply_commute(w, 1), MoveNotApplicable);

  SUBCASE("commuting twice at the same position is the identity") {
    for_each_word(4, 4, [](const Word& u) {
      for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        if (u[i].disjoint_from(u[i + 1])) {
          CHECK(apply_commute(apply_commute(u, i), i) == u);
        }
      }
    });
  }
}

TEST_CASE("apply_nesting") {
  CHECK(apply_nesting(w3({{1, 3}, {1, 2}}), 0, Direction::LeftToRight) ==
        w3({{2, 3}, {1, 3}}));
  CHECK(apply_nesting(w3({{1, 3}, {2, 3}}), 0, Direction::LeftToRight) ==
        w3({{1, 2}, {1, 3}}));
  CHECK_THROWS_AS(apply_nesting(w3({{1, 2}, {2, 3}}), 0, Direction::LeftToRight),
                  MoveNotApplicable);
  CHECK(apply_nesting(w3({{2, 3}, {1, 3}}), 0, Direction::RightToLeft) ==
        w3({{1, 3}, {1, 2}}));
  // Equal intervals are excluded: the move would be vacuous.
  CHECK_THROWS_AS(apply_nesting(w3({{1, 3}, {1, 3}}), 0, Direction::LeftToRight),
                  MoveNotApplicable);

  SUBCASE("the two directions are mutually inverse") {
    for_each_word(5, 2, [](const Word& u) {
      if (u.size() != 2) return;
      try {
        const auto v = apply_nesting(u, 0, Direction::LeftToRight);
        CHECK(apply_nesting(v, 0, Direction::RightToLeft) == u);
      } catch (const MoveNotApplicable&) {
      }
    });
  }

  SUBCASE("degree 5: s1,5 s2,3 -> s3,4 s1,5") {
    CHECK(apply_nesting(make_word(5, {{1, 5}, {2, 3}}), 0,
                        Direction::LeftToRight) ==
          make_word(5, {{3, 4}, {1, 5}}));
  }
}

TEST_CASE("neighbors") {
  const auto empty = neighbors(Word(3), 2);
  CHECK(std::set<Word>(empty.begin(), empty.end()) ==
        std::set<Word>{w3({{1, 2}, {1, 2}}), w3({{2, 3}, {2, 3}}),
                       w3({{1, 3}, {1, 3}})});
  CHECK(neighbors(Word(3), 1).empty());

  const auto nest = neighbors(w3({{1, 3}, {1, 2}}), 2);
  CHECK(std::find(nest.begin(), nest.end(), w3({{2, 3}, {1, 3}})) != nest.end());

  const auto comm = neighbors(make_word(4, {{1, 2}, {3, 4}}), 2);
  CHECK(std::find(comm.begin(), comm.end(), make_word(4, {{3, 4}, {1, 2}})) !=
        comm.end());

  const auto cancel = neighbors(w3({{1, 2}, {1, 2}}), 2);
  CHECK(std::find(cancel.begin(), cancel.end(), Word(3)) != cancel.end());
}

TEST_CASE("every move preserves the permutation image (degree <= 4, length <= 6)") {
  std::size_t moves = 0;
  for (int n = 2; n <= 4; ++n) {
    for_each_word(n, 6, [&](const Word& w) {
      const auto image = project(w);
      for (const auto& v : neighbors(w, w.size() + 2)) {
        ++moves;
        if (project(v) != image) FAIL(w.to_string() << " -> " << v.to_string());
      }
    });
  }
  CHECK(moves > 0);
}

TEST_CASE("equal_by_search") {
  CHECK(equal_by_search(w3({{1, 2}, {1, 2}}), Word(3), 4, 1000) ==
        SearchResult::Equal);
  CHECK(equal_by_search(w3({{1, 2}, {1, 3}}), w3({{1, 3}, {2, 3}}), 4, 1000) ==
        SearchResult::Equal);
  CHECK(equal_by_search(w3({{1, 2}}), w3({{2, 3}}), 3, 5) ==
        SearchResult::Unknown);
  // (s12 s13)^3 = s12 s23 s12 s13 takes several moves.
  CHECK(equal_by_search(Word(3, {s12(), s13()}).power(3),
                        w3({{1, 2}, {2, 3}, {1, 2}, {1, 3}}), 6,
                        100000) == SearchResult::Equal);
  // Commutation in degree 4 is also found.
  CHECK(equal_by_search(make_word(4, {{1, 2}, {3, 4}, {1, 2}}),
                        make_word(4, {{3, 4}}), 3, 10000) == SearchResult::Equal);
}

TEST_CASE("equal_by_search is sound against canonicalize (degree 3, length <= 5)") {
  // Everything the search reaches from w1 is a word it would answer "equal"
  // for, so soundness over all pairs reduces to checking each closure.
  std::size_t checked = 0;
  for_each_word(3, 5, [&](const Word& w1) {
    const auto canon = canonicalize(w1);
    for (const auto& w2 : search_closure(w1, 6, 4000)) {
      ++checked;
      if (canonicalize(w2) != canon) {
        FAIL(w1.to_string() << " ~ " << w2.to_string());
      }
    }
  });
  CHECK(checked > 0);

  // And directly, over all pairs of length <= 3.
  std::vector<Word> words;
  for_each_word(3, 3, [&](const Word& w) { words.push_back(w); });
  for (const auto& a : words) {
    for (const auto& b : words) {
      if (equal_by_search(a, b, 5, 400) == SearchResult::Equal) {
        CHECK(canonicalize(a) == canonicalize(b));
      }
    }
  }
}

TEST_CASE("PresentationSpec") {
  const auto full = PresentationSpec::full(4);
  CHECK(full.generators().size() == 6);
  const auto two = PresentationSpec::with_subset(3, {2});
  CHECK(two.generators() == std::vector<Generator>{s12(), s23()});
  CHECK(two.admits(w3({{1, 2}, {2, 3}})));
  CHECK_FALSE(two.admits(w3({{1, 3}})));
  CHECK_THROWS_AS(PresentationSpec::with_subset(3, {1}), Error);
  CHECK_THROWS_AS(PresentationSpec::with_subset(3, {4}), Error);
  CHECK_THROWS_AS(PresentationSpec::full(1), Error);
}

TEST_CASE("relation instances hold as words of the same element") {
  for (const auto& r : relations(3)) {
    CHECK(canonicalize(r.lhs) == canonicalize(r.rhs));
  }
  // 3 involutions, no disjoint pairs, nestings: each generator contains
  // itself, and s13 contains s12, s23.
  CHECK(relations(3).size() == 3 + 0 + 5);
}
