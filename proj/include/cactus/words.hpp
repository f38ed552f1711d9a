#pragma once

// Free words over the cactus generators s_{p,q} and the relation moves of
// J_n: involution (s^2 = 1), disjoint commutation, and nesting
//   s_{p,q} s_{m,r} = s_{p+q-r, p+q-m} s_{p,q}   for [m,r] inside [p,q].

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cactus/error.hpp"

namespace cactus {

class Generator {
 public:
  // Throws InvalidGenerator unless 1 <= p < q <= n.
  Generator(int p, int q, int n);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  int degree() const noexcept { return n_; }

  // Number of points reversed, q - p + 1.
  int span_length() const noexcept { return q_ - p_ + 1; }

  bool disjoint_from(const Generator& other) const noexcept;
  // other's interval lies inside ours (equality allowed).
  bool contains(const Generator& other) const noexcept;
  // The image of `inner` under our reversal: s_{p+q-r, p+q-m}.
  Generator reflect(const Generator& inner) const;

  std::string to_string() const;

  friend auto operator<=>(const Generator&, const Generator&) = default;
  friend bool operator==(const Generator&, const Generator&) = default;

 private:
  int n_;
  int p_;
  int q_;
};

Generator make_generator(int p, int q, int n);

// All generators of J_n, ordered by (p, q).
std::vector<Generator> all_generators(int n);

class Word {
 public:
  explicit Word(int degree);
  // Throws DegreeMismatch if some letter has a different degree.
  Word(int degree, std::vector<Generator> letters);

  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const Generator> letters() const noexcept { return letters_; }
  const Generator& operator[](std::size_t i) const { return letters_[i]; }

  // Concatenation; throws DegreeMismatch.
  Word operator*(const Word& rhs) const;
  // Every letter is an involution, so the inverse is the reversed word.
  Word inverse() const;
  // w^e for any integer e (negative powers use inverse()).
  Word power(std::int64_t e) const;

  // Whitespace separated `s<p>,<q>` tokens; the identity is the empty string.
  std::string to_string() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  int degree_;
  std::vector<Generator> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

Word make_word(int degree, std::initializer_list<std::pair<int, int>> letters);

// Parses the word text format. Errors carry the offending token index.
Word parse_word(std::string_view text, int degree);
// Largest q appearing in the text (0 for the empty word); throws ParseError.
int max_index(std::string_view text);

// J_n (subset empty) or the subgroup J_n^S generated by the s_{p,q} with
// q - p + 1 in S.
struct PresentationSpec {
  int degree;
  std::optional<std::set<int>> subset;

  static PresentationSpec full(int n);
  // Throws Error unless n >= 2 and S lies in [2, n].
  static PresentationSpec with_subset(int n, std::set<int> s);

  bool admits(const Generator& g) const;
  bool admits(const Word& w) const;
  std::vector<Generator> generators() const;
};

enum class RelationFamily { Involution, Commutation, Nesting };

struct Relation {
  RelationFamily family;
  Word lhs;
  Word rhs;
};

// Every instance of the three defining relation families of J_n.
std::vector<Relation> relations(int n);

Word free_reduce(const Word& w);

// Swaps letters i, i+1 when their intervals are disjoint.
Word apply_commute(const Word& w, std::size_t i);

enum class Direction { LeftToRight, RightToLeft };

// LeftToRight: (s_{p,q}, s_{m,r}) -> (s_{p+q-r,p+q-m}, s_{p,q}) for [m,r] a
// proper subinterval of [p,q]. RightToLeft is the inverse substitution.
Word apply_nesting(const Word& w, std::size_t i, Direction dir);

// All words one move away (commute, nesting either way, cancel a pair, insert
// a pair). Insertions only produce words of length <= length_cap. Sorted,
// duplicate free, excludes w.
std::vector<Word> neighbors(const Word& w, std::size_t length_cap);

enum class SearchResult { Equal, Unknown };

// Breadth-first search over `neighbors`. Never claims inequality.
SearchResult equal_by_search(const Word& w1, const Word& w2,
                             std::size_t length_cap, std::size_t node_budget);

// The set of words reached by the same search before the budget runs out.
std::vector<Word> search_closure(const Word& w, std::size_t length_cap,
                                 std::size_t node_budget);

}  // namespace cactus
