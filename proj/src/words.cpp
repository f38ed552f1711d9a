#include "cactus/words.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <unordered_set>

namespace cactus {

Generator::Generator(int p, int q, int n) : n_(n), p_(p), q_(q) {
  if (p < 1 || p >= q || q > n) {
    throw InvalidGenerator("invalid generator s" + std::to_string(p) + "," +
                           std::to_string(q) + " in degree " +
                           std::to_string(n));
  }
}

bool Generator::disjoint_from(const Generator& other) const noexcept {
  return q_ < other.p_ || other.q_ < p_;
}

bool Generator::contains(const Generator& other) const noexcept {
  return p_ <= other.p_ && other.q_ <= q_;
}

Generator Generator::reflect(const Generator& inner) const {
  return Generator(p_ + q_ - inner.q_, p_ + q_ - inner.p_, n_);
}

std::string Generator::to_string() const {
  return "s" + std::to_string(p_) + "," + std::to_string(q_);
}

Generator make_generator(int p, int q, int n) { return Generator(p, q, n); }

std::vector<Generator> all_generators(int n) {
  std::vector<Generator> out;
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) out.emplace_back(p, q, n);
  }
  return out;
}

Word::Word(int degree) : degree_(degree) {}

Word::Word(int degree, std::vector<Generator> letters)
    : degree_(degree), letters_(std::move(letters)) {
  for (const auto& g : letters_) {
    if (g.degree() != degree_) {
      throw DegreeMismatch("letter " + g.to_string() + " has degree " +
                           std::to_string(g.degree()) + ", word has degree " +
                           std::to_string(degree_));
    }
  }
}

Word Word::operator*(const Word& rhs) const {
  if (degree_ != rhs.degree_) {
    throw DegreeMismatch("cannot concatenate words of degree " +
                         std::to_string(degree_) + " and " +
                         std::to_string(rhs.degree_));
  }
  Word out = *this;
  out.letters_.insert(out.letters_.end(), rhs.letters_.begin(),
                      rhs.letters_.end());
  return out;
}

Word Word::inverse() const {
  Word out = *this;
  std::reverse(out.letters_.begin(), out.letters_.end());
  return out;
}

Word Word::power(std::int64_t e) const {
  const Word base = e < 0 ? inverse() : *this;
  Word out(degree_);
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) {
    out.letters_.insert(out.letters_.end(), base.letters_.begin(),
                        base.letters_.end());
  }
  return out;
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += letters_[i].to_string();
  }
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.degree());
  for (const auto& g : w.letters()) {
    h = h * 1000003u + static_cast<std::size_t>(g.p() * 64 + g.q());
  }
  return h;
}

Word make_word(int degree, std::initializer_list<std::pair<int, int>> letters) {
  std::vector<Generator> gens;
  gens.reserve(letters.size());
  for (auto [p, q] : letters) gens.emplace_back(p, q, degree);
  return Word(degree, std::move(gens));
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  };
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

std::pair<int, int> parse_token(std::string_view tok, std::size_t index) {
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("token " + std::to_string(index) + " '" +
                          std::string(tok) + "': " + why,
                      index);
  };
  if (tok.size() < 4 || tok[0] != 's') throw fail("expected s<p>,<q>");
  auto comma = tok.find(',');
  if (comma == std::string_view::npos) throw fail("missing ','");
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw fail("bad integer '" + std::string(s) + "'");
    }
    return v;
  };
  return {parse_int(tok.substr(1, comma - 1)), parse_int(tok.substr(comma + 1))};
}

}  // namespace

Word parse_word(std::string_view text, int degree) {
  auto tokens = split_tokens(text);
  std::vector<Generator> letters;
  letters.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto [p, q] = parse_token(tokens[i], i);
    try {
      letters.emplace_back(p, q, degree);
    } catch (const InvalidGenerator& e) {
      throw ParseError("token " + std::to_string(i) + ": " + e.what(), i);
    }
  }
  return Word(degree, std::move(letters));
}

int max_index(std::string_view text) {
  auto tokens = split_tokens(text);
  int m = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    m = std::max(m, parse_token(tokens[i], i).second);
  }
  return m;
}

PresentationSpec PresentationSpec::full(int n) {
  if (n < 2) throw Error("degree must be at least 2");
  return {n, std::nullopt};
}

PresentationSpec PresentationSpec::with_subset(int n, std::set<int> s) {
  if (n < 2) throw Error("degree must be at least 2");
  for (int k : s) {
    if (k < 2 || k > n) {
      throw Error("subset element " + std::to_string(k) + " outside [2, " +
                  std::to_string(n) + "]");
    }
  }
  return {n, std::move(s)};
}

bool PresentationSpec::admits(const Generator& g) const {
  if (g.degree() != degree) return false;
  return !subset || subset->count(g.span_length()) > 0;
}

bool PresentationSpec::admits(const Word& w) const {
  if (w.degree() != degree) return false;
  return std::all_of(w.letters().begin(), w.letters().end(),
                     [&](const Generator& g) { return admits(g); });
}

std::vector<Generator> PresentationSpec::generators() const {
  std::vector<Generator> out;
  for (const auto& g : all_generators(degree)) {
    if (admits(g)) out.push_back(g);
  }
  return out;
}

std::vector<Relation> relations(int n) {
  std::vector<Relation> out;
  const auto gens = all_generators(n);
  for (const auto& g : gens) {
    out.push_back({RelationFamily::Involution, Word(n, {g, g}), Word(n)});
  }
  for (const auto& outer : gens) {
    for (const auto& other : gens) {
      if (outer.disjoint_from(other)) {
        out.push_back({RelationFamily::Commutation, Word(n, {outer, other}),
                       Word(n, {other, outer})});
      }
      if (outer.contains(other)) {
        out.push_back({RelationFamily::Nesting, Word(n, {outer, other}),
                       Word(n, {outer.reflect(other), outer})});
      }
    }
  }
  return out;
}

Word free_reduce(const Word& w) {
  std::vector<Generator> stack;
  stack.reserve(w.size());
  for (const auto& g : w.letters()) {
    if (!stack.empty() && stack.back() == g) {
      stack.pop_back();
    } else {
      stack.push_back(g);
    }
  }
  return Word(w.degree(), std::move(stack));
}

namespace {

std::vector<Generator> letters_of(const Word& w) {
  return {w.letters().begin(), w.letters().end()};
}

void check_pair_position(const Word& w, std::size_t i) {
  if (i + 1 >= w.size()) {
    throw MoveNotApplicable("position " + std::to_string(i) +
                            " has no following letter in a word of length " +
                            std::to_string(w.size()));
  }
}

bool proper_nest(const Generator& outer, const Generator& inner) {
  return outer != inner && outer.contains(inner);
}

}  // namespace

Word apply_commute(const Word& w, std::size_t i) {
  check_pair_position(w, i);
  if (!w[i].disjoint_from(w[i + 1])) {
    throw MoveNotApplicable("letters " + w[i].to_string() + " and " +
                            w[i + 1].to_string() + " do not commute");
  }
  auto letters = letters_of(w);
  std::swap(letters[i], letters[i + 1]);
  return Word(w.degree(), std::move(letters));
}

Word apply_nesting(const Word& w, std::size_t i, Direction dir) {
  check_pair_position(w, i);
  auto letters = letters_of(w);
  if (dir == Direction::LeftToRight) {
    const Generator outer = w[i];
    const Generator inner = w[i + 1];
    if (!proper_nest(outer, inner)) {
      throw MoveNotApplicable(inner.to_string() + " is not nested in " +
                              outer.to_string());
    }
    letters[i] = outer.reflect(inner);
    letters[i + 1] = outer;
  } else {
    const Generator inner = w[i];
    const Generator outer = w[i + 1];
    if (!proper_nest(outer, inner)) {
      throw MoveNotApplicable(inner.to_string() + " is not nested in " +
                              outer.to_string());
    }
    letters[i] = outer;
    letters[i + 1] = outer.reflect(inner);
  }
  return Word(w.degree(), std::move(letters));
}

std::vector<Word> neighbors(const Word& w, std::size_t length_cap) {
  std::vector<Word> out;
  const auto n = w.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto& x = w[i];
    const auto& y = w[i + 1];
    if (x.disjoint_from(y)) out.push_back(apply_commute(w, i));
    if (proper_nest(x, y)) {
      out.push_back(apply_nesting(w, i, Direction::LeftToRight));
    }
    if (proper_nest(y, x)) {
      out.push_back(apply_nesting(w, i, Direction::RightToLeft));
    }
    if (x == y) {
      auto letters = letters_of(w);
      letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i),
                    letters.begin() + static_cast<std::ptrdiff_t>(i + 2));
      out.emplace_back(w.degree(), std::move(letters));
    }
  }
  if (n + 2 <= length_cap) {
    for (const auto& g : all_generators(w.degree())) {
      for (std::size_t pos = 0; pos <= n; ++pos) {
        auto letters = letters_of(w);
        letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(pos),
                       {g, g});
        out.emplace_back(w.degree(), std::move(letters));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase(out, w);
  return out;
}

namespace {

// Runs the BFS; stops early and returns true once `target` is reached.
bool bfs(const Word& start, const Word* target, std::size_t length_cap,
         std::size_t node_budget,
         std::unordered_set<Word, WordHash>& seen) {
  std::deque<Word> frontier;
  seen.insert(start);
  frontier.push_back(start);
  if (target && start == *target) return true;
  while (!frontier.empty()) {
    Word cur = std::move(frontier.front());
    frontier.pop_front();
    for (auto& next : neighbors(cur, length_cap)) {
      if (seen.count(next)) continue;
      if (target && next == *target) return true;
      if (seen.size() >= node_budget) return false;
      seen.insert(next);
      frontier.push_back(std::move(next));
    }
  }
  return false;
}

}  // namespace

SearchResult equal_by_search(const Word& w1, const Word& w2,
                             std::size_t length_cap, std::size_t node_budget) {
  if (w1.degree() != w2.degree()) {
    throw DegreeMismatch("cannot compare words of degree " +
                         std::to_string(w1.degree()) + " and " +
                         std::to_string(w2.degree()));
  }
  std::unordered_set<Word, WordHash> seen;
  return bfs(w1, &w2, length_cap, node_budget, seen) ? SearchResult::Equal
                                                     : SearchResult::Unknown;
}

std::vector<Word> search_closure(const Word& w, std::size_t length_cap,
                                 std::size_t node_budget) {
  std::unordered_set<Word, WordHash> seen;
  bfs(w, nullptr, length_cap, node_budget, seen);
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cactus
