#include "cactus/confspace.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace cactus {

namespace {

void require_permutation(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size());
  std::vector<bool> hit(seq.size() + 1, false);
  for (int v : seq) {
    if (v < 1 || v > n || hit[static_cast<std::size_t>(v)]) {
      throw Error("label sequence is not a permutation of 1.." +
                  std::to_string(n));
    }
    hit[static_cast<std::size_t>(v)] = true;
  }
}

std::vector<int> parse_labels(std::string_view body) {
  std::vector<int> labels;
  const bool has_comma = body.find(',') != std::string_view::npos;
  std::size_t i = 0;
  while (i < body.size()) {
    std::size_t end = has_comma ? body.find(',', i) : i + 1;
    if (end == std::string_view::npos) end = body.size();
    const auto tok = body.substr(i, end - i);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("bad chamber label '" + std::string(tok) + "'",
                       labels.size());
    }
    labels.push_back(v);
    i = has_comma ? end + 1 : end;
  }
  return labels;
}

}  // namespace

Chamber canonical_chamber(const std::vector<int>& seq) {
  if (seq.size() < 3) throw Error("a chamber needs at least 3 points");
  require_permutation(seq);
  const std::size_t n = seq.size();
  std::vector<int> best = seq;
  std::vector<int> img(n);
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t i = 0; i < n; ++i) {
        img[i] = reflect ? seq[(r + n - i) % n] : seq[(r + i) % n];
      }
      if (img < best) best = img;
    }
  }
  return Chamber(std::move(best));
}

std::string Chamber::name() const {
  const int n = degree();
  auto it = std::find(cyclic_.begin(), cyclic_.end(), n);
  std::vector<int> reading(it + 1, cyclic_.end());
  reading.insert(reading.end(), cyclic_.begin(), it);
  std::vector<int> reversed(reading.rbegin(), reading.rend());
  const auto& pick = std::min(reading, reversed);
  std::string out = "[";
  for (std::size_t i = 0; i < pick.size(); ++i) {
    if (n > 10 && i) out += ',';
    out += std::to_string(pick[i]);
  }
  return out + "]";
}

Chamber parse_chamber(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError("chamber must look like [213], got '" +
                         std::string(text) + "'",
                     0);
  }
  auto labels = parse_labels(text.substr(1, text.size() - 2));
  labels.push_back(static_cast<int>(labels.size()) + 1);
  try {
    return canonical_chamber(labels);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError("bad chamber '" + std::string(text) + "': " + e.what(), 0);
  }
}

std::vector<Chamber> enumerate_chambers(int n) {
  if (n < 3) throw Error("chambers need n >= 3");
  std::vector<int> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 1);
  std::set<Chamber> found;
  // Rotations are absorbed by fixing label 1 in front.
  do {
    found.insert(canonical_chamber(seq));
  } while (std::next_permutation(seq.begin() + 1, seq.end()));
  return {found.begin(), found.end()};
}

bool chamber_adjacent(const Chamber& a, const Chamber& b) {
  if (a.degree() != b.degree()) {
    throw DegreeMismatch("chambers of degree " + std::to_string(a.degree()) +
                         " and " + std::to_string(b.degree()));
  }
  if (a == b) return false;
  const auto n = static_cast<std::size_t>(a.degree());
  for (std::size_t i = 0; i < n; ++i) {
    auto seq = a.cyclic_word();
    std::swap(seq[i], seq[(i + 1) % n]);
    if (canonical_chamber(seq) == b) return true;
  }
  return false;
}

std::size_t DualComplexX4::degree(std::size_t v) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(),
                    [v](const auto& e) { return e.first == v || e.second == v; }));
}

bool DualComplexX4::connected() const {
  if (vertices.empty()) return true;
  std::vector<bool> seen(vertices.size(), false);
  std::vector<std::size_t> stack = {0};
  seen[0] = true;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto& [a, b] : edges) {
      if (a != v && b != v) continue;
      const auto w = a == v ? b : a;
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

DualComplexX4 build_x4bar() {
  DualComplexX4 x;
  x.vertices = enumerate_chambers(4);
  for (std::size_t i = 0; i < x.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < x.vertices.size(); ++j) {
      if (chamber_adjacent(x.vertices[i], x.vertices[j])) x.edges.emplace_back(i, j);
    }
  }
  return x;
}

std::string to_string(CoverLabel label) {
  switch (label) {
    case CoverLabel::L213: return "[213]";
    case CoverLabel::L123: return "[123]";
    case CoverLabel::L132: return "[132]";
  }
  return "[?]";
}

Chamber chamber_of(CoverLabel label) { return parse_chamber(to_string(label)); }

CoverLabel parse_cover_label(std::string_view text) {
  for (auto l : {CoverLabel::L213, CoverLabel::L123, CoverLabel::L132}) {
    if (text == to_string(l)) return l;
  }
  throw ParseError("unknown cover label '" + std::string(text) + "'", 0);
}

CoverVertex CoverVertex::at_position(std::int64_t pos) {
  std::int64_t k = pos / 3;
  std::int64_t r = pos % 3;
  if (r < 0) {
    r += 3;
    --k;
  }
  return {static_cast<CoverLabel>(r), k};
}

std::string CoverVertex::to_string() const {
  return cactus::to_string(label) + "_" + std::to_string(k);
}

CoverVertex parse_cover_vertex(std::string_view text) {
  const auto us = text.find('_');
  if (us == std::string_view::npos) {
    throw ParseError("cover vertex must look like [213]_k, got '" +
                         std::string(text) + "'",
                     0);
  }
  const auto label = parse_cover_label(text.substr(0, us));
  const auto num = text.substr(us + 1);
  std::int64_t k = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
  if (num.empty() || ec != std::errc() || ptr != num.data() + num.size()) {
    throw ParseError("bad cover index '" + std::string(num) + "'", 0);
  }
  return {label, k};
}

std::vector<CoverVertex> cover_window(std::int64_t K) {
  if (K < 0) throw Error("cover window needs K >= 0");
  std::vector<CoverVertex> out;
  for (std::int64_t pos = -3 * K; pos < 3 * (K + 1); ++pos) {
    out.push_back(CoverVertex::at_position(pos));
  }
  return out;
}

bool cover_adjacent(const CoverVertex& a, const CoverVertex& b) {
  const auto d = a.position() - b.position();
  return d == 1 || d == -1;
}

CoverVertex deck_act(const DeckElement& d, const CoverVertex& v) {
  return {v.label, v.k + d.j};
}

Chamber covering_map(const CoverVertex& v) { return chamber_of(v.label); }

}  // namespace cactus
