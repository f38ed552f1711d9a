#include "cactus/j3.hpp"

#include <functional>
#include <map>
#include <regex>

namespace cactus {

std::string VerificationReport::to_text() const {
  std::string out;
  for (const auto& f : failures) out += f + "\n";
  if (ok()) {
    out += "OK " + std::to_string(total) + " cases\n";
  } else {
    out += "FAIL " + std::to_string(failures.size()) + "/" +
           std::to_string(total) + "\n";
  }
  return out;
}

std::string CanonicalJ3::to_string() const {
  return "(m=" + std::to_string(m) + ", eps=" + std::to_string(eps) + ")";
}

CanonicalJ3 parse_canonical(const std::string& text) {
  static const std::regex re(R"(\s*\(m=(-?\d+), eps=([01])\)\s*)");
  std::smatch match;
  if (!std::regex_match(text, match, re)) {
    throw ParseError("expected (m=<int>, eps=<0|1>), got '" + text + "'", 0);
  }
  return {std::stoll(match[1].str()), std::stoi(match[2].str())};
}

Generator s12() { return Generator(1, 2, 3); }
Generator s23() { return Generator(2, 3, 3); }
Generator s13() { return Generator(1, 3, 3); }

namespace {

void require_degree3(const Word& w) {
  if (w.degree() != 3) {
    throw DegreeMismatch("J_3 arithmetic needs a degree-3 word, got degree " +
                         std::to_string(w.degree()));
  }
}

bool is_odd(std::int64_t x) { return (x % 2) != 0; }

}  // namespace

CanonicalJ3 canonicalize(const Word& w) {
  require_degree3(w);
  // Reduced {s12, s23} prefix; an s13 carried past a letter swaps it.
  std::vector<bool> prefix;  // true = s12, false = s23
  bool carried_s13 = false;
  for (const auto& g : w.letters()) {
    if (g.span_length() == 3) {
      carried_s13 = !carried_s13;
      continue;
    }
    bool is_s12 = (g.p() == 1);
    if (carried_s13) is_s12 = !is_s12;
    if (!prefix.empty() && prefix.back() == is_s12) {
      prefix.pop_back();
    } else {
      prefix.push_back(is_s12);
    }
  }
  const auto len = static_cast<std::int64_t>(prefix.size());
  CanonicalJ3 out;
  out.m = prefix.empty() ? 0 : (prefix.front() ? len : -len);
  out.eps = carried_s13 ? 1 : 0;
  return out;
}

CanonicalJ3 from_index(std::int64_t m) { return {m, 0}; }

CanonicalJ3 from_generator(const Generator& g) {
  if (g.degree() != 3) {
    throw DegreeMismatch("not a J_3 generator: " + g.to_string());
  }
  if (g.span_length() == 3) return {0, 1};
  return {g.p() == 1 ? 1 : -1, 0};
}

Word to_word(const CanonicalJ3& c) {
  std::vector<Generator> letters;
  const std::int64_t len = c.m < 0 ? -c.m : c.m;
  bool next_is_s12 = c.m > 0;
  for (std::int64_t i = 0; i < len; ++i) {
    letters.push_back(next_is_s12 ? s12() : s23());
    next_is_s12 = !next_is_s12;
  }
  if (c.eps) letters.push_back(s13());
  return Word(3, std::move(letters));
}

// A(m1) s13^e1 A(m2) s13^e2 = A(m1) A(+-m2) s13^(e1+e2), and in the infinite
// dihedral group A(m1) A(x) = A(m1 + (-1)^m1 x).
CanonicalJ3 mul(const CanonicalJ3& a, const CanonicalJ3& b) {
  const bool flip = is_odd(a.m) != (a.eps == 1);
  return {a.m + (flip ? -b.m : b.m), a.eps ^ b.eps};
}

CanonicalJ3 inv(const CanonicalJ3& c) {
  // Odd A(m) is a reflection (self-inverse); even A(m) is a translation.
  std::int64_t m = is_odd(c.m) ? c.m : -c.m;
  if (c.eps) m = -m;
  return {m, c.eps};
}

bool in_subgroup_2(const CanonicalJ3& c) { return c.eps == 0; }

CanonicalJ3 pure_element(std::int64_t k) {
  return {3 * k, is_odd(k) ? 1 : 0};
}

AffineModelElement AffineModelElement::then(
    const AffineModelElement& next) const {
  return {sign * next.sign, next.sign * shift + next.shift};
}

std::string AffineModelElement::to_string() const {
  std::string out = sign > 0 ? "x" : "-x";
  if (shift > 0) out += " + " + std::to_string(shift);
  if (shift < 0) out += " - " + std::to_string(-shift);
  return "x -> " + out;
}

AffineModelElement affine_model(const Generator& g) {
  if (g.degree() != 3) {
    throw DegreeMismatch("not a J_3 generator: " + g.to_string());
  }
  // Reflections of Z about 0, 1/2 and 1.
  if (g.p() == 1 && g.q() == 2) return {-1, 0};
  if (g.p() == 1 && g.q() == 3) return {-1, 1};
  return {-1, 2};
}

AffineModelElement evaluate_word(const Word& w) {
  require_degree3(w);
  auto acc = AffineModelElement::identity();
  for (const auto& g : w.letters()) acc = acc.then(affine_model(g));
  return acc;
}

std::vector<Word> j3_relators() {
  const Word a(3, {s12()}), b(3, {s23()}), c(3, {s13()});
  return {
      a * a,
      b * b,
      c * c,
      a * c * (c * b).inverse(),  // s12 s13 = s13 s23
      b * c * (c * a).inverse(),  // s23 s13 = s13 s12
  };
}

namespace {

void for_each_word(std::size_t max_length,
                   const std::function<void(const Word&)>& visit) {
  const std::vector<Generator> gens = {s12(), s23(), s13()};
  std::vector<Generator> letters;
  std::function<void()> rec = [&] {
    visit(Word(3, letters));
    if (letters.size() == max_length) return;
    for (const auto& g : gens) {
      letters.push_back(g);
      rec();
      letters.pop_back();
    }
  };
  rec();
}

}  // namespace

VerificationReport verify_affine_oracle(std::size_t max_length) {
  VerificationReport report;
  for (const auto& r : j3_relators()) {
    ++report.total;
    const auto image = evaluate_word(r);
    if (image != AffineModelElement::identity()) {
      report.failures.push_back("FAIL relator=" + r.to_string() +
                                " image=" + image.to_string());
    }
  }
  // canonical form -> (affine image, witness word), and the reverse map;
  // both must stay functions for the equivalence to hold.
  std::map<CanonicalJ3, std::pair<AffineModelElement, Word>> by_canon;
  std::map<AffineModelElement, std::pair<CanonicalJ3, Word>> by_affine;
  for_each_word(max_length, [&](const Word& w) {
    ++report.total;
    const auto canon = canonicalize(w);
    const auto image = evaluate_word(w);
    auto [it, fresh] = by_canon.try_emplace(canon, image, w);
    if (!fresh && it->second.first != image) {
      report.failures.push_back(
          "FAIL w1=" + it->second.second.to_string() + " w2=" + w.to_string() +
          " canon=" + canon.to_string() + " affine differs");
    }
    auto [jt, fresh2] = by_affine.try_emplace(image, canon, w);
    if (!fresh2 && jt->second.first != canon) {
      report.failures.push_back(
          "FAIL w1=" + jt->second.second.to_string() + " w2=" + w.to_string() +
          " affine=" + image.to_string() + " canon differs");
    }
  });
  return report;
}

}  // namespace cactus
