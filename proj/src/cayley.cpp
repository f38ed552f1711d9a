#include "cactus/cayley.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace cactus {

std::string to_string(CayleyGroup g) {
  return g == CayleyGroup::J3 ? "J3" : "J3_2";
}

CayleyGroup parse_cayley_group(std::string_view text) {
  if (text == "J3") return CayleyGroup::J3;
  if (text == "J3_2") return CayleyGroup::J3_2;
  throw Error("unknown group '" + std::string(text) + "' (expected J3 or J3_2)");
}

std::vector<Generator> cayley_generators(CayleyGroup g) {
  if (g == CayleyGroup::J3) return {s12(), s23(), s13()};
  return {s12(), s23()};
}

std::size_t CayleyGraph::index_of(const CanonicalJ3& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) {
    throw Error("vertex " + v.to_string() + " is not in the window");
  }
  return static_cast<std::size_t>(it - vertices.begin());
}

std::size_t CayleyGraph::degree(const CanonicalJ3& v) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [&](const CayleyEdge& e) {
        return e.source == v || e.target == v;
      }));
}

CayleyGraph build_window(CayleyGroup group, std::int64_t radius) {
  if (radius < 0) throw Error("radius must be non-negative");
  CayleyGraph g;
  g.group = group;
  g.radius = radius;
  const int max_eps = group == CayleyGroup::J3 ? 1 : 0;
  for (std::int64_t m = -radius; m <= radius; ++m) {
    for (int eps = 0; eps <= max_eps; ++eps) {
      const CanonicalJ3 v{m, eps};
      if (v.length() <= radius) g.vertices.push_back(v);
    }
  }
  std::sort(g.vertices.begin(), g.vertices.end());
  const auto gens = cayley_generators(group);
  for (const auto& v : g.vertices) {
    for (const auto& gen : gens) {
      const auto t = mul(v, from_generator(gen));
      if (v < t && t.length() <= radius) g.edges.push_back({v, t, gen});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const CayleyEdge& a, const CayleyEdge& b) {
              return std::tie(a.source, a.target) < std::tie(b.source, b.target);
            });
  return g;
}

std::string vertex_label(const CanonicalJ3& v) {
  return v == CanonicalJ3::identity() ? "e" : to_word(v).to_string();
}

std::string export_dot(const CayleyGraph& g) {
  std::ostringstream out;
  out << "graph " << to_string(g.group) << " {\n";
  for (const auto& v : g.vertices) {
    out << "  \"" << v.to_string() << "\" [label=\"" << vertex_label(v)
        << "\"];\n";
  }
  for (const auto& e : g.edges) {
    out << "  \"" << e.source.to_string() << "\" -- \"" << e.target.to_string()
        << "\" [label=\"" << e.generator.to_string() << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const CayleyGraph& g) {
  nlohmann::ordered_json doc;
  doc["group"] = to_string(g.group);
  doc["radius"] = g.radius;
  auto nodes = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    nodes.push_back({{"id", i},
                     {"m", v.m},
                     {"eps", v.eps},
                     {"label", vertex_label(v)}});
  }
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"src", g.index_of(e.source)},
                     {"dst", g.index_of(e.target)},
                     {"gen", e.generator.to_string()}});
  }
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

}  // namespace cactus
