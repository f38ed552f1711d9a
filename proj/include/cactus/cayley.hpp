#pragma once

// Finite windows of the Cayley graphs of J_3 and J_3^{2}. Only the
// 1-skeleton is built: the 2-cells of these presentations are the bigons of
// the involution relators, and each doubled edge is stored once.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cactus/j3.hpp"

namespace cactus {

enum class CayleyGroup { J3, J3_2 };

std::string to_string(CayleyGroup g);
// Accepts "J3" and "J3_2"; throws Error otherwise.
CayleyGroup parse_cayley_group(std::string_view text);

// Generating set used for edges: {s12, s23} for J3_2, plus s13 for J3.
std::vector<Generator> cayley_generators(CayleyGroup g);

struct CayleyEdge {
  CanonicalJ3 source;  // source < target
  CanonicalJ3 target;
  Generator generator;  // target = source * generator

  friend bool operator==(const CayleyEdge&, const CayleyEdge&) = default;
};

struct CayleyGraph {
  CayleyGroup group = CayleyGroup::J3_2;
  std::int64_t radius = 0;
  std::vector<CanonicalJ3> vertices;  // sorted by (m, eps)
  std::vector<CayleyEdge> edges;      // sorted by (source, target)

  std::size_t index_of(const CanonicalJ3& v) const;  // throws Error if absent
  std::size_t degree(const CanonicalJ3& v) const;
};

// Vertices: all elements with |m| + eps <= radius. Edges: right
// multiplication by a generator, kept when both ends are in the window.
// Throws Error for a negative radius.
CayleyGraph build_window(CayleyGroup group, std::int64_t radius);

// Node text label: the canonical word, or "e" for the identity.
std::string vertex_label(const CanonicalJ3& v);

// Undirected DOT graph; node names are canonical-form text.
std::string export_dot(const CayleyGraph& g);
// {"group", "radius", "nodes": [{"id","m","eps","label"}],
//  "edges": [{"src","dst","gen"}]}; ids index the sorted vertex list.
std::string export_json(const CayleyGraph& g);

}  // namespace cactus
