#pragma once

// Conway spheres of a slalom knot and its arborescent description.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "slalom/tree.hpp"

namespace slalom {

struct DecompositionReport {
  std::vector<Edge> conway_edges;
  std::vector<Edge> bs_edges;
  std::vector<std::vector<int>> pieces;  // vertex sets, each sorted
};

/// Every edge carries a Conway sphere; the Bonahon-Siebenmann ones are those
/// with an endpoint of valency >= 3 or an endpoint at the root.
inline DecompositionReport conway_decomposition(const RootedPlanarTree& tree) {
  if (tree.vertex_count() < 2) throw StructuralError("decomposition needs at least one edge");
  DecompositionReport r;
  r.conway_edges = tree.edges();
  for (auto [p, c] : r.conway_edges)
    if (p == tree.root() || c == tree.root() || tree.valency(p) >= 3 || tree.valency(c) >= 3) r.bs_edges.emplace_back(p, c);

  const int n = tree.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  auto cut = [&](int c) {
    return std::find(r.bs_edges.begin(), r.bs_edges.end(), Edge{tree.parent(c), c}) != r.bs_edges.end();
  };
  // Children are numbered after their parents, so one forward pass suffices.
  for (int v = 0; v < n; ++v) {
    if (v == tree.root() || cut(v)) {
      comp[static_cast<std::size_t>(v)] = static_cast<int>(r.pieces.size());
      r.pieces.push_back({v});
    } else {
      int k = comp[static_cast<std::size_t>(tree.parent(v))];
      comp[static_cast<std::size_t>(v)] = k;
      r.pieces[static_cast<std::size_t>(k)].push_back(v);
    }
  }
  return r;
}

struct ArborescentNotation {
  std::string expression;
  std::vector<int> weights;  // one per Dynkin vertex
};

/// "(w child child ...)" read from the Dynkin root, children in planar order.
inline ArborescentNotation arborescent_notation(const DynkinTree& delta) {
  ArborescentNotation a;
  a.weights.assign(static_cast<std::size_t>(delta.size()), 2);
  std::function<void(int, int)> emit = [&](int v, int from) {
    a.expression += "(" + std::to_string(a.weights[static_cast<std::size_t>(v)]);
    for (int c : delta.children(v, from)) {
      a.expression += ' ';
      emit(c, v);
    }
    a.expression += ')';
  };
  emit(delta.root(), -1);
  return a;
}

/// Table names known for a few small slalom knots.
inline std::optional<std::string> known_identification(const RootedPlanarTree& tree) {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"[0]", "torus knot (2,3), trefoil"},
      {"[0,1,2,2]", "10_139 = Montesinos knot M(1,(3,1),(3,1),(4,1))"},
  };
  const std::string sig = rooted_signature(tree);
  for (const auto& [code, name] : table)
    if (rooted_signature(parse_cayley(code)) == sig) return name;
  return std::nullopt;
}

}  // namespace slalom
