#pragma once

// Recognition of the simply-laced finite and affine Dynkin shapes among trees.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slalom/tree.hpp"

namespace slalom {

struct ShapeClass {
  enum class Kind { A, D, E6, E7, E8, AffineD, AffineE6, AffineE7, AffineE8, Wild };

  Kind kind = Kind::Wild;
  int n = 0;  // vertex count

  bool is_finite() const {
    return kind == Kind::A || kind == Kind::D || kind == Kind::E6 || kind == Kind::E7 || kind == Kind::E8;
  }
  bool is_affine() const {
    return kind == Kind::AffineD || kind == Kind::AffineE6 || kind == Kind::AffineE7 ||
           kind == Kind::AffineE8;
  }

  std::string label() const {
    switch (kind) {
      case Kind::A: return "A" + std::to_string(n);
      case Kind::D: return "D" + std::to_string(n);
      case Kind::E6: return "E6";
      case Kind::E7: return "E7";
      case Kind::E8: return "E8";
      case Kind::AffineD: return "~D" + std::to_string(n - 1);
      case Kind::AffineE6: return "~E6";
      case Kind::AffineE7: return "~E7";
      case Kind::AffineE8: return "~E8";
      case Kind::Wild: return "Wild";
    }
    return "Wild";
  }

  bool operator==(const ShapeClass&) const = default;
};

namespace detail {

// Length of the path hanging off `branch` through `first`, stopping at a leaf
// or at the next vertex of degree >= 3 (not counted).
inline int leg_length(const std::vector<std::vector<int>>& adj, int branch, int first, bool* hit_branch) {
  int prev = branch, cur = first, len = 0;
  *hit_branch = false;
  while (true) {
    if (adj[static_cast<std::size_t>(cur)].size() >= 3) {
      *hit_branch = true;
      return len;
    }
    ++len;
    if (adj[static_cast<std::size_t>(cur)].size() == 1) return len;
    int next = adj[static_cast<std::size_t>(cur)][0] == prev ? adj[static_cast<std::size_t>(cur)][1]
                                                             : adj[static_cast<std::size_t>(cur)][0];
    prev = cur;
    cur = next;
  }
}

}  // namespace detail

/// Classifies an unlabeled tree given by adjacency lists.
inline ShapeClass classify_shape(const std::vector<std::vector<int>>& adj) {
  using K = ShapeClass::Kind;
  const int n = static_cast<int>(adj.size());
  ShapeClass s{K::Wild, n};
  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    auto d = adj[static_cast<std::size_t>(v)].size();
    if (d > 4) return s;
    if (d >= 3) branch.push_back(v);
  }
  if (branch.empty()) return {K::A, n};

  if (branch.size() == 1) {
    const int c = branch[0];
    std::vector<int> legs;
    bool hit = false;
    for (int w : adj[static_cast<std::size_t>(c)]) legs.push_back(detail::leg_length(adj, c, w, &hit));
    std::sort(legs.begin(), legs.end());
    if (legs.size() == 4) return legs == std::vector<int>{1, 1, 1, 1} ? ShapeClass{K::AffineD, n} : s;
    if (legs[0] == 1 && legs[1] == 1) return {K::D, n};
    if (legs == std::vector<int>{1, 2, 2}) return {K::E6, n};
    if (legs == std::vector<int>{1, 2, 3}) return {K::E7, n};
    if (legs == std::vector<int>{1, 2, 4}) return {K::E8, n};
    if (legs == std::vector<int>{2, 2, 2}) return {K::AffineE6, n};
    if (legs == std::vector<int>{1, 3, 3}) return {K::AffineE7, n};
    if (legs == std::vector<int>{1, 2, 5}) return {K::AffineE8, n};
    return s;
  }

  if (branch.size() == 2) {
    // ~D_k: two trivalent vertices joined by a path, each carrying two leaves.
    for (int c : branch) {
      if (adj[static_cast<std::size_t>(c)].size() != 3) return s;
      int short_legs = 0;
      bool hit = false;
      for (int w : adj[static_cast<std::size_t>(c)]) {
        int len = detail::leg_length(adj, c, w, &hit);
        if (!hit && len == 1) ++short_legs;
      }
      if (short_legs != 2) return s;
    }
    return {K::AffineD, n};
  }
  return s;
}

inline ShapeClass classify_shape(const DynkinTree& delta) { return classify_shape(delta.adjacency()); }

struct HyperbolicityVerdict {
  bool hyperbolic = true;
  std::optional<std::pair<int, int>> torus;  // set when not hyperbolic

  std::string label() const {
    if (hyperbolic) return "hyperbolic";
    return "torus(" + std::to_string(torus->first) + "," + std::to_string(torus->second) + ")";
  }
};

/// The slalom knot fails to be hyperbolic exactly for the shapes A_{2k}, E6
/// and E8, where it is the torus knot (2,2k+1), (3,4) or (3,5).
inline HyperbolicityVerdict hyperbolicity_verdict(const ShapeClass& shape) {
  using K = ShapeClass::Kind;
  if (shape.kind == K::A && shape.n % 2 == 0) return {false, std::pair{2, shape.n + 1}};
  if (shape.kind == K::E6) return {false, std::pair{3, 4}};
  if (shape.kind == K::E8) return {false, std::pair{3, 5}};
  return {};
}

inline HyperbolicityVerdict hyperbolicity_verdict(const DynkinTree& delta) {
  return hyperbolicity_verdict(classify_shape(delta));
}

}  // namespace slalom
