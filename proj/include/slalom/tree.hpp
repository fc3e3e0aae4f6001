#pragma once

// Rooted planar trees, their Cayley codes and Dynkin diagrams.
//
// A Cayley code lists parents: entry k (0-based) is the parent of vertex k+1,
// and vertex 0 is the root, which sits on the boundary of the disk. The root
// must be terminal, so the code starts with 0 and no later entry is 0.
//
//   [0,1,1,2]   -> edges (0,1) (1,2) (1,3) (2,4)
//   [0]         -> the single edge (0,1)

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <numeric>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slalom/errors.hpp"

namespace slalom {

using Edge = std::pair<int, int>;

struct CayleyCode {
  std::vector<int> entries;

  std::size_t size() const { return entries.size(); }
  auto operator<=>(const CayleyCode&) const = default;

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(entries[i]);
    }
    return out + "]";
  }

  /// Reads "[0,1,1,2]"; whitespace is ignored and the brackets are optional.
  /// Only syntax is checked here, see parse_cayley for the tree conditions.
  static CayleyCode from_string(std::string_view text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (!s.empty() && s.front() == '[') {
      if (s.back() != ']') throw ParseError(0, "missing closing ']'");
      s = s.substr(1, s.size() - 2);
    } else if (!s.empty() && s.back() == ']') {
      throw ParseError(0, "missing opening '['");
    }
    CayleyCode code;
    if (s.empty()) return code;
    std::size_t pos = 1, start = 0;
    while (true) {
      std::size_t comma = s.find(',', start);
      std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (item.empty()) throw ParseError(pos, "empty entry");
      if (!std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError(pos, "'" + item + "' is not a non-negative integer");
      if (item.size() > 6) throw ParseError(pos, "entry too large");
      code.entries.push_back(std::stoi(item));
      if (comma == std::string::npos) break;
      start = comma + 1;
      ++pos;
    }
    return code;
  }
};

class RootedPlanarTree {
 public:
  /// `parent[0]` must be -1. Children are kept in index order.
  static RootedPlanarTree from_parents(std::vector<int> parent) {
    RootedPlanarTree t;
    t.parent_ = std::move(parent);
    t.children_.assign(t.parent_.size(), {});
    for (std::size_t v = 1; v < t.parent_.size(); ++v)
      t.children_[static_cast<std::size_t>(t.parent_[v])].push_back(static_cast<int>(v));
    return t;
  }

  /// Same shape with children reordered; `order[v]` must be a permutation of children(v).
  RootedPlanarTree with_child_order(std::vector<std::vector<int>> order) const {
    RootedPlanarTree t = *this;
    t.children_ = std::move(order);
    return t;
  }

  int vertex_count() const { return static_cast<int>(parent_.size()); }
  int edge_count() const { return vertex_count() - 1; }
  int root() const { return 0; }
  int parent(int v) const { return parent_.at(static_cast<std::size_t>(v)); }
  std::span<const int> children(int v) const { return children_.at(static_cast<std::size_t>(v)); }

  int valency(int v) const {
    return static_cast<int>(children(v).size()) + (v == root() ? 0 : 1);
  }

  /// Edges (parent, child), one per non-root vertex, listed by child index.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int v = 1; v < vertex_count(); ++v) out.emplace_back(parent(v), v);
    return out;
  }

  int depth(int v) const {
    int d = 0;
    while (v != root()) v = parent(v), ++d;
    return d;
  }

  /// Incident neighbours of a non-root vertex in counter-clockwise order,
  /// starting with the parent. Children are drawn left to right in planar
  /// order above their parent, so counter-clockwise visits them in reverse.
  std::vector<int> ccw_neighbours(int v) const {
    std::vector<int> out;
    if (v != root()) out.push_back(parent(v));
    auto ch = children(v);
    out.insert(out.end(), ch.rbegin(), ch.rend());
    return out;
  }

  bool operator==(const RootedPlanarTree&) const = default;

 private:
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
};

inline RootedPlanarTree parse_cayley(const CayleyCode& code) {
  const auto& e = code.entries;
  if (e.empty()) throw ParseError(0, "empty code");
  if (e[0] != 0) throw ParseError(1, "first entry must be 0 (vertex 1 hangs from the root)");
  std::vector<int> parent{-1};
  for (std::size_t k = 0; k < e.size(); ++k) {
    const int vertex = static_cast<int>(k) + 1;
    if (e[k] < 0) throw ParseError(k + 1, "negative entry");
    if (e[k] >= vertex)
      throw ParseError(k + 1, "forward parent reference " + std::to_string(e[k]) + " for vertex " +
                                  std::to_string(vertex));
    if (k > 0 && e[k] == 0) throw ParseError(k + 1, "root must be a terminal vertex");
    parent.push_back(e[k]);
  }
  return RootedPlanarTree::from_parents(std::move(parent));
}

inline RootedPlanarTree parse_cayley(std::string_view text) {
  return parse_cayley(CayleyCode::from_string(text));
}

/// Breadth-first relabelling in planar order; the inverse of parse_cayley on
/// codes with non-decreasing entries.
inline CayleyCode encode_cayley(const RootedPlanarTree& tree) {
  std::vector<int> label(static_cast<std::size_t>(tree.vertex_count()), -1);
  std::vector<int> order;
  std::queue<int> q;
  q.push(tree.root());
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    label[static_cast<std::size_t>(v)] = static_cast<int>(order.size());
    order.push_back(v);
    for (int c : tree.children(v)) q.push(c);
  }
  CayleyCode code;
  for (std::size_t i = 1; i < order.size(); ++i)
    code.entries.push_back(label[static_cast<std::size_t>(tree.parent(order[i]))]);
  return code;
}

/// AHU-style signature; equal iff the rooted trees are isomorphic (ignoring planar order).
inline std::string rooted_signature(const RootedPlanarTree& tree, int v) {
  std::vector<std::string> parts;
  for (int c : tree.children(v)) parts.push_back(rooted_signature(tree, c));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (auto& p : parts) s += p;
  return s + ")";
}

inline std::string rooted_signature(const RootedPlanarTree& tree) {
  return rooted_signature(tree, tree.root());
}

// ---------------------------------------------------------------------------
// Dynkin diagrams

enum class Color { New, Old };

/// Bicolored tree. Vertices of colour New come first (indices 0..new_count-1).
///
/// For a diagram built by dynkin_of, new vertex i sits on the edge into B-vertex
/// i+1 and old vertex new_count+i is B-vertex i+1.
class DynkinTree {
 public:
  /// Any tree given by edges; colours come from a 2-colouring that makes
  /// vertex `root` new, and vertices are renumbered new-first.
  static DynkinTree from_edges(int n, const std::vector<Edge>& edges, int root = 0) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [a, b] : edges) {
      adj.at(static_cast<std::size_t>(a)).push_back(b);
      adj.at(static_cast<std::size_t>(b)).push_back(a);
    }
    if (static_cast<int>(edges.size()) != n - 1) throw StructuralError("not a tree: wrong edge count");
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> stack{root};
    color[static_cast<std::size_t>(root)] = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (color[static_cast<std::size_t>(w)] < 0) {
          color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
          stack.push_back(w);
        }
      }
    }
    if (std::count(color.begin(), color.end(), -1)) throw StructuralError("not a tree: disconnected");
    std::vector<int> relabel(static_cast<std::size_t>(n));
    int next = 0;
    for (int pass = 0; pass < 2; ++pass)
      for (int v = 0; v < n; ++v)
        if (color[static_cast<std::size_t>(v)] == pass) relabel[static_cast<std::size_t>(v)] = next++;
    DynkinTree d;
    d.new_count_ = static_cast<int>(std::count(color.begin(), color.end(), 0));
    d.adj_.assign(static_cast<std::size_t>(n), {});
    d.source_.assign(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v)
      for (int w : adj[static_cast<std::size_t>(v)])
        d.adj_[static_cast<std::size_t>(relabel[static_cast<std::size_t>(v)])].push_back(
            relabel[static_cast<std::size_t>(w)]);
    for (int v = 0; v < n; ++v) d.source_[static_cast<std::size_t>(relabel[static_cast<std::size_t>(v)])] = v;
    d.root_ = relabel[static_cast<std::size_t>(root)];
    return d;
  }

  int size() const { return static_cast<int>(adj_.size()); }
  int new_count() const { return new_count_; }
  Color color(int v) const { return v < new_count_ ? Color::New : Color::Old; }
  int root() const { return root_; }
  std::span<const int> neighbours(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbours(v).size()); }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }

  /// The B-edge (by its child vertex) for new vertices, the B-vertex for old
  /// ones; for diagrams from from_edges, the caller's vertex id.
  int source(int v) const { return source_.at(static_cast<std::size_t>(v)); }

  bool adjacent(int a, int b) const {
    auto nb = neighbours(a);
    return std::find(nb.begin(), nb.end(), b) != nb.end();
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < size(); ++v)
      for (int w : neighbours(v))
        if (v < w) out.emplace_back(v, w);
    return out;
  }

  /// "s<c>" for the square on the edge into c, "r<v>" for the region of v.
  std::string label(int v) const {
    return (color(v) == Color::New ? "s" : "r") + std::to_string(source(v));
  }

  /// Neighbours other than `from`, i.e. the children when hanging the tree at the root.
  std::vector<int> children(int v, int from) const {
    std::vector<int> out;
    for (int w : neighbours(v))
      if (w != from) out.push_back(w);
    return out;
  }

 private:
  friend DynkinTree dynkin_of(const RootedPlanarTree&);
  std::vector<std::vector<int>> adj_;
  std::vector<int> source_;
  int new_count_ = 0;
  int root_ = 0;
};

/// Subdivide every edge of B by a new vertex, then drop the root and the half
/// edge pointing to it. Neighbour lists follow the planar order of B.
inline DynkinTree dynkin_of(const RootedPlanarTree& tree) {
  const int n = tree.vertex_count();
  if (n < 2) throw StructuralError("Dynkin diagram needs at least one edge");
  const int m = n - 1;
  auto new_of = [](int child) { return child - 1; };
  auto old_of = [m](int v) { return m + v - 1; };
  DynkinTree d;
  d.new_count_ = m;
  d.adj_.assign(static_cast<std::size_t>(2 * m), {});
  d.source_.assign(static_cast<std::size_t>(2 * m), 0);
  for (int v = 1; v < n; ++v) {
    d.source_[static_cast<std::size_t>(new_of(v))] = v;
    d.source_[static_cast<std::size_t>(old_of(v))] = v;
  }
  for (int c = 1; c < n; ++c) {
    auto& sq = d.adj_[static_cast<std::size_t>(new_of(c))];
    if (tree.parent(c) != tree.root()) sq.push_back(old_of(tree.parent(c)));
    sq.push_back(old_of(c));
    auto& rg = d.adj_[static_cast<std::size_t>(old_of(c))];
    rg.push_back(new_of(c));
    for (int g : tree.children(c)) rg.push_back(new_of(g));
  }
  d.root_ = new_of(tree.children(tree.root()).front());
  return d;
}

}  // namespace slalom
