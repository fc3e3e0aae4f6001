#pragma once

// The slalom divide of a rooted planar tree, kept as incidence data.
//
// The curve follows the contour of the tree and crosses itself once at the
// midpoint of every edge. Around the crossing on the edge (p, c), drawn with
// p below and c above, the four half-branches ("ports") are numbered
// counter-clockwise:
//
//        ChildLeft(2)   ChildRight(1)
//                  \     /
//                    X
//                  /     \   (parent side)
//       ParentLeft(3)   ParentRight(0)
//
// The strands run ParentLeft-ChildRight and ParentRight-ChildLeft. The four
// quadrants (between port q and q+1) face: 0 the outer region, 1 the region
// of c, 2 the outer region, 3 the region of p. The region of the root r
// touches the boundary of the disk; so does the outer region.

#include <array>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "slalom/errors.hpp"
#include "slalom/tree.hpp"

namespace slalom {

enum PortPos : int { ParentRight = 0, ChildRight = 1, ChildLeft = 2, ParentLeft = 3 };

/// Port id = 4 * (c - 1) + position, for the crossing on the edge into c.
inline int port_id(int child, int pos) { return 4 * (child - 1) + pos; }
inline int port_child(int port) { return port / 4 + 1; }
inline int port_pos(int port) { return port % 4; }
inline int opposite_port(int port) { return 4 * (port / 4) + (port % 4 + 2) % 4; }

struct Crossing {
  int parent;
  int child;
};

/// Piece of the curve running counter-clockwise around `vertex` from port
/// `from` to port `to`, between two consecutive incident edges.
struct Arc {
  int vertex;
  int from;
  int to;
};

struct Region {
  int id;      // the B-vertex it contains; vertex_count() for the outer region
  bool interior;
  std::vector<int> crossings;  // crossings on its boundary, by child vertex
};

struct CurveStep {
  enum class Kind { Cross, Arc };
  Kind kind;
  int index;  // child vertex of the crossing, or arc index
  int from;   // port where the step starts
  int to;     // port where the step ends
};

class SlalomDivide {
 public:
  const RootedPlanarTree& tree() const { return tree_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Region>& interior_regions() const { return interior_; }
  /// Regions meeting the boundary circle, counter-clockwise from the root:
  /// the root region, then the outer region.
  const std::vector<Region>& boundary_regions() const { return boundary_; }
  /// The curve from its first boundary endpoint to its second.
  const std::vector<CurveStep>& path() const { return path_; }
  int start_port() const { return port_id(1, ParentLeft); }
  int end_port() const { return port_id(1, ParentRight); }
  int outer_region() const { return tree_.vertex_count(); }

  /// Region facing quadrant q (between ports q and q+1) of the crossing into c.
  int quadrant_region(int child, int q) const {
    switch (q) {
      case 0:
      case 2: return outer_region();
      case 1: return child;
      default: return tree_.parent(child);
    }
  }

  /// Port of the edge `edge_child` next to vertex v on the left (or right)
  /// when looking outward from v along that edge.
  static int left_out(int v, int edge_child) {
    return edge_child == v ? port_id(edge_child, ChildRight) : port_id(edge_child, ParentLeft);
  }
  static int right_out(int v, int edge_child) {
    return edge_child == v ? port_id(edge_child, ChildLeft) : port_id(edge_child, ParentRight);
  }

  /// Incident edges of v (by child vertex) in counter-clockwise order.
  std::vector<int> ccw_edges(int v) const {
    std::vector<int> out;
    for (int w : tree_.ccw_neighbours(v)) out.push_back(w == tree_.parent(v) ? v : w);
    return out;
  }

  /// Arc leaving / entering each port; -1 for the two boundary ports.
  int arc_at(int port) const { return arc_at_[static_cast<std::size_t>(port)]; }

 private:
  friend SlalomDivide build_divide(const RootedPlanarTree&);
  RootedPlanarTree tree_;
  std::vector<Crossing> crossings_;
  std::vector<Arc> arcs_;
  std::vector<Region> interior_;
  std::vector<Region> boundary_;
  std::vector<CurveStep> path_;
  std::vector<int> arc_at_;
};

inline SlalomDivide build_divide(const RootedPlanarTree& tree) {
  const int n = tree.vertex_count();
  if (n < 2) throw StructuralError("a slalom divide needs at least one edge");
  if (tree.valency(tree.root()) != 1) throw StructuralError("root must be terminal");
  SlalomDivide d;
  d.tree_ = tree;
  for (auto [p, c] : tree.edges()) d.crossings_.push_back({p, c});

  d.arc_at_.assign(static_cast<std::size_t>(4 * (n - 1)), -1);
  for (int v = 1; v < n; ++v) {
    auto es = d.ccw_edges(v);
    for (std::size_t i = 0; i < es.size(); ++i) {
      int e = es[i], f = es[(i + 1) % es.size()];
      Arc a{v, SlalomDivide::left_out(v, e), SlalomDivide::right_out(v, f)};
      d.arc_at_[static_cast<std::size_t>(a.from)] = static_cast<int>(d.arcs_.size());
      d.arc_at_[static_cast<std::size_t>(a.to)] = static_cast<int>(d.arcs_.size());
      d.arcs_.push_back(a);
    }
  }

  std::map<int, Region> regions;
  for (int v = 0; v <= n; ++v) regions[v] = Region{v, v != 0 && v != n, {}};
  for (const auto& x : d.crossings_)
    for (int q = 0; q < 4; ++q) {
      auto& cs = regions[d.quadrant_region(x.child, q)].crossings;
      if (cs.empty() || cs.back() != x.child) cs.push_back(x.child);
    }
  for (int v = 1; v < n; ++v) d.interior_.push_back(regions[v]);
  d.boundary_ = {regions[0], regions[n]};

  int cur = d.start_port();
  for (std::size_t guard = 0; guard <= 4 * static_cast<std::size_t>(n); ++guard) {
    int next = opposite_port(cur);
    d.path_.push_back({CurveStep::Kind::Cross, port_child(cur), cur, next});
    if (next == d.end_port()) break;
    int ai = d.arc_at(next);
    if (ai < 0) throw StructuralError("curve reached a boundary port early");
    const Arc& a = d.arcs_[static_cast<std::size_t>(ai)];
    int other = a.from == next ? a.to : a.from;
    d.path_.push_back({CurveStep::Kind::Arc, ai, next, other});
    cur = other;
  }
  if (d.path_.back().to != d.end_port()) throw StructuralError("curve does not close up");
  return d;
}

/// Every double point is a crossing with a tree edge; sum check and
/// connectivity of the region/crossing incidence.
inline void check_divide(const SlalomDivide& d) {
  const int n = d.tree().vertex_count();
  if (static_cast<int>(d.crossings().size()) != n - 1) throw StructuralError("crossing count");
  if (static_cast<int>(d.interior_regions().size()) != n - 1) throw StructuralError("interior region count");
  std::vector<int> passes(d.crossings().size(), 0);
  for (const auto& s : d.path())
    if (s.kind == CurveStep::Kind::Cross) ++passes[static_cast<std::size_t>(s.index - 1)];
  for (int p : passes)
    if (p != 2) throw StructuralError("each crossing must be passed twice");
  // Incidence graph: regions 0..n, crossings n+1..2n-1.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(2 * n));
  for (const auto& x : d.crossings())
    for (int q = 0; q < 4; ++q) {
      int r = d.quadrant_region(x.child, q);
      adj[static_cast<std::size_t>(r)].push_back(n + x.child);
      adj[static_cast<std::size_t>(n + x.child)].push_back(r);
    }
  std::vector<bool> seen(adj.size(), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) seen[static_cast<std::size_t>(w)] = true, q.push(w);
  }
  if (std::count(seen.begin(), seen.end(), false)) throw StructuralError("divide is not connected");
}

/// Unknotting number of the slalom knot: the number of double points.
inline int gordian_number(const SlalomDivide& d) { return static_cast<int>(d.crossings().size()); }

// ---------------------------------------------------------------------------
// The trivalent graph obtained by replacing each double point by a square.

struct GammaEdge {
  enum class Kind { Square, Arc };
  int a;
  int b;
  Kind kind;
};

class GammaGraph {
 public:
  static constexpr int kStub = -1;

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  const std::vector<GammaEdge>& edges() const { return edges_; }
  /// Incident edges in counter-clockwise order of the plane; kStub marks the
  /// half-edge running to the boundary of the disk.
  const std::array<int, 3>& rotation(int v) const { return rotation_[static_cast<std::size_t>(v)]; }
  /// Whether the ribbon structure at v agrees with the plane orientation.
  bool agrees(int v) const { return agrees_[static_cast<std::size_t>(v)]; }
  int cycle_rank() const { return static_cast<int>(edges_.size()) - vertex_count() + 1; }

  /// Square edge between ports q and q+1 of the crossing into c.
  static int square_edge(int child, int q) { return 4 * (child - 1) + (q % 4 + 4) % 4; }
  int arc_edge(int arc) const { return 4 * crossing_count_ + arc; }

  int other_end(int e, int v) const {
    const auto& ed = edges_[static_cast<std::size_t>(e)];
    return ed.a == v ? ed.b : ed.a;
  }

  /// Circuit around the square of the crossing into c.
  std::vector<int> square_circuit(int child) const {
    return {square_edge(child, 0), square_edge(child, 1), square_edge(child, 2), square_edge(child, 3)};
  }

  /// Circuit around the interior region of v.
  std::vector<int> region_circuit(const SlalomDivide& d, int v) const {
    std::vector<int> out;
    for (int e : d.ccw_edges(v)) {
      out.push_back(e == v ? square_edge(e, 1) : square_edge(e, 3));
      out.push_back(arc_edge(d.arc_at(SlalomDivide::left_out(v, e))));
    }
    return out;
  }

 private:
  friend GammaGraph gamma_graph(const SlalomDivide&);
  int crossing_count_ = 0;
  std::vector<GammaEdge> edges_;
  std::vector<std::array<int, 3>> rotation_;
  std::vector<bool> agrees_;
};

inline GammaGraph gamma_graph(const SlalomDivide& d) {
  GammaGraph g;
  const int m = static_cast<int>(d.crossings().size());
  g.crossing_count_ = m;
  for (int c = 1; c <= m; ++c)
    for (int q = 0; q < 4; ++q) g.edges_.push_back({port_id(c, q), port_id(c, (q + 1) % 4), GammaEdge::Kind::Square});
  for (const auto& a : d.arcs()) g.edges_.push_back({a.from, a.to, GammaEdge::Kind::Arc});

  // Seen from a port, the branch leaves radially outward and the square edges
  // towards the counter-clockwise and clockwise neighbours follow in that
  // order around the plane.
  g.rotation_.resize(static_cast<std::size_t>(4 * m));
  for (int p = 0; p < 4 * m; ++p) {
    int c = port_child(p), q = port_pos(p);
    int ai = d.arc_at(p);
    g.rotation_[static_cast<std::size_t>(p)] = {ai < 0 ? GammaGraph::kStub : g.arc_edge(ai),
                                                GammaGraph::square_edge(c, q), GammaGraph::square_edge(c, q - 1)};
  }

  // Alternating flags: a proper 2-colouring, which exists iff all circuits are even.
  std::vector<int> color(static_cast<std::size_t>(4 * m), -1);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(4 * m));
  for (const auto& e : g.edges_) {
    adj[static_cast<std::size_t>(e.a)].push_back(e.b);
    adj[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  for (int s = 0; s < 4 * m; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        auto& cw = color[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - color[static_cast<std::size_t>(v)];
          q.push(w);
        } else if (cw == color[static_cast<std::size_t>(v)]) {
          throw StructuralError("gamma graph has an odd circuit");
        }
      }
    }
  }
  for (int c : color) g.agrees_.push_back(c == 0);
  return g;
}

struct FiberSurface {
  int first_betti = 0;
  int boundary_components = 0;
  int genus = 0;
};

/// Number of boundary curves of the ribbon surface, by tracing faces. With
/// `twisted` false the flags are ignored and the plane thickening is traced.
inline int count_ribbon_boundaries(const GammaGraph& g, bool twisted = true) {
  const int nv = g.vertex_count();
  // Dart (v, s): slot s of the effective rotation at v.
  auto effective = [&](int v) {
    auto r = g.rotation(v);
    if (twisted && !g.agrees(v)) std::swap(r[1], r[2]);
    return r;
  };
  std::vector<std::array<int, 3>> rot(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) rot[static_cast<std::size_t>(v)] = effective(v);
  auto slot_of = [&](int v, int e) {
    for (int s = 0; s < 3; ++s)
      if (rot[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)] == e) return s;
    throw StructuralError("edge missing from rotation");
  };
  std::vector<bool> used(static_cast<std::size_t>(3 * nv), false);
  int faces = 0;
  for (int start = 0; start < 3 * nv; ++start) {
    if (used[static_cast<std::size_t>(start)]) continue;
    ++faces;
    int dart = start;
    while (!used[static_cast<std::size_t>(dart)]) {
      used[static_cast<std::size_t>(dart)] = true;
      int v = dart / 3, s = dart % 3;
      int e = rot[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)];
      int w = v, ws = s;
      if (e != GammaGraph::kStub) {
        w = g.other_end(e, v);
        ws = slot_of(w, e);
      }
      dart = 3 * w + (ws + 1) % 3;
    }
  }
  return faces;
}

inline FiberSurface fiber_surface(const GammaGraph& g) {
  FiberSurface f;
  f.first_betti = g.cycle_rank();
  f.boundary_components = count_ribbon_boundaries(g);
  if (f.boundary_components != 1)
    throw StructuralError("ribbon surface has " + std::to_string(f.boundary_components) +
                          " boundary components, expected 1");
  f.genus = (f.first_betti + 1 - f.boundary_components) / 2;
  return f;
}

// ---------------------------------------------------------------------------
// Monodromy as a product of right Dehn twists.

struct Twist {
  int dynkin_vertex;
  std::string label;
  std::vector<int> circuit;  // edges of the gamma graph
};

struct TwistWord {
  std::vector<Twist> twists;
  std::vector<std::vector<int>> intersections;  // geometric intersection numbers

  int size() const { return static_cast<int>(twists.size()); }

  std::vector<Edge> intersection_graph() const {
    std::vector<Edge> out;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (intersections[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] > 0) out.emplace_back(i, j);
    return out;
  }

  int intersection_points() const {
    int total = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j) total += intersections[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return total;
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& t : twists) out.push_back(t.label);
    return out;
  }
};

/// Square twists in code order, then region twists in code order; the
/// indices coincide with those of dynkin_of. Two core curves meet once on
/// the fiber for every gamma edge their circuits share.
inline TwistWord monodromy_word(const SlalomDivide& d) {
  const GammaGraph g = gamma_graph(d);
  const int m = static_cast<int>(d.crossings().size());
  TwistWord w;
  for (int c = 1; c <= m; ++c) w.twists.push_back({c - 1, "s" + std::to_string(c), g.square_circuit(c)});
  for (int v = 1; v <= m; ++v) w.twists.push_back({m + v - 1, "r" + std::to_string(v), g.region_circuit(d, v)});
  const std::size_t n = w.twists.size();
  w.intersections.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::set<int> ei(w.twists[i].circuit.begin(), w.twists[i].circuit.end());
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int e : w.twists[j].circuit) w.intersections[i][j] += static_cast<int>(ei.count(e));
    }
  }
  return w;
}

struct ComplexityReport {
  int a = 0;  // number of twists
  int b = 0;  // intersection points between their core curves
  int a_plus_b = 0;
  int four_delta_minus_one = 0;
};

inline ComplexityReport complexity_report(const TwistWord& word, const FiberSurface& fiber) {
  ComplexityReport r;
  r.a = word.size();
  r.b = word.intersection_points();
  r.a_plus_b = r.a + r.b;
  r.four_delta_minus_one = 4 * fiber.genus - 1;
  return r;
}

}  // namespace slalom
