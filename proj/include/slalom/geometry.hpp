#pragma once

// A concrete slalom curve in the unit disk.
//
// The tree is drawn as a fan above the root, which sits at (0,-1). The curve
// runs at distance w (the clearance) alongside the edges, like the boundary
// of a thin neighbourhood of the tree, except that at the midpoint of each
// edge it switches sides with an S-shaped cubic and so crosses itself there.
// At a vertex the two rails of consecutive edges are joined by a circular
// arc: around the vertex when the gap between the edges exceeds a half turn,
// as a fillet between the rails otherwise.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "slalom/divide.hpp"
#include "slalom/errors.hpp"
#include "slalom/polyline.hpp"

namespace slalom {

struct LayoutConfig {
  double root_edge_length = 0.65;
  double fan_radius = 0.9;           // reach of the deepest vertices, measured from vertex 1
  double fan_angle_deg = 150.0;
  double clearance = 0.0;            // rail offset w; 0 picks it from the tree
  double clearance_fraction = 0.4;   // of the smallest gap between unrelated edges
  double max_clearance = 0.05;
  int samples_per_segment = 64;
  static constexpr int kMinSamples = 8;
  double arc_piece_deg = 30.0;       // circular arcs are split into cubics of at most this sweep

  // Knot and projection.
  Vec3 projection_direction{0.0, 0.0, 1.0};
  int pole_candidates = 1024;
  int projection_attempts = 64;   // generic directions tried
  unsigned long long seed = 20240611ULL;

  double sphere_tolerance = 1e-9;
  double min_crossing_angle_deg = 5.0;       // divide crossings and boundary transversality
  double min_projection_angle_deg = 0.5;     // crossings of the projected knot diagram
  double min_projection_distance = 1e-6;     // height gap and segment separation in projection

  void validate() const {
    if (!(root_edge_length > 0 && root_edge_length < 1)) throw std::invalid_argument("root_edge_length out of (0,1)");
    if (!(fan_radius > 0) || !(fan_angle_deg > 0 && fan_angle_deg < 180))
      throw std::invalid_argument("fan parameters must be positive, angle below 180");
    if (clearance < 0 || !(clearance_fraction > 0 && clearance_fraction < 0.5) || !(max_clearance > 0))
      throw std::invalid_argument("clearance parameters out of range");
    if (samples_per_segment < kMinSamples)
      throw std::invalid_argument("samples_per_segment below " + std::to_string(kMinSamples));
    if (!(arc_piece_deg > 0 && arc_piece_deg <= 90)) throw std::invalid_argument("arc_piece_deg out of (0,90]");
    if (!(sphere_tolerance > 0) || !(min_crossing_angle_deg > 0) || !(min_projection_angle_deg > 0) ||
        !(min_projection_distance > 0))
      throw std::invalid_argument("tolerances must be positive");
    if (projection_direction.norm() == 0) throw std::invalid_argument("projection direction is zero");
    if (pole_candidates < 1 || projection_attempts < 1) throw std::invalid_argument("need at least one attempt");
  }
};

/// Cubic Hermite piece: p0 to p1 with end derivatives m0, m1.
struct CubicSegment {
  enum class Role { Stub, Crossing, Rail, Corner };
  Vec2 p0, m0, p1, m1;
  Role role = Role::Rail;
  int ref = -1;  // edge (child vertex) for Crossing, vertex for Rail and Corner

  Vec2 point(double s) const {
    const double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * p0 + (s3 - 2 * s2 + s) * m0 + (-2 * s3 + 3 * s2) * p1 + (s3 - s2) * m1;
  }
  Vec2 derivative(double s) const {
    const double s2 = s * s;
    return (6 * s2 - 6 * s) * p0 + (3 * s2 - 4 * s + 1) * m0 + (-6 * s2 + 6 * s) * p1 + (3 * s2 - 2 * s) * m1;
  }

  static CubicSegment line(const Vec2& a, const Vec2& b, Role role, int ref) { return {a, b - a, b, b - a, role, ref}; }
};

struct CurveSample {
  Vec2 point;
  Vec2 tangent;  // unit
  double t;      // curve parameter in [0,1]
};

struct DoublePoint {
  Vec2 point;
  double t0, t1;       // curve parameters of the two passes, t0 < t1
  double angle_deg;    // between the branches
  double edge_angle_deg = 0;  // smaller angle between a branch and the tree edge
  int edge = -1;       // tree edge (child vertex) it lies on
};

/// Positions of the tree vertices: root at (0,-1), vertex 1 straight above
/// it, the rest fanned out by depth with angular slices proportional to
/// leaf counts. Children are placed left to right in planar order.
inline std::vector<Vec2> tree_layout(const RootedPlanarTree& tree, const LayoutConfig& cfg) {
  const int n = tree.vertex_count();
  std::vector<Vec2> pos(static_cast<std::size_t>(n), Vec2::Zero());
  pos[0] = {0.0, -1.0};
  if (n < 2) return pos;
  pos[1] = {0.0, -1.0 + cfg.root_edge_length};
  std::vector<int> leaves(static_cast<std::size_t>(n), 0);
  int max_depth = 1;
  for (int v = n - 1; v >= 1; --v) {
    if (tree.children(v).empty()) leaves[static_cast<std::size_t>(v)] = 1;
    if (tree.parent(v) > 0) leaves[static_cast<std::size_t>(tree.parent(v))] += leaves[static_cast<std::size_t>(v)];
    max_depth = std::max(max_depth, tree.depth(v));
  }
  const double half = cfg.fan_angle_deg * M_PI / 360.0;
  std::vector<double> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  lo[1] = M_PI / 2 - half;
  hi[1] = M_PI / 2 + half;
  for (int v = 1; v < n; ++v) {  // parents precede children
    double top = hi[static_cast<std::size_t>(v)];
    const double width = hi[static_cast<std::size_t>(v)] - lo[static_cast<std::size_t>(v)];
    for (int c : tree.children(v)) {
      const double share = width * leaves[static_cast<std::size_t>(c)] / leaves[static_cast<std::size_t>(v)];
      hi[static_cast<std::size_t>(c)] = top;
      lo[static_cast<std::size_t>(c)] = top - share;
      top -= share;
      const double phi = (hi[static_cast<std::size_t>(c)] + lo[static_cast<std::size_t>(c)]) / 2;
      const double r = cfg.fan_radius * (tree.depth(c) - 1) / std::max(1, max_depth - 1);
      pos[static_cast<std::size_t>(c)] = pos[1] + r * Vec2(std::cos(phi), std::sin(phi));
    }
  }
  return pos;
}

class DivideImmersion {
 public:
  const std::vector<Vec2>& vertex_positions() const { return pos_; }
  const std::vector<CubicSegment>& segments() const { return segments_; }
  const std::vector<CurveSample>& samples() const { return samples_; }
  const std::vector<DoublePoint>& double_points() const { return double_points_; }
  double clearance() const { return w_; }
  const RootedPlanarTree& tree() const { return tree_; }

  std::vector<Vec2> polyline() const {
    std::vector<Vec2> out;
    out.reserve(samples_.size());
    for (const auto& s : samples_) out.push_back(s.point);
    return out;
  }

  /// Samples every segment `per_segment` times; crossing pieces get an odd
  /// count so that no sample lands exactly on a double point.
  std::vector<CurveSample> sample(int per_segment) const {
    std::vector<CurveSample> out;
    const double count = static_cast<double>(segments_.size());
    for (std::size_t k = 0; k < segments_.size(); ++k) {
      const auto& seg = segments_[k];
      int n = per_segment;
      if (seg.role == CubicSegment::Role::Crossing && n % 2 == 0) ++n;
      const bool last = k + 1 == segments_.size();
      for (int i = 0; i < n + (last ? 1 : 0); ++i) {
        const double s = static_cast<double>(i) / n;
        Vec2 d = seg.derivative(s);
        out.push_back({seg.point(s), d.normalized(), (static_cast<double>(k) + s) / count});
      }
    }
    // The endpoints lie on the unit circle exactly.
    out.front().point.normalize();
    out.back().point.normalize();
    return out;
  }

 private:
  friend DivideImmersion layout_immersion(const SlalomDivide&, const LayoutConfig&);
  RootedPlanarTree tree_;
  std::vector<Vec2> pos_;
  std::vector<CubicSegment> segments_;
  std::vector<CurveSample> samples_;
  std::vector<DoublePoint> double_points_;
  double w_ = 0;
};

namespace detail {

inline double angle_of(const Vec2& v) { return std::atan2(v.y(), v.x()); }

inline double ccw_gap(double from, double to) {
  double g = std::fmod(to - from, 2 * M_PI);
  if (g <= 1e-12) g += 2 * M_PI;
  return g;
}

// Circular arc as cubic pieces; sweep > 0 counter-clockwise.
inline void push_arc(std::vector<CubicSegment>& out, const Vec2& c, double r, double a0, double sweep, double max_piece,
                     int vertex) {
  const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(sweep) / max_piece - 1e-9)));
  const double step = sweep / pieces;
  for (int i = 0; i < pieces; ++i) {
    const double s = a0 + i * step, e = s + step;
    Vec2 ps = c + r * Vec2(std::cos(s), std::sin(s)), pe = c + r * Vec2(std::cos(e), std::sin(e));
    Vec2 ms = r * step * Vec2(-std::sin(s), std::cos(s)), me = r * step * Vec2(-std::sin(e), std::cos(e));
    out.push_back({ps, ms, pe, me, CubicSegment::Role::Corner, vertex});
  }
}

inline double edge_gap(const std::vector<Vec2>& pos, const RootedPlanarTree& tree) {
  double best = std::numeric_limits<double>::infinity();
  auto edges = tree.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      best = std::min(best, segment_distance(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)],
                                             pos[static_cast<std::size_t>(c)], pos[static_cast<std::size_t>(d)]));
    }
  return best;
}

}  // namespace detail

/// The clearance w for which the construction stays clear of everything.
inline double auto_clearance(const SlalomDivide& d, const std::vector<Vec2>& pos, const LayoutConfig& cfg) {
  const auto& tree = d.tree();
  double w = cfg.max_clearance;
  w = std::min(w, cfg.clearance_fraction * detail::edge_gap(pos, tree));
  for (int v = 1; v < tree.vertex_count(); ++v) {
    auto es = d.ccw_edges(v);
    const Vec2& x = pos[static_cast<std::size_t>(v)];
    auto dir = [&](int e) {
      int other = e == v ? tree.parent(v) : e;
      return (pos[static_cast<std::size_t>(other)] - x).eval();
    };
    for (std::size_t i = 0; i < es.size(); ++i) {
      const int e = es[i], f = es[(i + 1) % es.size()];
      const double g = detail::ccw_gap(detail::angle_of(dir(e)), detail::angle_of(dir(f)));
      // Reach of the fillet along both edges is 2w / tan(g/2); the crossing
      // needs 1.5w more and a margin of w before the midpoint.
      const double reach = g < M_PI ? 2.0 / std::tan(g / 2) : 0.0;
      for (int k : {e, f}) w = std::min(w, dir(k).norm() / 2 / (reach + 2.5));
    }
  }
  double radius = 0;
  for (int v = 1; v < tree.vertex_count(); ++v) radius = std::max(radius, pos[static_cast<std::size_t>(v)].norm());
  w = std::min(w, (1.0 - radius) / 3.0);
  return w;
}

inline void validate_immersion(const DivideImmersion& imm, const LayoutConfig& cfg);

/// Explicit slalom curve for the divide, checked against the divide axioms.
inline DivideImmersion layout_immersion(const SlalomDivide& d, const LayoutConfig& cfg = {}) {
  cfg.validate();
  const auto& tree = d.tree();
  DivideImmersion imm;
  imm.tree_ = tree;
  imm.pos_ = tree_layout(tree, cfg);
  const auto& pos = imm.pos_;
  const double w = cfg.clearance > 0 ? cfg.clearance : auto_clearance(d, pos, cfg);
  if (!(w > 1e-6)) throw LayoutError("iii", "tree too crowded for a clearance above 1e-6; widen fan_angle_deg");
  imm.w_ = w;
  const double s = 1.5 * w;

  auto at = [&](int v) { return pos[static_cast<std::size_t>(v)]; };
  // Outward direction from v along edge e and its left normal.
  auto out_dir = [&](int v, int e) {
    int other = e == v ? tree.parent(v) : e;
    return (at(other) - at(v)).normalized().eval();
  };
  auto port_point = [&](int port) {
    const int c = port_child(port), q = port_pos(port);
    const Vec2 p = at(tree.parent(c)), ch = at(c);
    const Vec2 dd = (ch - p).normalized(), nn = rot90(dd);
    const Vec2 m = (p + ch) / 2;
    const double along = (q == ParentLeft || q == ParentRight) ? -s : s;
    const double side = (q == ParentLeft || q == ChildLeft) ? w : -w;
    return (m + along * dd + side * nn).eval();
  };

  auto& segs = imm.segments_;
  const double piece = cfg.arc_piece_deg * M_PI / 180.0;
  const Vec2 start = port_point(d.start_port()), end = port_point(d.end_port());
  segs.push_back(CubicSegment::line({start.x(), -std::sqrt(1 - start.x() * start.x())}, start,
                                    CubicSegment::Role::Stub, 0));
  for (const auto& step : d.path()) {
    if (step.kind == CurveStep::Kind::Cross) {
      const Vec2 a = port_point(step.from), b = port_point(step.to);
      const int c = step.index;
      Vec2 dd = (at(c) - at(tree.parent(c))).normalized();
      if ((b - a).dot(dd) < 0) dd = -dd;
      const double k = 2 * s;
      segs.push_back({a, k * dd, b, k * dd, CubicSegment::Role::Crossing, c});
      continue;
    }
    const Arc& arc = d.arcs()[static_cast<std::size_t>(step.index)];
    const int v = arc.vertex;
    // Edges of the two ports, in counter-clockwise order at v.
    int e = port_child(arc.from), f = port_child(arc.to);
    const bool forward = step.from == arc.from;
    const Vec2 ue = out_dir(v, e), uf = out_dir(v, f);
    const Vec2 ne = rot90(ue), nf = rot90(uf);
    const double g = detail::ccw_gap(detail::angle_of(ue), detail::angle_of(uf));
    std::vector<CubicSegment> piece_list;
    Vec2 t1, t2;
    if (g > M_PI + 1e-12) {
      t1 = at(v) + w * ne;
      t2 = at(v) - w * nf;
      piece_list.push_back(CubicSegment::line(port_point(arc.from), t1, CubicSegment::Role::Rail, v));
      detail::push_arc(piece_list, at(v), w, detail::angle_of(ne), g - M_PI, piece, v);
    } else {
      const double dist = 2 * w / std::sin(g / 2);
      const Vec2 bis = Vec2(std::cos(detail::angle_of(ue) + g / 2), std::sin(detail::angle_of(ue) + g / 2));
      const Vec2 centre = at(v) + dist * bis;
      t1 = centre - w * ne;
      t2 = centre + w * nf;
      piece_list.push_back(CubicSegment::line(port_point(arc.from), t1, CubicSegment::Role::Rail, v));
      if (M_PI - g > 1e-12) detail::push_arc(piece_list, centre, w, detail::angle_of(-ne), -(M_PI - g), piece, v);
    }
    piece_list.push_back(CubicSegment::line(t2, port_point(arc.to), CubicSegment::Role::Rail, v));
    if (!forward) {
      std::reverse(piece_list.begin(), piece_list.end());
      for (auto& p : piece_list) p = {p.p1, -p.m1, p.p0, -p.m0, p.role, p.ref};
    }
    segs.insert(segs.end(), piece_list.begin(), piece_list.end());
  }
  segs.push_back(CubicSegment::line(end, {end.x(), -std::sqrt(1 - end.x() * end.x())}, CubicSegment::Role::Stub, 0));

  imm.samples_ = imm.sample(cfg.samples_per_segment);
  validate_immersion(imm, cfg);
  return imm;
}

namespace detail {

// Faces of the arrangement formed by the curve and the unit circle, as
// closed polygons; used to check that each region holds one tree vertex.
struct Face {
  std::vector<Vec2> polygon;
  bool meets_boundary = false;
};

inline std::vector<Face> divide_faces(const std::vector<Vec2>& curve, const std::vector<SegmentHit>& hits) {
  // Cut the curve at every double point.
  struct Cut {
    std::size_t seg;
    double t;
    int node;
  };
  std::vector<Cut> cuts;
  for (std::size_t k = 0; k < hits.size(); ++k) {
    cuts.push_back({hits[k].a, hits[k].ta, static_cast<int>(k)});
    cuts.push_back({hits[k].b, hits[k].tb, static_cast<int>(k)});
  }
  std::sort(cuts.begin(), cuts.end(), [](const Cut& x, const Cut& y) { return x.seg != y.seg ? x.seg < y.seg : x.t < y.t; });
  const int start_node = static_cast<int>(hits.size()), end_node = start_node + 1;
  struct Piece {
    int from, to;
    std::vector<Vec2> pts;
  };
  std::vector<Piece> pieces;
  Piece cur{start_node, -1, {curve.front()}};
  std::size_t ci = 0;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    while (ci < cuts.size() && cuts[ci].seg == i) {
      Vec2 p = curve[i] + cuts[ci].t * (curve[i + 1] - curve[i]);
      cur.pts.push_back(p);
      cur.to = cuts[ci].node;
      pieces.push_back(cur);
      cur = Piece{cuts[ci].node, -1, {p}};
      ++ci;
    }
    cur.pts.push_back(curve[i + 1]);
  }
  cur.to = end_node;
  pieces.push_back(cur);
  // Boundary arcs between the endpoints, counter-clockwise.
  auto boundary = [&](const Vec2& a, const Vec2& b, int from, int to) {
    Piece p{from, to, {a}};
    double a0 = std::atan2(a.y(), a.x()), a1 = std::atan2(b.y(), b.x());
    double sweep = std::fmod(a1 - a0 + 4 * M_PI, 2 * M_PI);
    const int steps = std::max(8, static_cast<int>(sweep / 0.01));
    for (int i = 1; i < steps; ++i) {
      double ang = a0 + sweep * i / steps;
      p.pts.push_back({std::cos(ang), std::sin(ang)});
    }
    p.pts.push_back(b);
    return p;
  };
  pieces.push_back(boundary(curve.front(), curve.back(), start_node, end_node));
  pieces.push_back(boundary(curve.back(), curve.front(), end_node, start_node));

  // Half-edges: 2k runs piece k forwards, 2k+1 backwards.
  const int nodes = end_node + 1;
  std::vector<std::vector<int>> around(static_cast<std::size_t>(nodes));
  auto first_dir = [&](int h) {
    const auto& p = pieces[static_cast<std::size_t>(h / 2)].pts;
    return h % 2 == 0 ? (p[1] - p[0]).eval() : (p[p.size() - 2] - p.back()).eval();
  };
  auto origin = [&](int h) { return h % 2 == 0 ? pieces[static_cast<std::size_t>(h / 2)].from : pieces[static_cast<std::size_t>(h / 2)].to; };
  for (int h = 0; h < 2 * static_cast<int>(pieces.size()); ++h) around[static_cast<std::size_t>(origin(h))].push_back(h);
  for (auto& list : around)
    std::sort(list.begin(), list.end(), [&](int x, int y) { return angle_of(first_dir(x)) < angle_of(first_dir(y)); });
  const int curve_pieces = static_cast<int>(pieces.size()) - 2;
  std::vector<bool> used(2 * pieces.size(), false);
  std::vector<Face> faces;
  for (int h0 = 0; h0 < 2 * static_cast<int>(pieces.size()); ++h0) {
    if (used[static_cast<std::size_t>(h0)]) continue;
    std::vector<Vec2> poly;
    bool boundary = false;
    int h = h0;
    while (!used[static_cast<std::size_t>(h)]) {
      used[static_cast<std::size_t>(h)] = true;
      boundary |= h / 2 >= curve_pieces;
      const auto& p = pieces[static_cast<std::size_t>(h / 2)].pts;
      if (h % 2 == 0)
        poly.insert(poly.end(), p.begin(), p.end() - 1);
      else
        poly.insert(poly.end(), p.rbegin(), p.rend() - 1);
      // Arriving at the far node, turn to the next half-edge clockwise of the twin.
      const int twin = h ^ 1;
      const auto& list = around[static_cast<std::size_t>(origin(twin))];
      auto it = std::find(list.begin(), list.end(), twin);
      h = it == list.begin() ? list.back() : *(it - 1);
    }
    faces.push_back({std::move(poly), boundary});
  }
  return faces;
}

inline double signed_area(const std::vector<Vec2>& poly) {
  double a = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) a += cross2(poly[i], poly[(i + 1) % poly.size()]);
  return a / 2;
}

inline int winding_number(const std::vector<Vec2>& poly, const Vec2& p) {
  int wn = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % poly.size()];
    if (a.y() <= p.y()) {
      if (b.y() > p.y() && orient(a, b, p) > 0) ++wn;
    } else if (b.y() <= p.y() && orient(a, b, p) < 0) {
      --wn;
    }
  }
  return wn;
}

}  // namespace detail

/// Checks axioms (i)-(v) on the sampled curve; throws LayoutError naming the
/// first violated axiom and where.
inline void validate_immersion(const DivideImmersion& imm, const LayoutConfig& cfg) {
  const auto& tree = imm.tree();
  const auto& pos = imm.vertex_positions();
  const auto& smp = imm.samples();
  const std::vector<Vec2> curve = imm.polyline();
  const double sin_min = std::sin(cfg.min_crossing_angle_deg * M_PI / 180.0);
  auto where = [](const Vec2& p) { return "(" + std::to_string(p.x()) + ", " + std::to_string(p.y()) + ")"; };

  // (i) endpoints on the boundary, embedded.
  for (const auto* e : {&smp.front(), &smp.back()}) {
    if (std::abs(e->point.norm() - 1) > 1e-12) throw LayoutError("i", "endpoint off the unit circle at " + where(e->point));
    // (ii) transversal to the boundary.
    if (std::abs(e->tangent.dot(e->point.normalized())) < sin_min)
      throw LayoutError("ii", "curve not transversal to the boundary at " + where(e->point));
  }
  if ((smp.front().point - smp.back().point).norm() < 1e-9) throw LayoutError("i", "endpoints coincide");
  for (std::size_t i = 1; i + 1 < smp.size(); ++i)
    if (!(smp[i].point.norm() < 1.0)) throw LayoutError("ii", "interior point on or outside the boundary at " + where(smp[i].point));

  // (ii)/(iii) double points: transversal, one per tree edge, on that edge.
  auto scan = scan_intersections(curve, false);
  if (scan.degenerate) throw LayoutError("ii", "curve touches itself non-transversally");
  const int m = tree.vertex_count() - 1;
  if (static_cast<int>(scan.hits.size()) != m)
    throw LayoutError("iii", std::to_string(scan.hits.size()) + " double points, expected " + std::to_string(m));
  auto& dps = const_cast<std::vector<DoublePoint>&>(imm.double_points());
  dps.clear();
  std::vector<int> per_edge(static_cast<std::size_t>(m + 1), 0);
  const double count = static_cast<double>(smp.size() - 1);
  for (const auto& h : scan.hits) {
    const Vec2 u = curve[h.a + 1] - curve[h.a], v = curve[h.b + 1] - curve[h.b];
    DoublePoint dp{h.point, (static_cast<double>(h.a) + h.ta) / count, (static_cast<double>(h.b) + h.tb) / count,
                   crossing_angle_deg(u, v)};
    if (dp.angle_deg < cfg.min_crossing_angle_deg)
      throw LayoutError("ii", "double point at " + where(h.point) + " is not transversal");
    double best = std::numeric_limits<double>::infinity();
    for (int c = 1; c <= m; ++c) {
      const Vec2 a = pos[static_cast<std::size_t>(tree.parent(c))], b = pos[static_cast<std::size_t>(c)];
      const double dist = point_segment_distance(h.point, a, b);
      if (dist < best) best = dist, dp.edge = c;
    }
    const Vec2 a = pos[static_cast<std::size_t>(tree.parent(dp.edge))], b = pos[static_cast<std::size_t>(dp.edge)];
    if (best > 1e-9 || (h.point - a).norm() < 1e-9 || (h.point - b).norm() < 1e-9)
      throw LayoutError("iii", "double point at " + where(h.point) + " is not inside an edge");
    dp.edge_angle_deg = std::min(crossing_angle_deg(u, b - a), crossing_angle_deg(v, b - a));
    if (dp.edge_angle_deg < cfg.min_crossing_angle_deg)
      throw LayoutError("iii", "branch tangent to the edge at " + where(h.point));
    ++per_edge[static_cast<std::size_t>(dp.edge)];
    dps.push_back(dp);
  }
  for (int c = 1; c <= m; ++c)
    if (per_edge[static_cast<std::size_t>(c)] != 1)
      throw LayoutError("iii", "edge into vertex " + std::to_string(c) + " carries " +
                                   std::to_string(per_edge[static_cast<std::size_t>(c)]) + " double points");

  // (v) the curve meets the tree only at the double points.
  for (int c = 1; c <= m; ++c) {
    const std::vector<Vec2> edge{pos[static_cast<std::size_t>(tree.parent(c))], pos[static_cast<std::size_t>(c)]};
    auto cut = scan_intersections(curve, false, &edge);
    if (cut.degenerate) throw LayoutError("v", "curve touches the edge into vertex " + std::to_string(c));
    for (const auto& h : cut.hits) {
      bool at_double = false;
      for (const auto& dp : dps) at_double |= dp.edge == c && (dp.point - h.point).norm() < 1e-6;
      if (!at_double) throw LayoutError("v", "curve meets the edge into vertex " + std::to_string(c) + " at " + where(h.point));
    }
    if (cut.hits.size() != 2)
      throw LayoutError("v", "edge into vertex " + std::to_string(c) + " is met " + std::to_string(cut.hits.size()) + " times");
  }

  // (iv) one vertex per region. A relative immersion with m double points
  // cuts the disk into m + 2 regions for m + 1 vertices, so one region that
  // meets the boundary necessarily stays empty; every other region must hold
  // exactly one vertex, and no two vertices may share a region.
  auto faces = detail::divide_faces(curve, scan.hits);
  int regions = 0, empty = 0;
  std::vector<int> owner(pos.size(), 0);
  for (const auto& f : faces) {
    if (detail::signed_area(f.polygon) <= 0) continue;
    ++regions;
    int inside = 0;
    for (std::size_t v = 0; v < pos.size(); ++v) {
      // The root sits on the circle; test a point just inside instead.
      const Vec2 p = v == 0 ? Vec2(0.0, -1.0 + imm.clearance() * 1e-3) : pos[v];
      if (detail::winding_number(f.polygon, p) != 0) ++inside, ++owner[v];
    }
    if (inside > 1) throw LayoutError("iv", "a region contains " + std::to_string(inside) + " tree vertices");
    if (inside == 0) {
      if (!f.meets_boundary) throw LayoutError("iv", "an interior region contains no tree vertex");
      ++empty;
    }
  }
  if (regions != m + 2 || empty != 1)
    throw LayoutError("iv", std::to_string(regions) + " regions for " + std::to_string(tree.vertex_count()) + " vertices");
  for (std::size_t v = 0; v < owner.size(); ++v)
    if (owner[v] != 1) throw LayoutError("iv", "vertex " + std::to_string(v) + " is not in exactly one region");
}

}  // namespace slalom
