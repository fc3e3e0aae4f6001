#pragma once

// Segment intersection for long planar polylines, bucketed on a uniform grid.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

namespace slalom {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;

inline double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }
inline Vec2 rot90(const Vec2& v) { return {-v.y(), v.x()}; }

struct SegmentHit {
  std::size_t a;  // first segment (points a, a+1), a < b
  std::size_t b;
  double ta;      // position along segment a in [0,1]
  double tb;
  Vec2 point;
};

struct IntersectionScan {
  std::vector<SegmentHit> hits;
  bool degenerate = false;  // touching or collinear pairs were seen
};

namespace detail {

inline double orient(const Vec2& p, const Vec2& q, const Vec2& r) { return cross2(q - p, r - p); }

// 0: disjoint, 1: proper crossing, 2: touching / collinear overlap
inline int classify(const Vec2& p, const Vec2& q, const Vec2& r, const Vec2& s, double* tp, double* tr) {
  const double o1 = orient(p, q, r), o2 = orient(p, q, s);
  const double o3 = orient(r, s, p), o4 = orient(r, s, q);
  if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0))) {
    *tp = o3 / (o3 - o4);
    *tr = o1 / (o1 - o2);
    return 1;
  }
  auto on = [](const Vec2& a, const Vec2& b, const Vec2& c) {
    return std::min(a.x(), b.x()) <= c.x() && c.x() <= std::max(a.x(), b.x()) && std::min(a.y(), b.y()) <= c.y() &&
           c.y() <= std::max(a.y(), b.y());
  };
  if ((o1 == 0 && on(p, q, r)) || (o2 == 0 && on(p, q, s)) || (o3 == 0 && on(r, s, p)) || (o4 == 0 && on(r, s, q)))
    return 2;
  return 0;
}

struct Grid {
  double x0, y0, cell;
  long long nx;
  long long key(long long i, long long j) const { return i * nx + j; }
  long long ix(double x) const { return static_cast<long long>(std::floor((x - x0) / cell)); }
  long long iy(double y) const { return static_cast<long long>(std::floor((y - y0) / cell)); }
};

}  // namespace detail

/// Intersections between segments of `a` and segments of `b` (indices into
/// each), or between non-adjacent segments of `a` when `b` is null.
inline IntersectionScan scan_intersections(const std::vector<Vec2>& a, bool closed, const std::vector<Vec2>* b = nullptr) {
  IntersectionScan out;
  const std::size_t na = a.size() < 2 ? 0 : a.size() - 1;
  const std::size_t nb = b ? (b->size() < 2 ? 0 : b->size() - 1) : 0;
  if (na == 0 || (b && nb == 0)) return out;

  double x0 = a[0].x(), y0 = a[0].y(), x1 = x0, y1 = y0, total = 0;
  auto grow = [&](const std::vector<Vec2>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      x0 = std::min(x0, pts[i].x()), x1 = std::max(x1, pts[i].x());
      y0 = std::min(y0, pts[i].y()), y1 = std::max(y1, pts[i].y());
      if (i) total += (pts[i] - pts[i - 1]).norm();
    }
  };
  grow(a);
  if (b) grow(*b);
  const double span = std::max({x1 - x0, y1 - y0, 1e-12});
  double cell = std::max(2.0 * total / static_cast<double>(na + nb), span / 4096.0);
  detail::Grid g{x0, y0, cell, static_cast<long long>(span / cell) + 2};

  // Bucket segments; tag b-segments by offsetting their index by na.
  std::unordered_map<long long, std::vector<std::size_t>> buckets;
  auto seg = [&](std::size_t k, Vec2& p, Vec2& q) {
    if (k < na) {
      p = a[k], q = a[k + 1];
    } else {
      p = (*b)[k - na], q = (*b)[k - na + 1];
    }
  };
  for (std::size_t k = 0; k < na + nb; ++k) {
    Vec2 p, q;
    seg(k, p, q);
    for (long long i = g.ix(std::min(p.x(), q.x())); i <= g.ix(std::max(p.x(), q.x())); ++i)
      for (long long j = g.iy(std::min(p.y(), q.y())); j <= g.iy(std::max(p.y(), q.y())); ++j)
        buckets[g.key(i, j)].push_back(k);
  }
  for (auto& [key, list] : buckets) {
    const long long ci = key / g.nx, cj = key % g.nx;
    for (std::size_t u = 0; u < list.size(); ++u)
      for (std::size_t v = u + 1; v < list.size(); ++v) {
        std::size_t s = list[u], t = list[v];
        if (b) {
          if ((s < na) == (t < na)) continue;
          if (s > t) std::swap(s, t);
        } else {
          if (s > t) std::swap(s, t);
          if (t == s + 1) continue;
          if (closed && s == 0 && t == na - 1) continue;
        }
        Vec2 p, q, r, w;
        seg(s, p, q);
        seg(t, r, w);
        // Report each pair once: in the cell holding the lower-left corner of the overlap box.
        const double ox = std::max(std::min(p.x(), q.x()), std::min(r.x(), w.x()));
        const double oy = std::max(std::min(p.y(), q.y()), std::min(r.y(), w.y()));
        if (g.ix(ox) != ci || g.iy(oy) != cj) continue;
        double tp = 0, tr = 0;
        int kind = detail::classify(p, q, r, w, &tp, &tr);
        if (kind == 2) out.degenerate = true;
        if (kind != 1) continue;
        out.hits.push_back({s, b ? t - na : t, tp, tr, p + tp * (q - p)});
      }
  }
  std::sort(out.hits.begin(), out.hits.end(), [](const SegmentHit& x, const SegmentHit& y) {
    return x.a != y.a ? x.a < y.a : (x.ta != y.ta ? x.ta < y.ta : x.b < y.b);
  });
  return out;
}

/// Angle in degrees between two segment directions, folded into [0, 90].
inline double crossing_angle_deg(const Vec2& u, const Vec2& v) {
  double c = std::abs(u.dot(v)) / (u.norm() * v.norm());
  return std::acos(std::min(1.0, c)) * 180.0 / M_PI;
}

inline double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 d = b - a;
  const double len2 = d.squaredNorm();
  double t = len2 > 0 ? std::clamp((p - a).dot(d) / len2, 0.0, 1.0) : 0.0;
  return (p - (a + t * d)).norm();
}

inline double segment_distance(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  double t1 = 0, t2 = 0;
  if (detail::classify(a, b, c, d, &t1, &t2) != 0) return 0.0;
  return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d), point_segment_distance(c, a, b),
                   point_segment_distance(d, a, b)});
}

}  // namespace slalom
