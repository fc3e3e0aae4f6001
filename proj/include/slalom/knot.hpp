#pragma once

// The knot of a divide lives in the unit 3-sphere of the tangent bundle of
// the disk: pairs (x, u) with u tangent to the curve at x and |x|^2 + |u|^2 = 1.
// Here it is sampled, sent to 3-space stereographically, projected to a
// planar diagram and reduced, and its Alexander polynomial is read off the
// diagram independently of the Coxeter route.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "slalom/errors.hpp"
#include "slalom/geometry.hpp"
#include "slalom/integer.hpp"
#include "slalom/polyline.hpp"

namespace slalom {

struct KnotCurve {
  std::vector<Vec4> points;  // closed: points.back() == points.front()
  std::size_t branch_size = 0;  // samples per sign branch, endpoints included

  std::size_t size() const { return points.size(); }

  double sphere_residual() const {
    double r = 0;
    for (const auto& p : points) r = std::max(r, std::abs(p.squaredNorm() - 1.0));
    return r;
  }

  bool closed() const { return points.size() >= 4 && points.front() == points.back(); }

  double max_step() const {
    double r = 0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) r = std::max(r, (points[i + 1] - points[i]).norm());
    return r;
  }

  /// Smallest distance between polygon vertices at least `gap` apart along
  /// the cycle; a grid keeps this near linear.
  double min_separation(std::size_t gap = 8) const {
    const std::size_t n = points.size() - 1;
    if (n < 2 * gap + 1) return std::numeric_limits<double>::infinity();
    const double cell = std::max(2 * max_step(), 1e-9);
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> grid;
    auto key = [&](const std::array<long long, 4>& c) {
      std::uint64_t h = 1469598103934665603ULL;
      for (long long v : c) h = (h ^ static_cast<std::uint64_t>(v + (1LL << 20))) * 1099511628211ULL;
      return h;
    };
    auto cell_of = [&](const Vec4& p) {
      std::array<long long, 4> c;
      for (int k = 0; k < 4; ++k) c[static_cast<std::size_t>(k)] = static_cast<long long>(std::floor(p[k] / cell));
      return c;
    };
    for (std::size_t i = 0; i < n; ++i) grid[key(cell_of(points[i]))].push_back(i);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      auto c = cell_of(points[i]);
      for (int d = 0; d < 81; ++d) {
        std::array<long long, 4> o = c;
        int r = d;
        for (int k = 0; k < 4; ++k, r /= 3) o[static_cast<std::size_t>(k)] += r % 3 - 1;
        auto it = grid.find(key(o));
        if (it == grid.end()) continue;
        for (std::size_t j : it->second) {
          const std::size_t sep = std::min((i + n - j) % n, (j + n - i) % n);
          if (sep >= gap) best = std::min(best, (points[i] - points[j]).norm());
        }
      }
    }
    return best;
  }
};

/// (x, sign * sqrt(1 - |x|^2) * tau); on the boundary circle u = 0.
inline Vec4 lift_point(const Vec2& x, const Vec2& tau, double sign, bool boundary = false) {
  const double h = boundary ? 0.0 : std::sqrt(std::max(0.0, 1.0 - x.squaredNorm()));
  return {x.x(), x.y(), sign * h * tau.x(), sign * h * tau.y()};
}

/// Lifts each sample (x, tau) to (x, +-sqrt(1-|x|^2) tau). The two branches
/// meet at the boundary endpoints, where u = 0, and close into one polygon.
inline KnotCurve tangent_lift(const DivideImmersion& imm, int samples_per_segment = 0,
                              double tolerance = 1e-9) {
  const std::vector<CurveSample> smp =
      samples_per_segment > 0 ? imm.sample(std::max(samples_per_segment, LayoutConfig::kMinSamples)) : imm.samples();
  const std::size_t n = smp.size();
  if (n < 3) throw GeometryError("too few samples to lift");
  KnotCurve k;
  k.branch_size = n;
  auto lift = [&](std::size_t i, double sign) {
    return lift_point(smp[i].point, smp[i].tangent, sign, i == 0 || i + 1 == n);
  };
  for (std::size_t i = 0; i < n; ++i) k.points.push_back(lift(i, 1.0));
  for (std::size_t i = n - 1; i-- > 1;) k.points.push_back(lift(i, -1.0));
  k.points.push_back(k.points.front());
  if (k.sphere_residual() > tolerance)
    throw GeometryError("lift leaves the unit sphere by " + std::to_string(k.sphere_residual()));
  if (!k.closed()) throw GeometryError("lifted polygon does not close");
  return k;
}

/// Planar knot diagram on the sphere. The curve passes through 2c crossing
/// passages in order; passage i belongs to crossing `crossing[i]` and runs
/// over it when `over[i]`. Edge i joins passage i to passage i+1 (cyclically).
class PlanarDiagram {
 public:
  enum Slot { UnderIn = 0, UnderOut = 2 };

  PlanarDiagram() = default;
  PlanarDiagram(std::vector<int> crossing, std::vector<bool> over, std::vector<int> sign)
      : crossing_(std::move(crossing)), over_(std::move(over)), sign_(std::move(sign)) {
    canonicalize();
    check();
  }

  /// From a signed Gauss code (+k over, -k under, crossings 1-based) and signs.
  static PlanarDiagram from_gauss(const std::vector<int>& gauss, const std::vector<int>& signs) {
    std::vector<int> c;
    std::vector<bool> o;
    for (int g : gauss) {
      if (g == 0) throw StructuralError("Gauss code entry 0");
      c.push_back(std::abs(g) - 1);
      o.push_back(g > 0);
    }
    return PlanarDiagram(std::move(c), std::move(o), signs);
  }

  int crossing_count() const { return static_cast<int>(sign_.size()); }
  int passage_count() const { return static_cast<int>(crossing_.size()); }
  int crossing_of(int passage) const { return crossing_[static_cast<std::size_t>(passage)]; }
  bool over(int passage) const { return over_[static_cast<std::size_t>(passage)]; }
  int sign(int c) const { return sign_[static_cast<std::size_t>(c)]; }
  const std::vector<int>& signs() const { return sign_; }
  int writhe() const { return std::accumulate(sign_.begin(), sign_.end(), 0); }

  std::vector<int> gauss_code() const {
    std::vector<int> g;
    for (int i = 0; i < passage_count(); ++i) g.push_back(over(i) ? crossing_of(i) + 1 : -(crossing_of(i) + 1));
    return g;
  }

  std::string gauss_json() const {
    std::ostringstream os;
    os << "{\"gauss\": [";
    auto g = gauss_code();
    for (std::size_t i = 0; i < g.size(); ++i) os << (i ? ", " : "") << g[i];
    os << "], \"crossings\": " << crossing_count() << "}";
    return os.str();
  }

  /// Slot of the end of `edge` at its far (`head`) or near end, in the
  /// counter-clockwise rotation at that crossing.
  int slot(int edge, bool head) const {
    const int p = head ? (edge + 1) % passage_count() : edge;
    const bool o = over(p);
    const bool positive = sign(crossing_of(p)) > 0;
    if (!o) return head ? UnderIn : UnderOut;
    // positive: [ui, oo, uo, oi]; negative: [ui, oi, uo, oo]
    if (head) return positive ? 3 : 1;
    return positive ? 1 : 3;
  }

  struct Corner {
    int crossing;
    int corner;  // between slot `corner` and slot `corner + 1`
  };
  struct Face {
    std::vector<Corner> corners;
    std::vector<int> edges;  // traversed edge ids, 2e for forwards and 2e+1 backwards
  };

  /// Faces of the diagram on the sphere. Walking along an edge into slot s,
  /// the walk leaves by the slot clockwise next to it.
  std::vector<Face> faces() const {
    const int c = crossing_count();
    if (c == 0) return {Face{}, Face{}};
    const int e = passage_count();
    // End at (crossing, slot): which edge, and whether that end is its head.
    std::vector<std::array<int, 4>> end_edge(static_cast<std::size_t>(c));
    std::vector<std::array<bool, 4>> end_head(static_cast<std::size_t>(c));
    for (int i = 0; i < e; ++i)
      for (bool head : {false, true}) {
        const int x = crossing_of(head ? (i + 1) % e : i);
        end_edge[static_cast<std::size_t>(x)][static_cast<std::size_t>(slot(i, head))] = i;
        end_head[static_cast<std::size_t>(x)][static_cast<std::size_t>(slot(i, head))] = head;
      }
    std::vector<std::array<bool, 4>> seen(static_cast<std::size_t>(c), {false, false, false, false});
    std::vector<Face> out;
    for (int x0 = 0; x0 < c; ++x0)
      for (int s0 = 0; s0 < 4; ++s0) {
        if (seen[static_cast<std::size_t>(x0)][static_cast<std::size_t>(s0)]) continue;
        Face f;
        int x = x0, s = s0;
        while (!seen[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)]) {
          seen[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)] = true;
          const int out_slot = (s + 3) % 4;
          f.corners.push_back({x, out_slot});
          const int edge = end_edge[static_cast<std::size_t>(x)][static_cast<std::size_t>(out_slot)];
          const bool leaving_head = end_head[static_cast<std::size_t>(x)][static_cast<std::size_t>(out_slot)];
          f.edges.push_back(2 * edge + (leaving_head ? 1 : 0));
          const int p = leaving_head ? edge : (edge + 1) % e;
          x = crossing_of(p);
          s = slot(edge, !leaving_head);
        }
        out.push_back(std::move(f));
      }
    return out;
  }

  /// The sphere Euler identity V - E + F = 2 with V = c, E = 2c.
  bool euler_ok() const {
    const int c = crossing_count();
    return c - 2 * c + static_cast<int>(faces().size()) == 2;
  }

  bool operator==(const PlanarDiagram&) const = default;

 private:
  // Renumber crossings by first appearance.
  void canonicalize() {
    std::vector<int> map(sign_.size(), -1), sign;
    int next = 0;
    for (int& x : crossing_) {
      if (x < 0 || x >= static_cast<int>(sign_.size())) throw StructuralError("crossing index out of range");
      if (map[static_cast<std::size_t>(x)] < 0) {
        map[static_cast<std::size_t>(x)] = next++;
        sign.push_back(sign_[static_cast<std::size_t>(x)]);
      }
      x = map[static_cast<std::size_t>(x)];
    }
    if (next != static_cast<int>(sign_.size())) throw StructuralError("crossing listed without passages");
    sign_ = std::move(sign);
  }

  void check() const {
    if (crossing_.size() != over_.size() || crossing_.size() != 2 * sign_.size())
      throw StructuralError("diagram needs two passages per crossing");
    std::vector<int> overs(sign_.size(), 0), total(sign_.size(), 0);
    for (std::size_t i = 0; i < crossing_.size(); ++i)
      ++total[static_cast<std::size_t>(crossing_[i])], overs[static_cast<std::size_t>(crossing_[i])] += over_[i];
    for (std::size_t x = 0; x < sign_.size(); ++x) {
      if (total[x] != 2 || overs[x] != 1) throw StructuralError("crossing without one over and one under passage");
      if (sign_[x] != 1 && sign_[x] != -1) throw StructuralError("crossing sign must be +-1");
    }
  }

  std::vector<int> crossing_;
  std::vector<bool> over_;
  std::vector<int> sign_;
};

namespace detail {

inline PlanarDiagram drop_passages(const PlanarDiagram& d, const std::vector<int>& passages) {
  std::vector<bool> gone(static_cast<std::size_t>(d.passage_count()), false);
  for (int p : passages) gone[static_cast<std::size_t>(p)] = true;
  std::vector<int> crossing;
  std::vector<bool> over;
  std::vector<int> dead(static_cast<std::size_t>(d.crossing_count()), 0);
  for (int p : passages) dead[static_cast<std::size_t>(d.crossing_of(p))] = 1;
  std::vector<int> remap(static_cast<std::size_t>(d.crossing_count()), -1), sign;
  for (int x = 0; x < d.crossing_count(); ++x)
    if (!dead[static_cast<std::size_t>(x)]) remap[static_cast<std::size_t>(x)] = static_cast<int>(sign.size()), sign.push_back(d.sign(x));
  for (int i = 0; i < d.passage_count(); ++i) {
    if (gone[static_cast<std::size_t>(i)]) continue;
    crossing.push_back(remap[static_cast<std::size_t>(d.crossing_of(i))]);
    over.push_back(d.over(i));
  }
  return PlanarDiagram(std::move(crossing), std::move(over), std::move(sign));
}

inline std::optional<PlanarDiagram> reidemeister_one(const PlanarDiagram& d) {
  const int e = d.passage_count();
  for (int i = 0; i < e; ++i)
    if (d.crossing_of(i) == d.crossing_of((i + 1) % e)) return drop_passages(d, {i, (i + 1) % e});
  return std::nullopt;
}

inline std::optional<PlanarDiagram> reidemeister_two(const PlanarDiagram& d) {
  const int e = d.passage_count();
  for (const auto& f : d.faces()) {
    if (f.edges.size() != 2) continue;
    const int a = f.edges[0] / 2, b = f.edges[1] / 2;
    if (a == b) continue;
    if (d.crossing_of(a) == d.crossing_of((a + 1) % e)) continue;
    if (d.over(a) != d.over((a + 1) % e)) continue;
    std::vector<int> ps{a, (a + 1) % e, b, (b + 1) % e};
    std::sort(ps.begin(), ps.end());
    if (std::adjacent_find(ps.begin(), ps.end()) != ps.end()) continue;
    return drop_passages(d, ps);
  }
  return std::nullopt;
}

}  // namespace detail

/// Removes crossings by Reidemeister I and II moves until neither applies.
inline PlanarDiagram simplify_diagram(PlanarDiagram d) {
  for (;;) {
    if (auto r = detail::reidemeister_one(d)) {
      d = *r;
      continue;
    }
    if (auto r = detail::reidemeister_two(d)) {
      d = *r;
      continue;
    }
    return d;
  }
}

namespace detail {

struct ModPrime {
  std::uint64_t p;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
  std::uint64_t from(long long v) const {
    long long r = v % static_cast<long long>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(p) : r);
  }
};

inline std::uint64_t det_mod(std::vector<std::vector<std::uint64_t>> a, const ModPrime& m) {
  const std::size_t n = a.size();
  std::uint64_t det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) std::swap(a[piv], a[col]), det = m.sub(0, det);
    det = m.mul(det, a[col][col]);
    const std::uint64_t inv = m.inv(a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const std::uint64_t f = m.mul(a[r][col], inv);
      for (std::size_t k = col; k < n; ++k) a[r][k] = m.sub(a[r][k], m.mul(f, a[col][k]));
    }
  }
  return det;
}

// Coefficients mod p of the polynomial of degree <= n through (x_i, y_i).
inline std::vector<std::uint64_t> interpolate_mod(const std::vector<std::uint64_t>& xs, std::vector<std::uint64_t> ys,
                                                  const ModPrime& m) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      ys[i] = m.mul(m.sub(ys[i], ys[i - 1]), m.inv(m.sub(xs[i], xs[i - j])));
      if (i == j) break;
    }
  std::vector<std::uint64_t> c(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    // c = c * (t - x_k) + ys[k]
    for (std::size_t i = n - 1; i >= 1; --i) c[i] = m.sub(c[i - 1], m.mul(c[i], xs[k]));
    c[0] = m.sub(0, m.mul(c[0], xs[k]));
    c[0] = m.add(c[0], ys[k]);
  }
  return c;
}

}  // namespace detail

/// Strips powers of t and makes the leading coefficient positive.
inline IntPolynomial normalize_alexander(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  std::vector<BigInt> c = p.coefficients();
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
  if (c.back() < 0)
    for (auto& x : c) x = -x;
  return IntPolynomial(std::move(c));
}

/// The crossing/region matrix: at each crossing, the corners right-before,
/// right-after, left-after and left-before the over strand (seen along the
/// under strand) carry -1, 1, -t, t. Two regions adjacent across an edge
/// are dropped; the determinant is the Alexander polynomial up to +-t^k.
inline IntPolynomial alexander_from_diagram(const PlanarDiagram& d) {
  const int c = d.crossing_count();
  if (c == 0) return IntPolynomial{1};
  const auto faces = d.faces();
  if (static_cast<int>(faces.size()) != c + 2) throw StructuralError("diagram is not realizable on the sphere");
  // entry[x][face] = a + b t
  std::vector<std::map<int, std::pair<long long, long long>>> rows(static_cast<std::size_t>(c));
  static constexpr std::array<std::pair<long long, long long>, 4> label{{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};
  int drop_a = -1, drop_b = -1;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    for (const auto& k : faces[static_cast<std::size_t>(f)].corners) {
      auto& e = rows[static_cast<std::size_t>(k.crossing)][f];
      e.first += label[static_cast<std::size_t>(k.corner)].first;
      e.second += label[static_cast<std::size_t>(k.corner)].second;
    }
    for (int h : faces[static_cast<std::size_t>(f)].edges) {
      if (h == 0) drop_a = f;
      if (h == 1) drop_b = f;
    }
  }
  if (drop_a < 0 || drop_b < 0 || drop_a == drop_b) throw StructuralError("edge 0 does not separate two regions");
  std::vector<int> cols;
  for (int f = 0; f < c + 2; ++f)
    if (f != drop_a && f != drop_b) cols.push_back(f);

  const std::array<detail::ModPrime, 2> primes{{{(1ULL << 61) - 1}, {(1ULL << 62) - 57}}};
  std::array<std::vector<std::uint64_t>, 2> coeff;
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    const auto& m = primes[pi];
    std::vector<std::uint64_t> xs, ys;
    for (int s = 0; s <= c; ++s) {
      const std::uint64_t t = static_cast<std::uint64_t>(s + 2);
      std::vector<std::vector<std::uint64_t>> a(static_cast<std::size_t>(c), std::vector<std::uint64_t>(static_cast<std::size_t>(c), 0));
      for (int x = 0; x < c; ++x)
        for (int j = 0; j < c; ++j) {
          auto it = rows[static_cast<std::size_t>(x)].find(cols[static_cast<std::size_t>(j)]);
          if (it == rows[static_cast<std::size_t>(x)].end()) continue;
          a[static_cast<std::size_t>(x)][static_cast<std::size_t>(j)] =
              m.add(m.from(it->second.first), m.mul(m.from(it->second.second), t));
        }
      xs.push_back(t);
      ys.push_back(detail::det_mod(std::move(a), m));
    }
    coeff[pi] = detail::interpolate_mod(xs, ys, m);
  }
  // Chinese remaindering into the symmetric range.
  const BigInt p0(primes[0].p), p1(primes[1].p), mod = p0 * p1;
  const BigInt inv0(primes[1].inv(primes[0].p % primes[1].p));  // p0^-1 mod p1
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < coeff[0].size(); ++i) {
    const BigInt r0(coeff[0][i]), r1(coeff[1][i]);
    BigInt diff = ((r1 - r0) % p1 + p1) % p1;
    BigInt x = r0 + p0 * ((diff * inv0) % p1);
    if (x > mod / 2) x -= mod;
    out.push_back(x);
  }
  return normalize_alexander(IntPolynomial(std::move(out)));
}

struct ProjectionInfo {
  Vec4 pole;
  Vec3 direction;
  int raw_crossings = 0;
  int attempts = 0;
  double min_angle_deg = 0;
  double min_height_gap = 0;
};

namespace detail {

inline Vec4 best_pole(const KnotCurve& k, std::mt19937_64& rng, int candidates) {
  std::normal_distribution<double> g;
  Vec4 best = Vec4::UnitW();
  double best_d = -1;
  for (int i = 0; i < candidates; ++i) {
    Vec4 p(g(rng), g(rng), g(rng), g(rng));
    if (p.norm() < 1e-9) continue;
    p.normalize();
    double d = std::numeric_limits<double>::infinity();
    for (const auto& q : k.points) d = std::min(d, (q - p).squaredNorm());
    if (d > best_d) best_d = d, best = p;
  }
  return best;
}

inline std::vector<Vec3> stereographic(const std::vector<Vec4>& pts, const Vec4& pole) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m.col(0) = pole;
  Eigen::HouseholderQR<Eigen::Matrix4d> qr(m);
  const Eigen::Matrix4d q = qr.householderQ();
  std::vector<Vec3> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    const double denom = 1.0 - p.dot(pole);
    out.emplace_back(p.dot(q.col(1)) / denom, p.dot(q.col(2)) / denom, p.dot(q.col(3)) / denom);
  }
  return out;
}

// Diagram of a closed polygon (last point == first) seen along `dir`;
// nullopt when the projection is not generic to the given tolerances.
inline std::optional<PlanarDiagram> diagram_along(const std::vector<Vec3>& pts, const Vec3& dir, double min_angle_deg,
                                                  double min_gap, ProjectionInfo* info) {
  const Vec3 z = dir.normalized();
  Vec3 a = z.unitOrthogonal(), b = z.cross(a);
  std::vector<Vec2> flat;
  std::vector<double> height;
  for (const auto& p : pts) flat.emplace_back(p.dot(a), p.dot(b)), height.push_back(p.dot(z));
  auto scan = scan_intersections(flat, true);
  if (scan.degenerate) return std::nullopt;
  struct Pass {
    double at;
    int crossing;
    bool over;
  };
  std::vector<Pass> passes;
  std::vector<int> sign;
  double min_angle = 90, min_h = std::numeric_limits<double>::infinity();
  for (const auto& h : scan.hits) {
    const Vec2 u = flat[h.a + 1] - flat[h.a], v = flat[h.b + 1] - flat[h.b];
    const double ang = crossing_angle_deg(u, v);
    const double ha = height[h.a] + h.ta * (height[h.a + 1] - height[h.a]);
    const double hb = height[h.b] + h.tb * (height[h.b + 1] - height[h.b]);
    min_angle = std::min(min_angle, ang);
    min_h = std::min(min_h, std::abs(ha - hb));
    if (ang < min_angle_deg || std::abs(ha - hb) < min_gap) return std::nullopt;
    const bool a_over = ha > hb;
    const int x = static_cast<int>(sign.size());
    sign.push_back(cross2(a_over ? u : v, a_over ? v : u) > 0 ? 1 : -1);
    passes.push_back({static_cast<double>(h.a) + h.ta, x, a_over});
    passes.push_back({static_cast<double>(h.b) + h.tb, x, !a_over});
  }
  std::sort(passes.begin(), passes.end(), [](const Pass& p, const Pass& q) { return p.at < q.at; });
  for (std::size_t i = 0; i + 1 < passes.size(); ++i)
    if (passes[i + 1].at - passes[i].at < 1e-12) return std::nullopt;
  std::vector<int> crossing;
  std::vector<bool> over;
  for (const auto& p : passes) crossing.push_back(p.crossing), over.push_back(p.over);
  if (info) {
    info->raw_crossings = static_cast<int>(sign.size());
    info->min_angle_deg = min_angle;
    info->min_height_gap = sign.empty() ? 0 : min_h;
  }
  return PlanarDiagram(std::move(crossing), std::move(over), std::move(sign));
}

}  // namespace detail

struct ProjectedKnot {
  PlanarDiagram diagram;     // raw projection
  PlanarDiagram simplified;
  ProjectionInfo info;
  std::vector<Vec3> image;   // stereographic image used
};

/// Stereographic projection from a pole far from the curve, then a planar
/// projection along cfg.projection_direction and further seeded random
/// directions. Directions giving a non-generic picture are skipped; among
/// the generic ones the smallest reduced diagram wins.
inline ProjectedKnot project_diagram(const KnotCurve& knot, const LayoutConfig& cfg = {}) {
  if (!knot.closed()) throw GeometryError("knot polygon is not closed");
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> g;
  const Vec4 pole = detail::best_pole(knot, rng, cfg.pole_candidates);
  auto image = detail::stereographic(knot.points, pole);
  std::optional<ProjectedKnot> best;
  int attempts = 0, generic = 0;
  for (; generic < cfg.projection_attempts && attempts < 8 * cfg.projection_attempts; ++attempts) {
    Vec3 dir = cfg.projection_direction.normalized();
    if (attempts > 0) dir = Vec3(g(rng), g(rng), g(rng)).normalized();
    ProjectionInfo info;
    auto d = detail::diagram_along(image, dir, cfg.min_projection_angle_deg, cfg.min_projection_distance, &info);
    if (!d || !d->euler_ok()) continue;
    ++generic;
    info.pole = pole;
    info.direction = dir;
    auto s = simplify_diagram(*d);
    if (!best || s.crossing_count() < best->simplified.crossing_count()) best = ProjectedKnot{*d, s, info, image};
  }
  if (!best) throw GeometryError("no generic projection after " + std::to_string(attempts) + " attempts");
  best->info.attempts = attempts;
  return *best;
}

enum class KnotFormat { Csv, Obj };

/// 3-space polyline of the knot; CSV rows repeat the first point at the end.
inline std::string export_knot(const std::vector<Vec3>& image, KnotFormat format) {
  std::ostringstream os;
  os.precision(10);
  if (format == KnotFormat::Csv) {
    os << "x,y,z\n";
    for (const auto& p : image) os << p.x() << ',' << p.y() << ',' << p.z() << '\n';
  } else {
    for (const auto& p : image) os << "v " << p.x() << ' ' << p.y() << ' ' << p.z() << '\n';
    // Closed: the last point repeats the first, so reuse index 1.
    os << 'l';
    for (std::size_t i = 1; i < image.size(); ++i) os << ' ' << i;
    os << " 1\n";
  }
  return os.str();
}

inline KnotFormat knot_format(const std::string& tag) {
  if (tag == "csv") return KnotFormat::Csv;
  if (tag == "obj") return KnotFormat::Obj;
  throw std::invalid_argument("unsupported knot format '" + tag + "' (csv or obj)");
}

}  // namespace slalom
