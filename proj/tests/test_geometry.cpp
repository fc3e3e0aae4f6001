#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "slalom/enumerate.hpp"
#include "slalom/geometry.hpp"
#include "slalom/knot.hpp"
#include "slalom/render.hpp"

using namespace slalom;

namespace {

DivideImmersion layout_of(const char* code, const LayoutConfig& cfg = {}) {
  return layout_immersion(build_divide(parse_cayley(code)), cfg);
}

// Brute-force count of proper crossings between non-adjacent chords.
int brute_self_crossings(const std::vector<Vec2>& p) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    for (std::size_t j = i + 2; j + 1 < p.size(); ++j) {
      const Vec2 a = p[i], b = p[i + 1], c = p[j], d = p[j + 1];
      const double o1 = cross2(b - a, c - a), o2 = cross2(b - a, d - a);
      const double o3 = cross2(d - c, a - c), o4 = cross2(d - c, b - c);
      count += (o1 * o2 < 0) && (o3 * o4 < 0);
    }
  return count;
}

// The polygon, with points identified by exact coordinates, is one cycle:
// connected and every vertex of degree two.
bool single_cycle(const KnotCurve& k) {
  std::map<std::array<double, 4>, int> id;
  auto key = [](const Vec4& v) { return std::array<double, 4>{v[0], v[1], v[2], v[3]}; };
  for (const auto& p : k.points) id.emplace(key(p), static_cast<int>(id.size()));
  const int n = static_cast<int>(id.size());
  std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i + 1 < k.points.size(); ++i) {
    int a = id[key(k.points[i])], b = id[key(k.points[i + 1])];
    if (a == b) return false;
    adj[static_cast<std::size_t>(a)].insert(b);
    adj[static_cast<std::size_t>(b)].insert(a);
  }
  for (const auto& s : adj)
    if (s.size() != 2) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  int reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (seen[static_cast<std::size_t>(v)]) continue;
    seen[static_cast<std::size_t>(v)] = true;
    ++reached;
    for (int w : adj[static_cast<std::size_t>(v)]) stack.push_back(w);
  }
  return reached == n;
}

}  // namespace

TEST(Polyline, GridScanMatchesBruteForce) {
  std::vector<Vec2> star;
  for (int i = 0; i <= 7; ++i) {
    double a = 4 * M_PI * i / 7 + 0.1;  // a {7/2} star, traced twice round
    star.emplace_back(std::cos(a), std::sin(a));
  }
  auto scan = scan_intersections(star, true);
  EXPECT_EQ(static_cast<int>(scan.hits.size()), brute_self_crossings(star));
  EXPECT_EQ(scan.hits.size(), 7u);
  EXPECT_FALSE(scan.degenerate);
  std::vector<Vec2> wiggle;
  for (int i = 0; i < 400; ++i) wiggle.emplace_back(i * 0.01, std::sin(i * 0.37) * 0.5);
  EXPECT_EQ(static_cast<int>(scan_intersections(wiggle, false).hits.size()), brute_self_crossings(wiggle));
}

TEST(Polyline, TouchingIsDegenerate) {
  std::vector<Vec2> t{{0, 0}, {1, 0}, {1, 1}, {0.5, 0}, {0.5, -1}};
  EXPECT_TRUE(scan_intersections(t, false).degenerate);
  EXPECT_NEAR(crossing_angle_deg({1, 0}, {1, 1}), 45.0, 1e-12);
  EXPECT_NEAR(crossing_angle_deg({1, 0}, {-1, 0}), 0.0, 1e-12);
}

TEST(Layout, SingleEdge) {
  auto imm = layout_of("[0]");
  ASSERT_EQ(imm.double_points().size(), 1u);
  EXPECT_EQ(imm.double_points()[0].edge, 1);
  const auto& s = imm.samples();
  EXPECT_DOUBLE_EQ(s.front().point.norm(), 1.0);
  EXPECT_DOUBLE_EQ(s.back().point.norm(), 1.0);
  for (std::size_t i = 1; i + 1 < s.size(); ++i) EXPECT_LT(s[i].point.norm(), 1.0);
  EXPECT_EQ(brute_self_crossings(imm.polyline()), 1);
}

TEST(Layout, NamedTrees) {
  for (const char* code : {"[0,1,1,2]", "[0,1,1,1]", "[0,1,2,2]", "[0,1,1,2,4]"}) {
    auto tree = parse_cayley(code);
    auto imm = layout_of(code);
    ASSERT_EQ(static_cast<int>(imm.double_points().size()), tree.edge_count()) << code;
    std::set<int> edges;
    for (const auto& dp : imm.double_points()) {
      edges.insert(dp.edge);
      EXPECT_GT(dp.angle_deg, 60.0);
      EXPECT_GT(dp.edge_angle_deg, 30.0);
      // Near the midpoint of its edge.
      const Vec2 mid = (imm.vertex_positions()[static_cast<std::size_t>(tree.parent(dp.edge))] +
                        imm.vertex_positions()[static_cast<std::size_t>(dp.edge)]) / 2;
      EXPECT_LT((dp.point - mid).norm(), 1e-9);
    }
    EXPECT_EQ(static_cast<int>(edges.size()), tree.edge_count());
    EXPECT_EQ(brute_self_crossings(imm.polyline()), tree.edge_count()) << code;
  }
}

TEST(Layout, AxiomsHoldUpTo8) {
  for (auto& code : enumerate_trees(8)) {
    auto tree = parse_cayley(code);
    DivideImmersion imm;
    ASSERT_NO_THROW(imm = layout_immersion(build_divide(tree))) << code.to_string();
    EXPECT_EQ(static_cast<int>(imm.double_points().size()), tree.edge_count());
  }
}

TEST(Layout, Deterministic) {
  auto a = layout_of("[0,1,1,1]"), b = layout_of("[0,1,1,1]");
  ASSERT_EQ(a.samples().size(), b.samples().size());
  for (std::size_t i = 0; i < a.samples().size(); ++i) EXPECT_EQ(a.samples()[i].point, b.samples()[i].point);
}

TEST(Layout, ViolationsNameTheAxiom) {
  LayoutConfig wide;
  wide.clearance = 0.3;
  try {
    layout_of("[0,1,1,1]", wide);
    FAIL() << "oversized clearance accepted";
  } catch (const LayoutError& e) {
    EXPECT_FALSE(e.axiom().empty());
    EXPECT_NE(std::string(e.what()).find("axiom"), std::string::npos);
  }
  LayoutConfig sparse;
  sparse.samples_per_segment = 2;
  EXPECT_THROW(layout_of("[0]", sparse), std::invalid_argument);
}

TEST(Lift, PointArithmetic) {
  const Vec2 x(0.6, 0.0), tau(0.0, 1.0);
  const Vec4 up = lift_point(x, tau, 1.0), down = lift_point(x, tau, -1.0);
  EXPECT_NEAR(up[3], 0.8, 1e-15);
  EXPECT_NEAR(down[3], -0.8, 1e-15);
  EXPECT_NEAR(up.norm(), 1.0, 1e-15);
  const Vec4 edge = lift_point(Vec2(0.6, 0.8), tau, 1.0, true);
  EXPECT_EQ(edge, Vec4(0.6, 0.8, 0.0, 0.0));
}

TEST(Lift, SphereClosureAndSeparationUpTo7) {
  for (auto& code : enumerate_trees(7)) {
    auto imm = layout_immersion(build_divide(parse_cayley(code)));
    auto k = tangent_lift(imm);
    EXPECT_LE(k.sphere_residual(), 1e-9);
    EXPECT_TRUE(k.closed());
    EXPECT_TRUE(single_cycle(k)) << code.to_string();
    EXPECT_EQ(k.size(), 2 * imm.samples().size() - 1);
    EXPECT_GT(k.min_separation(), 1e-4) << code.to_string();
    // Both boundary points have u = 0.
    EXPECT_EQ(k.points.front().tail<2>(), Vec2::Zero().eval());
    EXPECT_EQ(k.points[imm.samples().size() - 1].tail<2>(), Vec2::Zero().eval());
  }
}

TEST(Export, CsvAndObj) {
  auto imm = layout_of("[0]");
  auto pk = project_diagram(tangent_lift(imm));
  const std::string csv = export_knot(pk.image, KnotFormat::Csv);
  std::istringstream in(csv);
  std::string line, first, last;
  std::getline(in, line);
  EXPECT_EQ(line, "x,y,z");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (rows == 0) first = line;
    last = line;
    ++rows;
  }
  EXPECT_EQ(rows, pk.image.size());
  EXPECT_EQ(first, last);
  const std::string obj = export_knot(pk.image, KnotFormat::Obj);
  EXPECT_EQ(std::count(obj.begin(), obj.end(), '\n'), static_cast<long>(pk.image.size() + 1));
  EXPECT_EQ(obj.substr(0, 2), "v ");
  EXPECT_THROW(knot_format("ply"), std::invalid_argument);
  EXPECT_EQ(export_knot(pk.image, KnotFormat::Csv), csv);
}

TEST(Render, SvgShowsDiskTreeAndCurve) {
  auto svg = render_divide_svg(build_divide(parse_cayley("[0,1,1,1]")));
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t p = svg.find(needle); p != std::string::npos; p = svg.find(needle, p + 1)) ++n;
    return n;
  };
  EXPECT_EQ(count("<line"), 4u);
  EXPECT_EQ(count("<path"), 1u);
  // disk + 5 vertices + 4 double points
  EXPECT_EQ(count("<circle"), 10u);
}
