#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "slalom/decomposition.hpp"
#include "slalom/divide.hpp"
#include "slalom/enumerate.hpp"

using namespace slalom;

namespace {

SlalomDivide divide_of(const char* code) { return build_divide(parse_cayley(code)); }

// Independent cycle-space dimension: edges minus a spanning forest.
int cycle_rank_by_union_find(const GammaGraph& g) {
  std::vector<int> up(static_cast<std::size_t>(g.vertex_count()));
  for (int i = 0; i < g.vertex_count(); ++i) up[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (up[static_cast<std::size_t>(x)] != x) x = up[static_cast<std::size_t>(x)] = up[static_cast<std::size_t>(up[static_cast<std::size_t>(x)])];
    return x;
  };
  int extra = 0;
  for (const auto& e : g.edges()) {
    int a = find(e.a), b = find(e.b);
    if (a == b)
      ++extra;
    else
      up[static_cast<std::size_t>(a)] = b;
  }
  return extra;
}

}  // namespace

TEST(Divide, Counts) {
  auto lys = divide_of("[0,1,1,1]");
  EXPECT_EQ(lys.crossings().size(), 4u);
  EXPECT_EQ(lys.interior_regions().size(), 4u);
  EXPECT_EQ(gordian_number(lys), 4);
  auto one = divide_of("[0]");
  EXPECT_EQ(one.crossings().size(), 1u);
  EXPECT_EQ(one.interior_regions().size(), 1u);
  EXPECT_EQ(gordian_number(one), 1);
  auto e10 = divide_of("[0,1,1,2,4]");
  EXPECT_EQ(e10.crossings().size(), 5u);
  EXPECT_EQ(e10.interior_regions().size(), 5u);
  EXPECT_EQ(gordian_number(divide_of("[0,1,2,2]")), 4);
  EXPECT_THROW(build_divide(RootedPlanarTree::from_parents({-1})), StructuralError);
}

TEST(Divide, SingleEdgePath) {
  auto d = divide_of("[0]");
  // boundary -> crossing -> loop around vertex 1 -> crossing -> boundary
  ASSERT_EQ(d.path().size(), 3u);
  EXPECT_EQ(d.path()[0].kind, CurveStep::Kind::Cross);
  EXPECT_EQ(d.path()[1].kind, CurveStep::Kind::Arc);
  EXPECT_EQ(d.path()[2].to, d.end_port());
  EXPECT_EQ(d.boundary_regions().size(), 2u);
}

TEST(Divide, InvariantsUpTo8) {
  for (auto& code : enumerate_trees(8)) {
    auto tree = parse_cayley(code);
    auto d = build_divide(tree);
    EXPECT_NO_THROW(check_divide(d)) << code.to_string();
    const int n = tree.vertex_count();
    EXPECT_EQ(static_cast<int>(d.crossings().size() + d.interior_regions().size()), dynkin_of(tree).size());
    // Each crossing borders exactly 3 distinct regions: outer, parent side, child side.
    for (const auto& x : d.crossings()) {
      std::set<int> rs;
      for (int q = 0; q < 4; ++q) rs.insert(d.quadrant_region(x.child, q));
      EXPECT_EQ(rs.size(), 3u);
    }
    // The curve traverses 2n-3 arcs, each once.
    std::set<int> arcs;
    for (const auto& s : d.path())
      if (s.kind == CurveStep::Kind::Arc) arcs.insert(s.index);
    EXPECT_EQ(static_cast<int>(arcs.size()), 2 * n - 3);
  }
}

TEST(Gamma, SmallCases) {
  auto g1 = gamma_graph(divide_of("[0]"));
  EXPECT_EQ(g1.vertex_count(), 4);
  EXPECT_EQ(g1.cycle_rank(), 2);
  auto g4 = gamma_graph(divide_of("[0,1,1,1]"));
  EXPECT_EQ(g4.vertex_count(), 16);
  EXPECT_EQ(g4.cycle_rank(), 8);
  EXPECT_EQ(cycle_rank_by_union_find(g4), 8);
}

TEST(Gamma, InvariantsUpTo8) {
  for (auto& code : enumerate_trees(8)) {
    auto tree = parse_cayley(code);
    auto g = gamma_graph(build_divide(tree));
    std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& e : g.edges()) ++degree[static_cast<std::size_t>(e.a)], ++degree[static_cast<std::size_t>(e.b)];
    int stubs = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      bool stub = g.rotation(v)[0] == GammaGraph::kStub;
      stubs += stub;
      EXPECT_EQ(degree[static_cast<std::size_t>(v)] + stub, 3);
    }
    EXPECT_EQ(stubs, 2);
    for (const auto& e : g.edges()) EXPECT_NE(g.agrees(e.a), g.agrees(e.b));
    EXPECT_EQ(g.cycle_rank(), dynkin_of(tree).size());
    EXPECT_EQ(cycle_rank_by_union_find(g), g.cycle_rank());
  }
}

TEST(Fiber, GenusAndBoundary) {
  auto f1 = fiber_surface(gamma_graph(divide_of("[0]")));
  EXPECT_EQ(f1.first_betti, 2);
  EXPECT_EQ(f1.boundary_components, 1);
  EXPECT_EQ(f1.genus, 1);
  auto f139 = fiber_surface(gamma_graph(divide_of("[0,1,2,2]")));
  EXPECT_EQ(f139.first_betti, 8);
  EXPECT_EQ(f139.genus, 4);
  auto f10 = fiber_surface(gamma_graph(divide_of("[0,1,1,2,4]")));
  EXPECT_EQ(f10.first_betti, 10);
  EXPECT_EQ(f10.genus, 5);
  for (auto& code : enumerate_trees(8)) {
    auto tree = parse_cayley(code);
    auto f = fiber_surface(gamma_graph(build_divide(tree)));
    EXPECT_EQ(f.boundary_components, 1) << code.to_string();
    EXPECT_EQ(f.genus, tree.vertex_count() - 1);
  }
}

TEST(Fiber, UntwistedRibbonIsPlanar) {
  // The untwisted thickening is a disk neighbourhood of a plane graph; its
  // boundary curves are the bounded faces (squares and regions) plus one.
  for (auto& code : enumerate_trees(7)) {
    auto tree = parse_cayley(code);
    auto g = gamma_graph(build_divide(tree));
    EXPECT_EQ(count_ribbon_boundaries(g, false), 2 * tree.vertex_count() - 1) << code.to_string();
  }
}

TEST(Twist, WordMatchesDynkin) {
  auto w = monodromy_word(divide_of("[0]"));
  EXPECT_EQ(w.size(), 2);
  EXPECT_EQ(w.labels(), (std::vector<std::string>{"s1", "r1"}));
  EXPECT_EQ(w.intersection_graph(), (std::vector<Edge>{{0, 1}}));

  for (auto& code : enumerate_trees(8)) {
    auto tree = parse_cayley(code);
    auto d = dynkin_of(tree);
    auto word = monodromy_word(build_divide(tree));
    ASSERT_EQ(word.size(), d.size());
    EXPECT_EQ(word.intersection_graph(), d.edges()) << code.to_string();
    for (int i = 0; i < word.size(); ++i) {
      EXPECT_EQ(word.twists[static_cast<std::size_t>(i)].label, d.label(i));
      for (int j = 0; j < word.size(); ++j)
        EXPECT_LE(word.intersections[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], 1);
    }
  }
  auto e8 = monodromy_word(divide_of("[0,1,1,2]"));
  EXPECT_EQ(e8.size(), 8);
  EXPECT_EQ(e8.intersection_graph(), dynkin_of(parse_cayley("[0,1,1,2]")).edges());
}

TEST(Twist, ComplexityIdentity) {
  auto r1 = complexity_report(monodromy_word(divide_of("[0]")), fiber_surface(gamma_graph(divide_of("[0]"))));
  EXPECT_EQ(r1.a, 2);
  EXPECT_EQ(r1.b, 1);
  EXPECT_EQ(r1.a_plus_b, 3);
  EXPECT_EQ(r1.four_delta_minus_one, 3);
  auto d10 = divide_of("[0,1,1,2,4]");
  auto r10 = complexity_report(monodromy_word(d10), fiber_surface(gamma_graph(d10)));
  EXPECT_EQ(r10.a, 10);
  EXPECT_EQ(r10.b, 9);
  EXPECT_EQ(r10.four_delta_minus_one, 19);
  for (auto& code : enumerate_trees(8)) {
    auto d = build_divide(parse_cayley(code));
    auto r = complexity_report(monodromy_word(d), fiber_surface(gamma_graph(d)));
    EXPECT_EQ(r.a_plus_b, r.four_delta_minus_one) << code.to_string();
  }
}

TEST(Decomposition, ValencyRule) {
  auto r = conway_decomposition(parse_cayley("[0,1,2,2]"));
  EXPECT_EQ(r.bs_edges, (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {2, 4}}));
  EXPECT_EQ(r.conway_edges.size(), 4u);
  EXPECT_EQ(conway_decomposition(parse_cayley("[0,1,1,1]")).bs_edges.size(), 4u);
  for (const char* path : {"[0]", "[0,1]", "[0,1,2]", "[0,1,2,3,4]"}) {
    auto p = conway_decomposition(parse_cayley(path));
    EXPECT_EQ(p.bs_edges, (std::vector<Edge>{{0, 1}})) << path;
    EXPECT_EQ(p.pieces.size(), 2u);
  }
  auto e8 = conway_decomposition(parse_cayley("[0,1,1,2]"));
  EXPECT_EQ(e8.bs_edges, (std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}}));
  EXPECT_EQ(e8.pieces, (std::vector<std::vector<int>>{{0}, {1}, {2, 4}, {3}}));
}

TEST(Decomposition, IndependentOfChildOrder) {
  for (auto& code : enumerate_trees(8)) {
    auto t = parse_cayley(code);
    std::vector<std::vector<int>> order;
    for (int v = 0; v < t.vertex_count(); ++v) {
      auto ch = t.children(v);
      order.emplace_back(ch.rbegin(), ch.rend());
    }
    auto u = t.with_child_order(order);
    auto a = conway_decomposition(t).bs_edges, b = conway_decomposition(u).bs_edges;
    EXPECT_EQ(a, b);
    for (auto e : conway_decomposition(t).bs_edges) {
      bool ok = e.first == 0 || t.valency(e.first) >= 3 || t.valency(e.second) >= 3;
      EXPECT_TRUE(ok);
    }
  }
}

TEST(Arborescent, Notation) {
  EXPECT_EQ(arborescent_notation(dynkin_of(parse_cayley("[0]"))).expression, "(2 (2))");
  auto e8 = arborescent_notation(dynkin_of(parse_cayley("[0,1,1,2]")));
  EXPECT_EQ(e8.weights.size(), 8u);
  EXPECT_TRUE(std::all_of(e8.weights.begin(), e8.weights.end(), [](int w) { return w == 2; }));
  EXPECT_EQ(e8.expression, "(2 (2 (2 (2 (2 (2)))) (2 (2))))");
  auto k = arborescent_notation(dynkin_of(parse_cayley("[0,1,2,2]")));
  EXPECT_EQ(std::count(k.expression.begin(), k.expression.end(), '2'), 8);
  EXPECT_EQ(*known_identification(parse_cayley("[0,1,2,2]")), "10_139 = Montesinos knot M(1,(3,1),(3,1),(4,1))");
  EXPECT_FALSE(known_identification(parse_cayley("[0,1,1,1]")).has_value());
}
