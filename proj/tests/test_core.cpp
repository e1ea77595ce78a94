#include <gtest/gtest.h>

#include <map>

#include "chroma/constructions.hpp"
#include "chroma/core.hpp"
#include "chroma/random.hpp"
#include "chroma/transforms.hpp"
#include "oracles.hpp"

using namespace chroma;

namespace {

EdgeColoredGraph triangle(Color a, Color b, Color c) {
  return EdgeColoredGraph(3, {{0, 1, a}, {1, 2, b}, {0, 2, c}});
}

EdgeColoredGraph complete(std::size_t n, bool rainbow) {
  std::vector<Edge> edges;
  Color next = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, rainbow ? next++ : 0});
  return EdgeColoredGraph(n, std::move(edges));
}

}  // namespace

TEST(Graph, CanonicalizesAndSortsEdges) {
  EdgeColoredGraph g(4, {{3, 1, 7}, {0, 2, 1}, {2, 1, 5}});
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 2, 1}));
  EXPECT_EQ(g.edges()[1], (Edge{1, 2, 5}));
  EXPECT_EQ(g.edges()[2], (Edge{1, 3, 7}));
  EXPECT_EQ(g.color(3, 1), 7u);
  EXPECT_EQ(g.color(1, 3), 7u);
  EXPECT_FALSE(g.color(0, 3));
  EXPECT_EQ(g.neighbors(1).size(), 2u);
  EXPECT_EQ(g.neighbors(1)[0].v, 2u);
}

TEST(Graph, RejectsInvalidInput) {
  EXPECT_THROW(EdgeColoredGraph(2, {{0, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(EdgeColoredGraph(2, {{0, 2, 1}}), std::invalid_argument);
  EXPECT_THROW(EdgeColoredGraph(3, {{0, 1, 1}, {1, 0, 2}}), std::invalid_argument);
  EXPECT_THROW(EdgeColoredGraph::with_prefix_bipartition(3, {{0, 1, 1}}, 2),
               std::invalid_argument);
  EXPECT_THROW(EdgeColoredGraph(2, {}, std::vector<Side>{Side::first}), std::invalid_argument);
  EdgeColoredGraph g(2);
  EXPECT_THROW(g.neighbors(2), std::out_of_range);
  EXPECT_THROW(color_degree(g, 5), std::out_of_range);
}

TEST(Graph, Bipartition) {
  auto g = EdgeColoredGraph::with_prefix_bipartition(4, {{0, 2, 1}, {1, 3, 1}}, 2);
  EXPECT_TRUE(g.has_bipartition());
  EXPECT_EQ(g.side(1), Side::first);
  EXPECT_EQ(g.side(2), Side::second);
  EXPECT_EQ(g.side_vertices(Side::second), (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(g.prefix_split(), 2u);
  EdgeColoredGraph h(3, {{0, 1, 0}, {1, 2, 0}},
                     std::vector<Side>{Side::first, Side::second, Side::first});
  EXPECT_FALSE(h.prefix_split());
  EXPECT_FALSE(EdgeColoredGraph(3).prefix_split());
}

TEST(OrientedGraphTest, RejectsLoopsDuplicatesAndAntiParallel) {
  EXPECT_THROW(OrientedGraph(2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(OrientedGraph(2, {{0, 1}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(OrientedGraph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(OrientedGraph(2, {{0, 3}}), std::invalid_argument);
  OrientedGraph d(3, {{2, 0}, {0, 1}});
  EXPECT_EQ(d.out_degree(0), 1u);
  EXPECT_EQ(d.in_degree(0), 1u);
  EXPECT_TRUE(d.has_arc(2, 0));
  EXPECT_FALSE(d.has_arc(0, 2));
}

TEST(ColoredOrientationTest, ChecksHostColors) {
  auto g = triangle(1, 2, 3);
  EXPECT_NO_THROW(ColoredOrientation(g, {{0, 1, 1}, {2, 1, 2}}));
  EXPECT_THROW(ColoredOrientation(g, {{0, 1, 2}}), std::invalid_argument);
  ColoredOrientation d(g, {{0, 1, 1}, {1, 2, 2}, {2, 0, 3}});
  EXPECT_EQ(d.in_colors(1), (std::vector<Color>{1}));
  EXPECT_EQ(d.out_colors(1), (std::vector<Color>{2}));
  EXPECT_EQ(d.color(2, 0), 3u);
  EXPECT_FALSE(d.color(0, 2));
}

TEST(ColorDegree, Examples) {
  auto mono = triangle(4, 4, 4);
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(color_degree(mono, v), 1u);
  EdgeColoredGraph star(4, {{0, 1, 1}, {0, 2, 2}, {0, 3, 2}});
  EXPECT_EQ(color_degree(star, 0), 2u);
  auto sig = signature(transitive_tournament(4));
  EXPECT_EQ(total_color_degree(sig), 9u);
}

TEST(ColorDegree, MinAndTotal) {
  EdgeColoredGraph empty3(3);
  EXPECT_EQ(min_color_degree(empty3), 0u);
  EXPECT_EQ(total_color_degree(empty3), 0u);
  auto rainbow = triangle(1, 2, 3);
  EXPECT_EQ(min_color_degree(rainbow), 2u);
  EXPECT_EQ(total_color_degree(rainbow), 6u);
  EXPECT_EQ(min_color_degree(signature(circulant_tournament(7))), 4u);
  EXPECT_THROW(min_color_degree(EdgeColoredGraph(0)), std::invalid_argument);
}

TEST(MonoDegree, Examples) {
  auto k4 = complete(4, true);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(mono_degree(k4, v), 1u);
  EXPECT_EQ(mono_degree_max(k4), 1u);
  EdgeColoredGraph star(6, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}, {0, 4, 3}, {0, 5, 3}});
  EXPECT_EQ(mono_degree(star, 0), 5u);
  // Last vertex of the transitive tournament: all three in-arcs colored 3.
  auto sig = signature(transitive_tournament(4));
  EXPECT_EQ(mono_degree(sig, 3), 3u);
}

TEST(ColorSets, Examples) {
  EdgeColoredGraph isolated(2);
  EXPECT_TRUE(color_set(isolated, 0).empty());
  EdgeColoredGraph path(3, {{0, 1, 1}, {1, 2, 2}});
  std::vector<Vertex> a{0}, c{2};
  EXPECT_TRUE(color_set_between(path, a, c).empty());
  EdgeColoredGraph k22(4, {{0, 2, 1}, {0, 3, 2}, {1, 2, 3}, {1, 3, 4}});
  std::vector<Vertex> top{0, 1}, bottom{2, 3};
  EXPECT_EQ(color_set_between(k22, top, bottom), (std::vector<Color>{1, 2, 3, 4}));
  std::vector<Vertex> overlap{1, 2};
  EXPECT_THROW(color_set_between(k22, top, overlap), std::invalid_argument);
}

TEST(Predicates, Examples) {
  EdgeColoredGraph c4(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {0, 3, 2}});
  EXPECT_TRUE(is_properly_colored(c4, c4.edges()));
  EXPECT_FALSE(is_rainbow(c4, c4.edges()));
  auto sig = signature(directed_cycle(3));
  EXPECT_TRUE(is_properly_colored(sig, sig.edges()));
  EXPECT_TRUE(is_rainbow(sig, sig.edges()));
  std::vector<Edge> foreign{{0, 2, 9}};
  EXPECT_THROW(is_properly_colored(c4, foreign), std::invalid_argument);
  EXPECT_THROW(is_rainbow(c4, foreign), std::invalid_argument);
}

TEST(Predicates, RainbowImpliesProper) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_edge_colored_graph(7, 0.5, 1 + rng.below(6), rng.next());
    std::vector<Edge> subset;
    for (const auto& e : g.edges())
      if (rng.coin(0.5)) subset.push_back(e);
    if (is_rainbow(g, subset)) EXPECT_TRUE(is_properly_colored(g, subset));
  }
}

TEST(Metrics, DegreeInvariantsOnRandomGraphs) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_edge_colored_graph(1 + rng.below(12), rng.uniform(), 1 + rng.below(5),
                                       rng.next());
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto d = g.degree(v), dc = color_degree(g, v), mon = mono_degree(g, v);
      EXPECT_EQ(dc, oracle::count_colors(g, v));
      if (d >= 1) {
        EXPECT_GE(dc, 1u);
        EXPECT_LE(dc, d);
      }
      EXPECT_LE(mon, d);
      EXPECT_GE(dc * mon, d);
    }
  }
}

TEST(SideProper, Examples) {
  // Already first-side proper: unchanged.
  auto g = EdgeColoredGraph::with_prefix_bipartition(4, {{0, 2, 1}, {0, 3, 2}, {1, 2, 2}}, 2);
  EXPECT_EQ(side_proper_subgraph(g, Side::first), g);
  // Three edges of one color at a first-side vertex: keep the smallest.
  auto h = EdgeColoredGraph::with_prefix_bipartition(4, {{0, 1, 5}, {0, 2, 5}, {0, 3, 5}}, 1);
  auto p = side_proper_subgraph(h, Side::first);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.edges()[0], (Edge{0, 1, 5}));
  EXPECT_THROW(side_proper_subgraph(EdgeColoredGraph(2), Side::first), std::invalid_argument);
}

TEST(SideProper, DegreeEqualsColorDegree) {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_bipartite_edge_colored(1 + rng.below(8), 1 + rng.below(8), rng.uniform(),
                                           1 + rng.below(4), rng.next());
    for (Side side : {Side::first, Side::second}) {
      auto p = side_proper_subgraph(g, side);
      for (Vertex v : g.side_vertices(side)) {
        EXPECT_EQ(p.degree(v), color_degree(g, v));
        EXPECT_EQ(color_set(p, v), color_set(g, v));
      }
      for (const auto& e : p.edges()) EXPECT_EQ(g.color(e.u, e.v), e.c);
    }
  }
}

TEST(EdgeCore, Examples) {
  auto rainbow = complete(5, true);
  EXPECT_EQ(edge_critical_core(rainbow), rainbow);
  auto core = edge_critical_core(triangle(2, 2, 2));
  EXPECT_EQ(core.size(), 2u);
  // Ascending scan removes {0,1} first.
  EXPECT_FALSE(core.adjacent(0, 1));
}

TEST(EdgeCore, MatchesRestartScanAndIsCritical) {
  Rng rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = random_edge_colored_graph(2 + rng.below(8), rng.uniform(), 1 + rng.below(4),
                                       rng.next());
    auto core = edge_critical_core(g);
    EXPECT_EQ(core, oracle::naive_core(g));
    for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(color_degree(core, v), color_degree(g, v));
    // Every remaining edge is critical.
    for (const auto& e : core.edges()) {
      std::vector<Edge> rest;
      for (const auto& f : core.edges())
        if (f != e) rest.push_back(f);
      EdgeColoredGraph without(g.order(), rest);
      EXPECT_TRUE(color_degree(without, e.u) < color_degree(core, e.u) ||
                  color_degree(without, e.v) < color_degree(core, e.v));
    }
    // Color classes are unions of vertex-disjoint stars: no path of three
    // same-colored edges and no same-colored triangle.
    std::map<Color, std::vector<Edge>> classes;
    for (const auto& e : core.edges()) classes[e.c].push_back(e);
    for (const auto& [c, es] : classes)
      for (const auto& e : es) {
        bool u_shared = false, v_shared = false;
        for (const auto& f : es) {
          if (f == e) continue;
          u_shared |= f.u == e.u || f.v == e.u;
          v_shared |= f.u == e.v || f.v == e.v;
        }
        EXPECT_FALSE(u_shared && v_shared) << "color " << c << " has a non-star component";
      }
  }
}

TEST(SpanningSubgraph, KeepsBipartitionAndRejectsForeignEdges) {
  auto g = EdgeColoredGraph::with_prefix_bipartition(4, {{0, 2, 1}, {1, 3, 2}}, 2);
  auto h = spanning_subgraph(g, {{1, 3, 2}});
  EXPECT_EQ(h.order(), 4u);
  EXPECT_EQ(h.sides(), g.sides());
  EXPECT_THROW(spanning_subgraph(g, {{1, 3, 1}}), std::invalid_argument);
}
