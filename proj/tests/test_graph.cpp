#include <gtest/gtest.h>

#include "posa/generators.hpp"
#include "posa/graph.hpp"
#include "posa/random.hpp"

using namespace posa;

TEST(LoadGraph, Triangle) {
  Graph g = load_graph("p sq 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  ASSERT_EQ(g.order(), 3);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.degrees(), (std::vector<int>{2, 2, 2}));
}

TEST(LoadGraph, EdgelessAndComments) {
  Graph g = load_graph("c two isolated vertices\np sq 2 0\n");
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(min_degree(g), 0);
}

TEST(LoadGraph, Errors) {
  auto line_of = [](const char* text) {
    try {
      load_graph(text);
    } catch (const GraphFormatError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("p sq 3 1\ne 1 1\n"), 2);
  EXPECT_EQ(line_of("p sq 3 1\ne 1 4\n"), 2);
  EXPECT_EQ(line_of("p sq 3 2\ne 1 2\ne 2 1\n"), 3);
  EXPECT_EQ(line_of("p sq 3 2\ne 1 2\n"), 2);
  EXPECT_EQ(line_of("p sq 3 1\ne 1 x\n"), 2);
  EXPECT_EQ(line_of("e 1 2\n"), 1);
  EXPECT_EQ(line_of(""), 0);
}

TEST(LoadGraph, RoundTrip) {
  Graph g = random_mindeg_graph(25, 12, 7);
  Graph h = load_graph(format_graph(g, "round trip"));
  ASSERT_EQ(h.order(), g.order());
  for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(h.neighbors(v), g.neighbors(v));
}

TEST(CommonNeighborhood, Examples) {
  EXPECT_EQ(common_neighborhood(complete_graph(5), {0, 1}).members(), (std::vector<Vertex>{2, 3, 4}));
  EXPECT_EQ(common_neighborhood(path_graph(3), {0, 2}).members(), (std::vector<Vertex>{1}));
  EXPECT_EQ(common_neighborhood(square_cycle_graph(6), {0, 3}).members(), (std::vector<Vertex>{1, 2, 4, 5}));
  EXPECT_THROW(common_neighborhood(complete_graph(3), {5}), std::out_of_range);
}

TEST(CommonNeighborhood, RepeatsAndSingletons) {
  Graph g = random_mindeg_graph(30, 10, 3);
  for (Vertex v = 0; v < g.order(); ++v) {
    EXPECT_EQ(common_neighborhood(g, {v}), g.neighbors(v));
    EXPECT_EQ(common_neighborhood(g, {v, v, v}).size(), g.degree(v));
  }
}

TEST(EdgesBetween, Examples) {
  Graph k4 = complete_graph(4);
  VertexSet a = VertexSet::of(4, {0, 1});
  VertexSet b = VertexSet::of(4, {2, 3});
  EXPECT_EQ(edges_between(k4, a, b), 4);
  EXPECT_EQ(edges_between(k4, a, b, EdgeMode::complement), 0);
  Graph c5 = cycle_graph(5);
  EXPECT_EQ(edges_between(c5, VertexSet::of(5, {0}), VertexSet::of(5, {1, 2, 3, 4})), 2);
}

TEST(EdgesBetween, AgreesWithPairCount) {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.between(1, 70));
    Graph g = random_mindeg_graph(n, static_cast<int>(rng.between(0, n - 1)), rng.next());
    VertexSet a(n), b(n);
    for (Vertex v = 0; v < n; ++v) {
      if (rng.chance(0.5)) a.insert(v);
      if (rng.chance(0.5)) b.insert(v);
    }
    long long adj = 0, non = 0;
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = x + 1; y < n; ++y) {
        const bool crosses = (a.contains(x) && b.contains(y)) || (a.contains(y) && b.contains(x));
        if (!crosses) continue;
        (g.adjacent(x, y) ? adj : non) += 1;
      }
    EXPECT_EQ(edges_between(g, a, b), adj);
    EXPECT_EQ(edges_between(g, a, b, EdgeMode::complement), non);
    VertexSet bd = b - a;
    EXPECT_EQ(edges_between(g, a, bd) + edges_between(g, a, bd, EdgeMode::complement),
              1LL * a.size() * bd.size());
  }
}

TEST(Graph, DegreeSumIsTwiceEdges) {
  Graph g = random_mindeg_graph(90, 40, 5);
  long long sum = 0;
  for (int d : g.degrees()) sum += d;
  EXPECT_EQ(sum, 2 * g.edge_count());
  EXPECT_EQ(sum, 2 * edges_between(g, g.all(), g.all()));
}

TEST(Induced, Examples) {
  Graph k3 = induced(complete_graph(5), VertexSet::of(5, {0, 1, 2})).graph;
  EXPECT_EQ(k3.order(), 3);
  EXPECT_EQ(k3.edge_count(), 3);
  auto sub = induced(square_cycle_graph(6), VertexSet::of(6, {0, 1, 2}));
  EXPECT_EQ(sub.graph.edge_count(), 3);
  EXPECT_EQ(sub.to_host, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(induced(complete_graph(4), VertexSet(4)).graph.order(), 0);
}

TEST(Induced, DegreesNeverExceedHost) {
  Graph g = random_mindeg_graph(40, 20, 9);
  Rng rng(2);
  VertexSet s(40);
  for (int v : rng.subset(40, 17)) s.insert(v);
  auto sub = induced(g, s);
  for (Vertex v = 0; v < sub.graph.order(); ++v) {
    EXPECT_LE(sub.graph.degree(v), g.degree(sub.host(v)));
    EXPECT_EQ(sub.graph.degree(v), g.neighbors(sub.host(v)).intersection_size(s));
  }
  EXPECT_EQ(sub.restrict(s), sub.graph.all());
  EXPECT_EQ(sub.lift(sub.graph.all(), 40), s);
}

TEST(MinDegree, Examples) {
  EXPECT_EQ(min_degree(complete_graph(7)), 6);
  EXPECT_EQ(min_degree(tight_graph(2)), 5);
  GraphBuilder star(5);
  for (Vertex v = 1; v < 5; ++v) star.add_edge(0, v);
  EXPECT_EQ(min_degree(star.build()), 1);
  EXPECT_THROW(min_degree(Graph{}), std::invalid_argument);
}

TEST(VertexSet, Iteration) {
  VertexSet s = VertexSet::of(130, {0, 63, 64, 127, 129});
  EXPECT_EQ(s.size(), 5);
  EXPECT_EQ(s.first(), 0);
  EXPECT_EQ(s.next(0), 63);
  EXPECT_EQ(s.next(64), 127);
  EXPECT_EQ(s.next(129), -1);
  EXPECT_EQ(s.complement().size(), 125);
  EXPECT_EQ(VertexSet::full(130).size(), 130);
  EXPECT_EQ(VertexSet::full(128).complement().size(), 0);
}
