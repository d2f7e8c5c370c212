#include <gtest/gtest.h>

#include "posa/generators.hpp"
#include "posa/oracle.hpp"
#include "posa/pathcover.hpp"
#include "posa/random.hpp"

using namespace posa;

namespace {

const Rational kEps(1, 500);

void expect_disjoint(int n, const Sequence& a, const Sequence& b) {
  VertexSet seen(n);
  for (Vertex v : a) seen.insert(v);
  for (Vertex v : b) EXPECT_FALSE(seen.contains(v)) << v;
}

}  // namespace

TEST(LongestSquarePath, Examples) {
  LongPathResult k12 = longest_square_path(complete_graph(12), kEps);
  EXPECT_EQ(k12.path.size(), 12U);
  EXPECT_TRUE(k12.bound_met);

  Graph k444 = tripartite_graph(12);
  LongPathResult t = longest_square_path(k444, kEps);
  EXPECT_TRUE(verify_square_path(k444, t.path));
  EXPECT_GE(t.path.size(), 6U);  // ceil((1/2 - 3/500) * 12) = 6
  EXPECT_EQ(t.path.size(), optimal_square_path_exact(k444).size());

  LongPathResult one = longest_square_path(complete_graph(1), kEps);
  EXPECT_EQ(one.path, (Sequence{0}));
}

TEST(LongestSquarePath, MeetsTheBoundOnDenseGraphs) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const int n = 120 + 30 * static_cast<int>(seed);
    Graph g = random_mindeg_graph(n, (2 * n) / 3 - 1, seed);
    LongPathResult r = longest_square_path(g, kEps, {}, seed);
    EXPECT_TRUE(verify_square_path(g, r.path));
    EXPECT_TRUE(r.bound_met) << n << " got " << r.path.size();
  }
}

TEST(ImproveSquarePath, M1MoveSplicesAtTheFirstConsecutivePair) {
  // P = 0..9 squared. x = 10 sees 2, 3, 4; y = 11 sees x and 2; 12 and 13
  // continue the square path from xy. No end of P can be extended.
  GraphBuilder b(14);
  for (int i = 0; i < 10; ++i)
    for (int d = 1; d <= 2; ++d)
      if (i + d < 10) b.add_edge(i, i + d);
  for (int v : {2, 3, 4, 11, 12}) b.add_edge(10, v);
  for (int v : {2, 12, 13}) b.add_edge(11, v);
  b.add_edge(12, 13);
  Graph g = b.build();
  Sequence start{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  LongPathResult r = improve_square_path(g, start, Rational(1, 10));
  EXPECT_EQ(r.path, (Sequence{13, 12, 11, 10, 2, 3, 4, 5, 6, 7, 8, 9}));
  ASSERT_FALSE(r.log.empty());
  EXPECT_EQ(r.log[0], "m1 x=11 i=3 q=2 |P'|=4");
  EXPECT_THROW(improve_square_path(g, {0, 5}, Rational(1, 10)), std::invalid_argument);
}

TEST(CoverTwoPaths, CompleteGraphNeedsOnePath) {
  CoverResult r = cover_two_paths(complete_graph(15), kEps);
  EXPECT_EQ(r.p1.size(), 15U);
  EXPECT_TRUE(r.p2.empty());
  EXPECT_EQ(r.route, "p1-alone");
  EXPECT_TRUE(r.bound_met);
  EXPECT_FALSE(r.regime);
}

TEST(CoverTwoPaths, SparselyThinnedCompleteGraph) {
  Rng rng(4);
  GraphBuilder b = to_builder(complete_graph(20));
  for (int k = 0; k < 40; ++k) {
    const Vertex u = static_cast<Vertex>(rng.below(20)), v = static_cast<Vertex>(rng.below(20));
    if (u == v || !b.has_edge(u, v) || b.degree(u) <= 14 || b.degree(v) <= 14) continue;
    b.remove_edge(u, v);
  }
  Graph g = b.build();
  ASSERT_GE(Rational(min_degree(g)), (Rational(2, 3) - kEps) * 20);
  CoverResult r = cover_two_paths(g, kEps);
  EXPECT_TRUE(verify_square_path(g, r.p1));
  if (!r.p2.empty()) EXPECT_TRUE(verify_square_path(g, r.p2));
  expect_disjoint(20, r.p1, r.p2);
  EXPECT_EQ(r.sum, static_cast<int>(r.p1.size() + r.p2.size()));
}

TEST(CoverTwoPaths, RandomGraphsGiveDisjointVerifiedPaths) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const int n = 200 + 50 * static_cast<int>(seed);
    const int delta = static_cast<int>(ceil((Rational(2, 3) - kEps) * n));
    Graph g = random_mindeg_graph(n, delta, seed);
    CoverResult r = cover_two_paths(g, kEps, {}, seed);
    EXPECT_TRUE(verify_square_path(g, r.p1));
    if (!r.p2.empty()) EXPECT_TRUE(verify_square_path(g, r.p2));
    expect_disjoint(n, r.p1, r.p2);
    EXPECT_TRUE(r.bound_met) << n << ": " << r.sum;
  }
}
