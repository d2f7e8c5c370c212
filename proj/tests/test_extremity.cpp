#include <gtest/gtest.h>

#include "posa/extremity.hpp"
#include "posa/generators.hpp"
#include "posa/oracle.hpp"
#include "posa/random.hpp"

using namespace posa;

namespace {

const Rational kAlpha(1, 36);

VertexSet range_set(int n, int lo, int hi) {
  VertexSet s(n);
  for (int v = lo; v < hi; ++v) s.insert(v);
  return s;
}

}  // namespace

TEST(IsAlphaExtreme, Examples) {
  Graph p108 = planted_extreme_graph(108);
  ExtremeCheck planted = is_alpha_extreme(p108, range_set(108, 0, 36), kAlpha);
  EXPECT_TRUE(planted);
  EXPECT_EQ(planted.max_internal_degree, 0);

  ExtremeCheck k9 = is_alpha_extreme(complete_graph(9), VertexSet::of(9, {2, 4, 6}), kAlpha);
  EXPECT_FALSE(k9);
  EXPECT_TRUE(k9.size_ok);
  EXPECT_EQ(k9.witness, 2);

  EXPECT_FALSE(is_alpha_extreme(p108, range_set(108, 0, 34), kAlpha));
  EXPECT_THROW(is_alpha_extreme(p108, range_set(108, 0, 3), Rational(0)), std::invalid_argument);
}

TEST(IsAlphaExtreme, ClosedUnderLargeSubsets) {
  Graph g = planted_extreme_graph(216);
  VertexSet s = range_set(216, 0, 72);
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    VertexSet sub = s;
    for (int i = 0; i < 2; ++i) sub.erase(static_cast<Vertex>(rng.below(72)));
    ASSERT_TRUE(is_alpha_extreme(g, s, kAlpha));
    if (sub.size() >= extreme_min_size(216, kAlpha)) EXPECT_TRUE(is_alpha_extreme(g, sub, kAlpha));
  }
}

TEST(FindAlphaExtreme, PlantedSetIsFoundAndTrimmed) {
  Graph g = planted_extreme_graph(108);
  AlphaExtremeSearch r = find_alpha_extreme(g, kAlpha);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->S.size(), 35);
  EXPECT_TRUE(r.certificate->S.is_subset_of(range_set(108, 0, 36)));
  EXPECT_TRUE(is_alpha_extreme(g, r.certificate->S, kAlpha));
}

TEST(FindAlphaExtreme, CompleteGraphHasNone) {
  AlphaExtremeSearch r = find_alpha_extreme(complete_graph(30), kAlpha);
  EXPECT_FALSE(r.certificate);
  EXPECT_TRUE(r.exact);
}

TEST(FindAlphaExtreme, DenseRandomGraphConfirmedExactly) {
  Graph g = random_mindeg_graph(60, 40, 2024);
  // Below n = 108 an extreme set is an independent set of ceil(35n/108) vertices.
  ASSERT_EQ(extreme_max_internal_degree(60, kAlpha), 0);
  AlphaExtremeSearch r = find_alpha_extreme(g, kAlpha);
  EXPECT_FALSE(r.certificate);
  EXPECT_TRUE(r.exact);
  EXPECT_LT(max_independent_set_exact(g).size(), extreme_min_size(60, kAlpha));
}

TEST(FindAlphaExtreme, AgreesWithIndependenceNumberOnSmallGraphs) {
  Rng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng.between(3, 30));
    Graph g = random_mindeg_graph(n, static_cast<int>(rng.between(n / 3, n - 1)), rng.next());
    AlphaExtremeSearch r = find_alpha_extreme(g, kAlpha);
    ASSERT_TRUE(r.certificate || r.exact);
    const bool exists = max_independent_set_exact(g).size() >= extreme_min_size(n, kAlpha);
    EXPECT_EQ(r.certificate.has_value(), exists);
    if (r.certificate) EXPECT_EQ(r.certificate->S.size(), extreme_min_size(n, kAlpha));
  }
}

TEST(IsAlphaBetaExtreme, Examples) {
  Graph p108 = planted_extreme_graph(108);
  // floor(beta n/3) = floor(1/2) = 0 here, so "fewer than 0" core vertices
  // can never hold and no set of this graph is (1/36, 1/72)-extreme.
  AlphaBetaCheck ind = is_alpha_beta_extreme(p108, range_set(108, 0, 36), kAlpha, Rational(1, 72));
  EXPECT_TRUE(ind.size_ok);
  EXPECT_TRUE(ind.core.empty());
  EXPECT_FALSE(ind);
  Graph p216 = planted_extreme_graph(216);
  EXPECT_TRUE(is_alpha_beta_extreme(p216, range_set(216, 0, 72), kAlpha, Rational(1, 72)));

  AlphaBetaCheck clique = is_alpha_beta_extreme(p108, range_set(108, 40, 75), kAlpha, Rational(1, 72));
  EXPECT_FALSE(clique);
  EXPECT_EQ(clique.core.size(), 35);

  AlphaBetaCheck small = is_alpha_beta_extreme(p108, range_set(108, 0, 30), kAlpha, Rational(1, 72));
  EXPECT_FALSE(small.size_ok);
  EXPECT_FALSE(small);
}

TEST(IsAlphaBetaExtreme, NiceVerticesWithoutExtremeSets) {
  Rng rng(41);
  const Rational beta(1, 72);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = static_cast<int>(rng.between(9, 30));
    Graph g = random_mindeg_graph(n, (2 * n + 2) / 3, rng.next());
    AlphaExtremeSearch r = find_alpha_extreme(g, kAlpha);
    ASSERT_TRUE(r.exact || r.certificate);
    if (r.certificate) continue;
    const int size = static_cast<int>(ceil((1 - kAlpha + beta) * Rational(n, 3)));
    for (int s = 0; s < 50; ++s) {
      VertexSet S(n);
      for (int v : rng.subset(n, static_cast<int>(rng.between(size, n)))) S.insert(v);
      EXPECT_FALSE(is_alpha_beta_extreme(g, S, kAlpha, beta));
    }
  }
}

TEST(SpecialSet, Examples) {
  EXPECT_EQ(special_set(complete_graph(5), 0, 0, 0, 0, 0).realized.members(), (std::vector<Vertex>{1, 2, 3, 4}));
  // In C6 squared N(0) ∩ N(1) = {2, 5} and neither lies in N(2).
  Graph c62 = square_cycle_graph(6);
  EXPECT_TRUE(common_neighborhood(c62, {0, 1, 2}).empty());
  EXPECT_TRUE(special_set(c62, 0, 1, 2, 2, 3).realized.empty());
  GraphBuilder b(4);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  EXPECT_TRUE(special_set(b.build(), 0, 1, 2, 1, 3).realized.empty());
}

TEST(SpecialSet, SymmetricInWandX) {
  Graph g = random_mindeg_graph(40, 25, 6);
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    Vertex t[5];
    for (Vertex& a : t) a = static_cast<Vertex>(rng.below(40));
    EXPECT_EQ(special_set(g, t[0], t[1], t[2], t[3], t[4]).realized,
              special_set(g, t[0], t[1], t[3], t[2], t[4]).realized);
  }
}

TEST(ScanSpecialSets, CompleteGraphHasNoViolations) {
  SpecialScanReport r = scan_special_sets(complete_graph(30), kAlpha, Rational(1, 72), ScanMode::exhaustive());
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.stats.tuples, 465LL * 465 * 30);
  EXPECT_GT(r.stats.visited, 0);
}

TEST(ScanSpecialSets, PlantedIndependentNeighbourhoodIsReported) {
  // y = 0 is joined to an independent set I of 12 vertices; everything else is complete.
  const int n = 30;
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const bool in_i = u >= 1 && v <= 12;
      const bool to_y = u == 0 && v > 12;
      if (!in_i && !to_y) b.add_edge(u, v);
    }
  Graph g = b.build();
  ASSERT_EQ(g.neighbors(0), range_set(n, 1, 13));
  // floor(beta n/3) must be positive for any set to qualify at this order.
  const Rational alpha(1, 3), beta(1, 5);
  SpecialScanReport r = scan_special_sets(g, alpha, beta, ScanMode::exhaustive());
  bool seen = false;
  for (const auto& d : r.violations) seen = seen || d.realized == range_set(n, 1, 13);
  EXPECT_TRUE(seen);
  for (const auto& d : r.violations) EXPECT_TRUE(is_alpha_beta_extreme(g, d.realized, alpha, beta));
  EXPECT_TRUE(scan_special_sets(g, kAlpha, Rational(1, 72), ScanMode::exhaustive()).violations.empty());
}

TEST(ScanSpecialSets, SampledModes) {
  Graph g = complete_graph(80);
  EXPECT_TRUE(scan_special_sets(g, kAlpha, Rational(1, 72), ScanMode::sampled(0, 1)).violations.empty());
  SpecialScanReport r = scan_special_sets(g, kAlpha, Rational(1, 72), ScanMode::sampled(500, 9));
  EXPECT_EQ(r.stats.tuples, 500);
  EXPECT_THROW(scan_special_sets(g, kAlpha, Rational(1, 72), ScanMode::exhaustive()), std::invalid_argument);
}
