#include <gtest/gtest.h>

#include "posa/generators.hpp"
#include "posa/random.hpp"
#include "posa/reservoir.hpp"
#include "support.hpp"

using namespace posa;

TEST(DeriveParams, PaperConstants) {
  const ReservoirParams p = derive_params(Rational(1, 36));
  EXPECT_EQ(p.c, Rational(1, 14));
  EXPECT_EQ(p.alpha_prime, Rational(11, 504));
  EXPECT_EQ(p.beta_prime, Rational(1, 504));
  EXPECT_EQ(p.epsilon, Rational(50, 1057 * 36));
  EXPECT_EQ(p.epsilon, Rational(25, 19026));
  EXPECT_EQ(p.gamma, Rational(1, 246));
  EXPECT_EQ(p.rho, Rational(3096, 15805));
  EXPECT_TRUE(p.faithful);
  EXPECT_THROW(derive_params(Rational(0)), std::invalid_argument);
  EXPECT_THROW(derive_params(Rational(1)), std::invalid_argument);
}

TEST(DeriveParams, EveryHypothesisHoldsAtPaperOrder) {
  for (const ConstantCheck& c : check_constants(derive_params(Rational(1, 36)), kN0))
    EXPECT_TRUE(c.holds) << c.name << ": " << c.detail;
}

TEST(DeriveParams, SmallOrderBreaksTheSizeHypotheses) {
  int failing = 0;
  for (const ConstantCheck& c : check_constants(derive_params(Rational(1, 36)), 100'000)) failing += !c.holds;
  EXPECT_GT(failing, 0);
}

TEST(CheckWeak, Examples) {
  Graph k5 = complete_graph(5);
  for (int eps_den : {2, 10, 1000})
    EXPECT_TRUE(check_weak(k5, k5.all(), Rational(1, eps_den), Rational(1)).ok);

  GraphBuilder star(5);
  for (Vertex leaf = 1; leaf < 5; ++leaf) star.add_edge(0, leaf);
  WeakCheck s = check_weak(star.build(), VertexSet::of(5, {0}), Rational(1, 10));
  EXPECT_FALSE(s.ok);
  EXPECT_LT(s.worst_slack, 0);

  // A member of R sees only 2 of the 3 reservoir vertices, below
  // (9/10 - 1/5) * 3 = 2.1, so eps = 1/5 is too tight and 3/10 suffices.
  Graph k10 = complete_graph(10);
  WeakCheck tight = check_weak(k10, VertexSet::of(10, {0, 1, 2}), Rational(1, 5), Rational(3, 10));
  EXPECT_FALSE(tight.ok);
  EXPECT_TRUE(tight.size_ok);
  EXPECT_LE(tight.worst, 2);
  EXPECT_NEAR(tight.worst_slack, -0.1, 1e-12);
  EXPECT_TRUE(check_weak(k10, VertexSet::of(10, {0, 1, 2}), Rational(3, 10), Rational(3, 10)).ok);
  EXPECT_TRUE(check_weak(k10, VertexSet::of(10, {3, 5, 9}), Rational(3, 10)).ok);
  // Size check against the declared rho.
  EXPECT_FALSE(check_weak(k10, VertexSet::of(10, {3, 5}), Rational(3, 10), Rational(3, 10)).ok);
}

TEST(CheckWeak, WholeVertexSetIsAlwaysWeak) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = random_mindeg_graph(25, 12, seed);
    EXPECT_TRUE(check_weak(g, g.all(), Rational(1, 1000), Rational(1)).ok);
  }
}

TEST(CheckSpecialProperties, FullReservoirMeetsBothCaps) {
  Graph g = complete_graph(30);
  const ReservoirParams p = exploratory_params(Rational(1, 36), Rational(1, 10), Rational(1));
  ReservoirCertificate c = check_special_properties(g, g.all(), p, ScanMode::exhaustive());
  EXPECT_TRUE(c.ok());
  EXPECT_FALSE(c.probabilistic);
  EXPECT_GE(c.margins.ii_b, 0);
  EXPECT_GT(c.stats.visited, 0);
}

TEST(CheckSpecialProperties, EmptyScanIsVacuous) {
  Graph g = complete_graph(30);
  const ReservoirParams p = exploratory_params(Rational(1, 36), Rational(1, 10), Rational(1, 4));
  ReservoirCertificate c =
      check_special_properties(g, VertexSet::of(30, {0, 1, 2, 3, 4, 5, 6, 7}), p, ScanMode::sampled(0, 1));
  EXPECT_TRUE(c.prop_ii_ok());
  EXPECT_TRUE(c.prop_iii_ok);
  EXPECT_TRUE(c.probabilistic);
  EXPECT_EQ(c.stats.tuples, 0);
}

TEST(CheckSpecialProperties, RefusesExhaustiveScanOnLargeGraphs) {
  Graph g = complete_graph(61);
  EXPECT_THROW(check_special_properties(g, g.all(), derive_params(Rational(1, 36)), ScanMode::exhaustive()),
               std::invalid_argument);
}

TEST(CheckSpecialProperties, AgreesWithTupleEnumeration) {
  const ReservoirParams p =
      exploratory_params(Rational(1, 36), Rational(1, 5), Rational(1, 4), Rational(5, 4), Rational(1, 5));
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const int n = 14 + static_cast<int>(seed);
    Graph g = random_mindeg_graph(n, (2 * n + 2) / 3, seed);
    Rng rng(seed);
    std::vector<int> r = rng.subset(n, reservoir_size(n, p.rho));
    ReservoirCertificate c = check_special_properties(g, VertexSet::of(n, r), p, ScanMode::exhaustive());
    testing_support::NaiveReservoir ref = testing_support::naive_reservoir(
        g, r, p.alpha_prime, p.beta_prime, p.epsilon, p.rho, p.cap_ii, p.gamma);
    EXPECT_EQ(c.weak_ok, ref.weak);
    EXPECT_EQ(c.prop_ii_a_ok, ref.ii_a);
    EXPECT_EQ(c.prop_ii_b_ok, ref.ii_b);
    EXPECT_EQ(c.prop_iii_ok, ref.iii);
    EXPECT_DOUBLE_EQ(c.margins.ii_a, ref.m_ii_a);
    EXPECT_DOUBLE_EQ(c.margins.ii_b, ref.m_ii_b);
    EXPECT_DOUBLE_EQ(c.margins.iii, ref.m_iii);
  }
}

TEST(BuildSpecialReservoir, CompleteGraphNeedsTheRelaxedCap) {
  Graph k60 = complete_graph(60);
  const ScanMode scan = ScanMode::exhaustive();
  // The 1.05 cap cannot hold: S = V minus four vertices avoiding R.
  const ReservoirParams strict = exploratory_params(Rational(1, 36), Rational(1, 10), Rational(1, 4));
  ReservoirSearch a = build_special_reservoir(k60, strict, 5, 11, scan);
  EXPECT_FALSE(a.found);
  EXPECT_EQ(a.attempts, 5);
  EXPECT_FALSE(a.certificate.prop_ii_a_ok);
  EXPECT_TRUE(a.certificate.weak_ok);

  const ReservoirParams relaxed =
      exploratory_params(Rational(1, 36), Rational(1, 10), Rational(1, 4), Rational(5, 4), Rational(1, 4));
  ReservoirSearch b = build_special_reservoir(k60, relaxed, 100, 11, scan);
  EXPECT_TRUE(b.found);
  EXPECT_EQ(b.certificate.R.size(), 15);
  EXPECT_TRUE(b.certificate.ok());
}

TEST(BuildSpecialReservoir, ZeroRetriesFails) {
  Graph g = complete_graph(20);
  ReservoirSearch s = build_special_reservoir(g, derive_params(Rational(1, 36)), 0, 1, ScanMode::exhaustive());
  EXPECT_FALSE(s.found);
  EXPECT_EQ(s.attempts, 0);
}

TEST(BuildSpecialReservoir, DeterministicForSeed) {
  Graph g = random_mindeg_graph(40, 27, 5);
  const ReservoirParams p =
      exploratory_params(Rational(1, 36), Rational(1, 5), Rational(1, 4), Rational(3, 2), Rational(1, 2));
  ReservoirSearch a = build_special_reservoir(g, p, 20, 42, ScanMode::sampled(2000, 9));
  ReservoirSearch b = build_special_reservoir(g, p, 20, 42, ScanMode::sampled(2000, 9));
  EXPECT_EQ(a.found, b.found);
  EXPECT_EQ(a.attempts, b.attempts);
  EXPECT_EQ(a.certificate.R, b.certificate.R);
}

TEST(BuildSpecialReservoir, OrderThirtyIsFullyCertified) {
  Graph g = random_mindeg_graph(30, 20, 8);
  const ReservoirParams p =
      exploratory_params(Rational(1, 36), Rational(1, 5), Rational(1, 4), Rational(3, 2), Rational(1, 2));
  ReservoirSearch s = build_special_reservoir(g, p, 30, 3, ScanMode::exhaustive());
  EXPECT_FALSE(s.certificate.probabilistic);
  if (s.found) {
    NonExtremeVerdict v = special_reservoir_implies_nonextreme(g, s.certificate.R, p, ScanMode::exhaustive());
    EXPECT_TRUE(v.ok);
    EXPECT_TRUE(v.chain_ok);
  }
}

TEST(SpecialReservoirImpliesNonextreme, ViolatedPropertyThreeIsReported) {
  // R = an independent set inside the planted side: every trace S∩R is
  // edgeless, so no vertex of S∩R has the required internal degree.
  Graph g = planted_extreme_graph(30);
  const ReservoirParams p =
      exploratory_params(Rational(1, 36), Rational(1, 5), Rational(1, 4), Rational(3, 2), Rational(1, 2));
  VertexSet R = VertexSet::of(30, {0, 1, 2, 3, 4, 5, 6, 7});
  NonExtremeVerdict v = special_reservoir_implies_nonextreme(g, R, p, ScanMode::exhaustive());
  EXPECT_FALSE(v.ok);
  EXPECT_FALSE(v.chain_ok);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_FALSE(check_special_properties(g, R, p, ScanMode::exhaustive()).prop_iii_ok);
}

TEST(SpecialReservoirImpliesNonextreme, VacuousWithoutQualifyingSets) {
  Graph g = complete_graph(20);
  NonExtremeVerdict v = special_reservoir_implies_nonextreme(g, g.all(), derive_params(Rational(1, 36)),
                                                             ScanMode::sampled(0, 0));
  EXPECT_TRUE(v.ok);
  EXPECT_EQ(v.qualifying, 0);
}
