#include <gtest/gtest.h>

#include "posa/extremal.hpp"
#include "posa/extremity.hpp"
#include "posa/generators.hpp"
#include "posa/random.hpp"
#include "support.hpp"

using namespace posa;

namespace {

VertexSet first_third(int n) {
  VertexSet S(n);
  for (Vertex v = 0; v < n / 3; ++v) S.insert(v);
  return S;
}

// Plain path or cycle check written out independently.
bool plain_walk(const Graph& g, const Sequence& s, bool cyclic) {
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : s) {
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = true;
  }
  const std::size_t len = s.size();
  for (std::size_t i = 0; i + 1 < len; ++i)
    if (!g.adjacent(s[i], s[i + 1])) return false;
  return !cyclic || (len >= 3 && g.adjacent(s.back(), s.front()));
}

bool hamiltonian_square_cycle(const Graph& g, const Sequence& c) {
  return static_cast<int>(c.size()) == g.order() && plain_walk(g, c, true) &&
         testing_support::naive_square(g, c, true);
}

}  // namespace

TEST(ReduceTo3k, Examples) {
  GraphBuilder b(17);
  for (Vertex u = 0; u < 17; ++u)
    for (Vertex v = u + 1; v < 17; ++v)
      if (v >= 5) b.add_edge(u, v);
  Reduction r = reduce_to_3k(b.build());
  EXPECT_EQ(r.removed.size(), 2u);
  EXPECT_EQ(r.reduced.graph.order(), 15);
  EXPECT_GE(r.min_degree, 10);

  Reduction id = reduce_to_3k(planted_extreme_graph(15));
  EXPECT_TRUE(id.removed.empty());
  EXPECT_EQ(id.reduced.graph.order(), 15);

  Reduction k16 = reduce_to_3k(complete_graph(16));
  EXPECT_EQ(k16.reduced.graph.order(), 15);
  EXPECT_EQ(k16.reduced.graph.edge_count(), 105);

  EXPECT_THROW(reduce_to_3k(cycle_graph(9)), std::invalid_argument);
}

TEST(ReduceTo3k, KeepsThePreferredSet) {
  GraphBuilder b(122);
  for (Vertex u = 0; u < 122; ++u)
    for (Vertex v = u + 1; v < 122; ++v)
      if (v >= 40) b.add_edge(u, v);
  const Graph g = b.build();
  const VertexSet S = VertexSet::of(122, std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13,
                                                             14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27,
                                                             28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39});
  Reduction free = reduce_to_3k(g);
  Reduction kept = reduce_to_3k(g, &S);
  EXPECT_EQ(free.reduced.restrict(S).size(), 38);  // degree alone deletes from S
  EXPECT_EQ(kept.reduced.restrict(S).size(), 40);
  EXPECT_GE(3 * kept.min_degree, 2 * 120);
}

TEST(LongPathOrCycle, Examples) {
  PathOrCycle c7 = long_path_or_cycle(cycle_graph(7));
  EXPECT_GE(c7.length(), 4);
  EXPECT_TRUE(plain_walk(cycle_graph(7), c7.seq, c7.cycle));

  GraphBuilder b(4);  // K4 minus a perfect matching
  b.add_edge(0, 2), b.add_edge(0, 3), b.add_edge(1, 2), b.add_edge(1, 3);
  const Graph c4 = b.build();
  PathOrCycle h = long_path_or_cycle(c4);
  EXPECT_TRUE(h.cycle);
  EXPECT_EQ(h.length(), 4);
  EXPECT_TRUE(plain_walk(c4, h.seq, true));

  GraphBuilder two(6);
  two.add_edge(0, 1), two.add_edge(1, 2), two.add_edge(3, 4), two.add_edge(4, 5);
  EXPECT_THROW(long_path_or_cycle(two.build()), std::invalid_argument);
  EXPECT_THROW(long_path_or_cycle(complete_graph(2)), std::invalid_argument);
}

TEST(LongPathOrCycle, RandomGraphsMeetTheBound) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = random_mindeg_graph(30, 3 + static_cast<int>(seed % 12), seed);
    PathOrCycle r = long_path_or_cycle(g);
    EXPECT_TRUE(plain_walk(g, r.seq, r.cycle)) << seed;
    EXPECT_GE(r.length(), std::min(2 * min_degree(g), 30)) << seed;
  }
}

TEST(EvenLongCycle, Examples) {
  const Graph c8 = cycle_graph(8);
  const Sequence full{0, 1, 2, 3, 4, 5, 6, 7};
  EXPECT_EQ(even_long_cycle(c8, full), full);

  const Graph k6 = complete_graph(6);
  Sequence e = even_long_cycle(k6, {0, 1, 2});
  EXPECT_EQ(e.size(), 6u);
  EXPECT_TRUE(plain_walk(k6, e, true));

  EXPECT_THROW(even_long_cycle(complete_graph(7), {0, 1, 2}), std::invalid_argument);
  // Too short for the hypothesis: |C| = 3 is not above 8 - 2.
  EXPECT_THROW(even_long_cycle(c8, {0, 1, 2}), std::invalid_argument);
}

TEST(EvenLongCycle, RandomGraphsMeetParityAndLength) {
  int tested = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_mindeg_graph(24, 8 + static_cast<int>(seed % 8), seed);
    PathOrCycle start = long_path_or_cycle(g);
    Sequence c = start.seq;
    if (!start.cycle) {
      // Close y1 .. yh on the furthest neighbour of the first vertex.
      int h = 0;
      for (int i = 0; i < static_cast<int>(c.size()); ++i)
        if (g.adjacent(c[0], c[i])) h = i;
      c.resize(static_cast<std::size_t>(h + 1));
    }
    if (static_cast<int>(c.size()) <= 24 - min_degree(g)) continue;
    ++tested;
    Sequence e = even_long_cycle(g, c);
    EXPECT_EQ(e.size() % 2, 0u) << seed;
    EXPECT_GE(static_cast<int>(e.size()), std::min(2 * min_degree(g), 24)) << seed;
    EXPECT_TRUE(plain_walk(g, e, true)) << seed;
  }
  EXPECT_GT(tested, 20);
}

TEST(InsertPorts, Examples) {
  const Graph k12 = complete_graph(12);
  const PortSet ports = cyclic_ports({0, 1, 2, 3, 4, 5});
  ASSERT_EQ(ports.ports.size(), 3u);
  InsertionMatching m = insert_ports(k12, VertexSet::of(12, {6, 7, 8}), ports, true);
  ASSERT_EQ(m.pairs.size(), 3u);
  EXPECT_EQ(m.hall_slack, 3);
  Sequence woven = weave(ports, m);
  EXPECT_EQ(woven.size(), 9u);
  EXPECT_TRUE(testing_support::naive_square(k12, woven, true));

  // Port {0,1,2,3} loses every candidate.
  GraphBuilder b = to_builder(k12);
  for (Vertex x : {6, 7, 8}) b.remove_edge(x, 0);
  EXPECT_THROW(insert_ports(b.build(), VertexSet::of(12, {6, 7, 8}), ports), ExtremalError);
  EXPECT_THROW(insert_ports(k12, VertexSet::of(12, {6, 7}), ports), std::invalid_argument);
}

TEST(InsertPorts, PathPortsAndPairsSeeTheirWindows) {
  EXPECT_EQ(path_ports({0, 1, 2, 3, 4, 5}).ports.size(), 2u);
  EXPECT_THROW(path_ports({0, 1, 2}), std::invalid_argument);
  Graph g = random_mindeg_graph(40, 34, 3);
  const Sequence host{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  VertexSet avail(40);
  for (Vertex v = 20; v < 40; ++v) avail.insert(v);
  InsertionMatching m = insert_ports(g, avail, cyclic_ports(host));
  std::vector<bool> used(40, false);
  for (const auto& [x, p] : m.pairs) {
    EXPECT_FALSE(used[x]);
    used[x] = true;
    for (int d = 0; d < 4; ++d) EXPECT_TRUE(g.adjacent(x, host[(2 * p + d) % 10]));
  }
}

TEST(Case2Decompose, TwoDisjointCliquesAreTheComponents) {
  GraphBuilder b(40);
  for (int base : {0, 20})
    for (Vertex u = base; u < base + 20; ++u)
      for (Vertex v = u + 1; v < base + 20; ++v) b.add_edge(u, v);
  const Graph g = b.build();
  Case2Outcome out = case2_decompose(g);
  ASSERT_TRUE(out.split_found);
  EXPECT_FALSE(out.split.connected);
  EXPECT_EQ(out.split.A.size(), 20);
  EXPECT_EQ(out.split.C.size(), 20);
  EXPECT_EQ(edges_between(g, out.split.A, out.split.C), 0);
}

TEST(Case2Decompose, CompleteGraphYieldsALongCycle) {
  const Graph k20 = complete_graph(20);
  Case2Outcome out = case2_decompose(k20);
  EXPECT_FALSE(out.split_found);
  EXPECT_GT(static_cast<int>(out.long_cycle.size()), 20 - 19);
  EXPECT_TRUE(plain_walk(k20, out.long_cycle, true));
}

TEST(Case2Decompose, CliquesThroughAHub) {
  // Cliques on {0..14} and {15..26} and a hub 27 seeing both.
  GraphBuilder b(28);
  for (auto [lo, hi] : {std::pair{0, 15}, std::pair{15, 27}})
    for (Vertex u = lo; u < hi; ++u)
      for (Vertex v = u + 1; v < hi; ++v) b.add_edge(u, v);
  for (Vertex v = 0; v < 27; ++v) b.add_edge(27, v);
  const Graph g = b.build();
  Case2Outcome out = case2_decompose(g);
  ASSERT_TRUE(out.split_found);
  const Case2Split& s = out.split;
  EXPECT_TRUE(s.connected);
  EXPECT_EQ(s.A.size() + s.B.size() + s.C.size(), 28);
  EXPECT_EQ(edges_between(g, s.A, s.C), 0);
  EXPECT_TRUE(s.B.contains(27));
  EXPECT_GE(s.A.size(), s.C.size());
  const int delta = min_degree(g);
  EXPECT_GE(s.A_core.size(), delta);
  EXPECT_GE(s.C_core.size(), delta);
  // Core vertices see nothing beyond their side and the first vertex of B.
  const Vertex yi = s.path[s.A.size()], yj = s.path[s.A.size() + s.B.size() - 1];
  s.A_core.for_each([&](Vertex a) {
    VertexSet beyond = g.neighbors(a) - s.A;
    beyond.erase(yi);
    EXPECT_TRUE(beyond.empty());
  });
  s.C_core.for_each([&](Vertex c) {
    VertexSet beyond = g.neighbors(c) - s.C;
    beyond.erase(yj);
    EXPECT_TRUE(beyond.empty());
  });
}

TEST(Bridges, PlantedCaseTwoInstance) {
  const Graph g = planted_case2_graph(120, false);
  const VertexSet S = first_third(120);
  // A and C as planted: the two cliques of T.
  VertexSet A(120), C(120);
  for (Vertex v = 42; v < 81; ++v) A.insert(v);
  for (Vertex v = 81; v < 120; ++v) C.insert(v);
  Bridges br = find_square_p5_bridges(g, S, A, A, C, C);
  EXPECT_TRUE(testing_support::naive_square(g, br.Q, false));
  EXPECT_TRUE(testing_support::naive_square(g, br.Qp, false));
  for (Vertex u : br.Q)
    for (Vertex v : br.Qp) EXPECT_NE(u, v);
  EXPECT_TRUE(A.contains(br.Q[0]) && A.contains(br.Q[1]) && C.contains(br.Q[4]) && C.contains(br.Q[5]));
  EXPECT_TRUE(C.contains(br.Qp[0]) && C.contains(br.Qp[1]) && A.contains(br.Qp[4]) && A.contains(br.Qp[5]));
  EXPECT_FALSE(g.adjacent(br.x, br.xp));

  VertexSet joined = A;
  joined.insert(0);
  EXPECT_THROW(find_square_p5_bridges(g, S, joined, A, C, C), std::invalid_argument);  // 0 sees C
  EXPECT_THROW(find_square_p5_bridges(g, VertexSet(120), A, A, C, C), std::invalid_argument);
}

TEST(HamConnectedPath, Examples) {
  SearchResult<Sequence> r = ham_connected_path(complete_graph(8), 0, 7, VertexSet::of(8, {3}));
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.value.size(), 7u);
  EXPECT_EQ(r.value.front(), 0);
  EXPECT_EQ(r.value.back(), 7);
  EXPECT_TRUE(plain_walk(complete_graph(8), r.value, false));

  // Below the degree regime any outcome is allowed, but a path must be real.
  SearchResult<Sequence> c5 = ham_connected_path(cycle_graph(5), 0, 1, VertexSet(5));
  if (c5.found()) EXPECT_TRUE(plain_walk(cycle_graph(5), c5.value, false) && c5.value.size() == 5u);

  GraphBuilder star(5);
  for (Vertex v = 1; v < 5; ++v) star.add_edge(0, v);
  EXPECT_EQ(ham_connected_path(star.build(), 1, 2, VertexSet(5)).status, SearchStatus::proven_absent);
  EXPECT_THROW(ham_connected_path(complete_graph(4), 1, 1, VertexSet(4)), std::invalid_argument);
}

TEST(HamConnectedPath, DenseRandomGraphs) {
  Rng rng(5);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = random_mindeg_graph(40, 24, seed);
    const Vertex s = static_cast<Vertex>(rng.below(40));
    Vertex t = static_cast<Vertex>(rng.below(39));
    if (t >= s) ++t;
    SearchResult<Sequence> r = ham_connected_path(g, s, t, VertexSet(40), {}, seed);
    ASSERT_TRUE(r.found()) << seed;
    EXPECT_EQ(r.value.size(), 40u);
    EXPECT_EQ(r.value.front(), s);
    EXPECT_EQ(r.value.back(), t);
    EXPECT_TRUE(plain_walk(g, r.value, false));
  }
}

TEST(ExtremalHsc, PlantedFifteenUsesTheSmallBranch) {
  const Graph g = planted_extreme_graph(15);
  ExtremalRun r = extremal_hsc(g, first_third(15));
  EXPECT_EQ(r.report.branch, "small-k");
  EXPECT_TRUE(hamiltonian_square_cycle(g, r.cycle));
  EXPECT_TRUE(testing_support::naive_has_hsc(planted_extreme_graph(9)));
}

TEST(ExtremalHsc, PlantedOneTwentyTrimsAndCompletes) {
  const Graph g = planted_extreme_graph(120);
  ExtremalRun r = extremal_hsc(g, first_third(120));
  EXPECT_EQ(r.report.s_size, 39);
  EXPECT_EQ(r.report.k, 40);
  EXPECT_TRUE(r.report.branch == "case1" || r.report.branch.starts_with("case2"));
  EXPECT_GE(r.report.t0_size, 2 * (40 / 6) - 1);
  EXPECT_LE(r.report.t0_size, 2 * (40 / 6));
  EXPECT_GE(r.report.hall_slack, 0);
  EXPECT_GT(3 * r.report.woven, 2 * 120);
  EXPECT_TRUE(hamiltonian_square_cycle(g, r.cycle));
}

TEST(ExtremalHsc, CaseTwoBranches) {
  for (bool joined : {false, true}) {
    const Graph g = planted_case2_graph(120, joined);
    ExtremalRun r = extremal_hsc(g, first_third(120));
    EXPECT_EQ(r.report.branch, joined ? "case2-connected" : "case2-disconnected");
    EXPECT_GE(r.report.a_core, r.report.m);
    EXPECT_GE(r.report.c_core, r.report.m);
    EXPECT_GE(r.report.woven, 3 * r.report.m - 1);
    EXPECT_TRUE(hamiltonian_square_cycle(g, r.cycle));
  }
}

TEST(ExtremalHsc, PerturbedAndRelabelledInstances) {
  for (int n : {45, 111, 150}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      Graph g = perturbed_planted_graph(n, seed);
      ASSERT_GE(3 * min_degree(g), 2 * n);
      ASSERT_TRUE(is_alpha_extreme(g, first_third(n), kExtremalAlpha));
      std::vector<Vertex> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      Rng rng(seed);
      rng.shuffle(perm);
      const Graph h = relabel(g, perm);
      VertexSet S(n);
      for (Vertex v = 0; v < n / 3; ++v) S.insert(perm[v]);
      ExtremalRun r = extremal_hsc(h, S, {}, seed);
      EXPECT_TRUE(hamiltonian_square_cycle(h, r.cycle)) << n << " " << seed;
    }
  }
}

TEST(ExtremalHsc, OrdersNotDivisibleByThree) {
  int ran = 0;
  for (int n : {16, 17, 121, 122, 124, 125}) {
    GraphBuilder b(n);
    const int k = n / 3;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (v >= k) b.add_edge(u, v);
    const Graph g = b.build();
    if (3 * min_degree(g) < 2 * n) continue;
    VertexSet S(n);
    for (Vertex v = 0; v < k; ++v) S.insert(v);
    if (!is_alpha_extreme(g, S, kExtremalAlpha)) continue;
    ExtremalRun r = extremal_hsc(g, S);
    EXPECT_EQ(static_cast<int>(r.report.removed.size()), n % 3);
    EXPECT_TRUE(hamiltonian_square_cycle(g, r.cycle)) << n;
    ++ran;
  }
  EXPECT_EQ(ran, 4);  // at 16 and 17 an independent third is too small
}

TEST(ExtremalHsc, RejectsBrokenPreconditions) {
  EXPECT_THROW(extremal_hsc(complete_graph(9), VertexSet::of(9, {0, 1, 2})), std::invalid_argument);
  EXPECT_THROW(extremal_hsc(cycle_graph(9), VertexSet::of(9, {0, 3, 6})), std::invalid_argument);
}
