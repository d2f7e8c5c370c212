#include "posa/generators.hpp"

#include <stdexcept>

#include "posa/random.hpp"

namespace posa {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph complete_graph(int n) {
  require(n >= 0, "negative order");
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

Graph path_graph(int n) {
  require(n >= 1, "path needs a vertex");
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

Graph square_cycle_graph(int n) {
  require(n >= 3, "square cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v)
    for (int d = 1; d <= 2; ++d)
      if ((v + d) % n != v) b.add_edge(v, (v + d) % n);
  return b.build();
}

Graph tight_graph(int t) {
  require(t >= 1, "tight family needs t >= 1");
  GraphBuilder b(3 * t + 2);
  for (Vertex u = 0; u < 3 * t + 2; ++u)
    for (Vertex v = u + 1; v < 3 * t + 2; ++v)
      if (v > t) b.add_edge(u, v);
  return b.build();
}

Graph planted_extreme_graph(int n) {
  require(n >= 3 && n % 3 == 0, "planted-extreme order must be a positive multiple of 3");
  const int k = n / 3;
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (v >= k) b.add_edge(u, v);
  return b.build();
}

Graph planted_case2_graph(int n, bool connected) {
  require(n % 3 == 0 && n / 3 >= 37, "case-2 planted order must be a multiple of 3 with n/3 >= 37");
  const int k = n / 3;
  const Vertex hub0 = k, hub1 = k + 1;
  const int a_size = k - 1;
  const Vertex a0 = k + 2, c0 = a0 + a_size, c_end = connected ? n - 1 : n;
  GraphBuilder b(n);
  for (Vertex x = 0; x + 1 < k; x += 2) b.add_edge(x, x + 1);
  for (Vertex x = 0; x < k; ++x) {
    const bool matched = x + 1 < k || k % 2 == 0;
    for (Vertex y = k; y < n; ++y)
      if (!matched || y != (x % 2 == 0 ? hub0 : hub1)) b.add_edge(x, y);
  }
  const auto clique = [&](Vertex lo, Vertex hi) {
    for (Vertex u = lo; u < hi; ++u)
      for (Vertex v = u + 1; v < hi; ++v) b.add_edge(u, v);
  };
  clique(a0, c0);
  clique(c0, c_end);
  for (Vertex hub : {hub0, hub1})
    for (Vertex y = k; y < n; ++y)
      if (y != hub) b.add_edge(hub, y);
  if (connected)
    for (Vertex y = k; y < n - 1; ++y) b.add_edge(n - 1, y);
  return b.build();
}

Graph perturbed_planted_graph(int n, std::uint64_t seed) {
  require(n >= 3 && n % 3 == 0, "planted order must be a positive multiple of 3");
  const int k = n / 3;
  // Largest internal degree below k/36.
  const int cap = (k + 35) / 36 - 1;
  Rng rng(seed);
  GraphBuilder b = to_builder(planted_extreme_graph(n));
  const int want = 2 * k;
  std::vector<int> inner(static_cast<std::size_t>(k), 0);
  for (int tries = 0; tries < 4 * k * cap; ++tries) {
    const Vertex u = static_cast<Vertex>(rng.below(k)), v = static_cast<Vertex>(rng.below(k));
    if (u == v || b.has_edge(u, v) || inner[u] >= cap || inner[v] >= cap) continue;
    b.add_edge(u, v);
    ++inner[u], ++inner[v];
  }
  // Each inner edge at x pays for one S-T edge at x.
  for (Vertex x = 0; x < k; ++x)
    for (int tries = 0; tries < 8 && b.degree(x) > want; ++tries) {
      const Vertex y = k + static_cast<Vertex>(rng.below(2 * k));
      if (b.has_edge(x, y) && b.degree(y) > want) b.remove_edge(x, y);
    }
  const long long drops = rng.below(static_cast<std::uint64_t>(k) * k / 2 + 1);
  for (long long i = 0; i < drops; ++i) {
    const Vertex u = k + static_cast<Vertex>(rng.below(2 * k)), v = k + static_cast<Vertex>(rng.below(2 * k));
    if (u != v && b.has_edge(u, v) && b.degree(u) > want && b.degree(v) > want) b.remove_edge(u, v);
  }
  return b.build();
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  const int n = g.order();
  require(static_cast<int>(perm.size()) == n, "permutation has the wrong length");
  VertexSet seen(n);
  for (Vertex v : perm) {
    require(v >= 0 && v < n && !seen.contains(v), "not a permutation");
    seen.insert(v);
  }
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    g.neighbors(u).for_each([&](Vertex v) {
      if (u < v) b.add_edge(perm[u], perm[v]);
    });
  return b.build();
}

Graph tripartite_graph(int n) {
  require(n >= 1, "tripartite needs a vertex");
  GraphBuilder b(n);
  const auto part = [n](Vertex v) { return static_cast<int>(3LL * v / n); };
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part(u) != part(v)) b.add_edge(u, v);
  return b.build();
}

Graph random_mindeg_graph(int n, int delta, std::uint64_t seed) {
  require(n >= 1, "random graph needs a vertex");
  require(delta >= 0 && delta <= n - 1, "minimum degree out of range");
  Rng rng(seed);
  GraphBuilder b(n);
  const double p = n > 1 ? static_cast<double>(delta) / (n - 1) : 0.0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(p)) b.add_edge(u, v);
  std::vector<Vertex> pool;
  for (Vertex u = 0; u < n; ++u) {
    if (b.degree(u) >= delta) continue;
    // Prefer partners that are deficient themselves, so repairs stay sparse.
    pool.clear();
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
      if (v == u || b.has_edge(u, v)) continue;
      (b.degree(v) < delta ? pool : rest).push_back(v);
    }
    rng.shuffle(pool);
    rng.shuffle(rest);
    pool.insert(pool.end(), rest.begin(), rest.end());
    for (Vertex v : pool) {
      if (b.degree(u) >= delta) break;
      b.add_edge(u, v);
    }
  }
  return b.build();
}

Family parse_family(const std::string& name) {
  if (name == "random-mindeg") return Family::random_mindeg;
  if (name == "tight") return Family::tight;
  if (name == "planted-extreme") return Family::planted_extreme;
  if (name == "square-cycle") return Family::square_cycle;
  if (name == "complete") return Family::complete;
  if (name == "tripartite") return Family::tripartite;
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::random_mindeg:
      return "random-mindeg";
    case Family::tight:
      return "tight";
    case Family::planted_extreme:
      return "planted-extreme";
    case Family::square_cycle:
      return "square-cycle";
    case Family::complete:
      return "complete";
    case Family::tripartite:
      return "tripartite";
  }
  return "unknown";
}

Graph generate(const GeneratorSpec& spec) {
  Graph g;
  const auto check = [](bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("generator post-check failed: ") + what);
  };
  switch (spec.family) {
    case Family::random_mindeg:
      g = random_mindeg_graph(spec.n, spec.delta, spec.seed);
      check(min_degree(g) >= spec.delta, "minimum degree");
      break;
    case Family::tight:
      g = tight_graph(spec.n);
      check(g.order() == 3 * spec.n + 2 && min_degree(g) == 2 * spec.n + 1, "order and minimum degree");
      break;
    case Family::planted_extreme:
      g = planted_extreme_graph(spec.n);
      check(min_degree(g) == 2 * spec.n / 3, "minimum degree");
      for (Vertex v = 0; v < spec.n / 3; ++v) check(g.degree(v) == 2 * spec.n / 3, "planted set independent");
      break;
    case Family::square_cycle:
      g = square_cycle_graph(spec.n);
      check(spec.n < 5 || min_degree(g) == 4, "minimum degree");
      break;
    case Family::complete:
      g = complete_graph(spec.n);
      check(g.edge_count() == 1LL * spec.n * (spec.n - 1) / 2, "edge count");
      break;
    case Family::tripartite:
      g = tripartite_graph(spec.n);
      check(min_degree(g) >= spec.n - (spec.n + 2) / 3, "minimum degree");
      break;
  }
  return g;
}

}  // namespace posa
