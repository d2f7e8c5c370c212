#include "posa/extremity.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "posa/random.hpp"

namespace posa {

namespace {

void check_alpha(const Rational& alpha) {
  if (alpha <= 0 || alpha >= 1) throw std::invalid_argument("alpha must lie in (0, 1)");
}

std::vector<int> internal_degrees(const Graph& g, const VertexSet& S) {
  std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
  S.for_each([&](Vertex v) { deg[v] = g.neighbors(v).intersection_size(S); });
  return deg;
}

// Removes the member of largest internal degree (ties: larger index).
void drop_worst(const Graph& g, VertexSet& S, std::vector<int>& deg) {
  Vertex worst = -1;
  S.for_each([&](Vertex v) {
    if (worst < 0 || deg[v] >= deg[worst]) worst = v;
  });
  S.erase(worst);
  g.neighbors(worst).for_each([&](Vertex u) {
    if (S.contains(u)) --deg[u];
  });
}

int max_over(const VertexSet& S, const std::vector<int>& deg) {
  int m = 0;
  S.for_each([&](Vertex v) { m = std::max(m, deg[v]); });
  return m;
}

// Sets of at least `need` vertices with internal degree at most `cap`.
class SparseSetSearch {
 public:
  SparseSetSearch(const Graph& g, int need, int cap, const SearchBudget& budget)
      : g_(g), need_(need), cap_(cap), meter_(budget), deg_(static_cast<std::size_t>(g.order()), 0) {}

  std::optional<VertexSet> run(const VertexSet& cand) {
    VertexSet cur(g_.order());
    if (dfs(cur, cand)) return found_;
    return std::nullopt;
  }

  bool exhausted() const { return meter_.exhausted(); }

 private:
  // A clique of G holds at most cap+1 members of such a set.
  int cover_bound(const VertexSet& cand) const {
    VertexSet rest = cand;
    int total = 0;
    while (!rest.empty()) {
      const Vertex v = rest.first();
      VertexSet common = g_.neighbors(v) & rest;
      rest.erase(v);
      int size = 1;
      for (Vertex w = common.first(); w >= 0; w = common.first()) {
        rest.erase(w);
        common &= g_.neighbors(w);
        ++size;
      }
      total += std::min(size, cap_ + 1);
    }
    return total;
  }

  bool dfs(VertexSet& cur, VertexSet cand) {
    if (!meter_.tick()) return false;
    if (cur.size() >= need_) {
      found_ = cur;
      return true;
    }
    if (cur.size() + cand.size() < need_) return false;
    if (cur.size() + cover_bound(cand) < need_) return false;
    Vertex pick = -1;
    int low = g_.order() + 1;
    cand.for_each([&](Vertex v) {
      const int d = g_.neighbors(v).intersection_size(cand);
      if (d < low) {
        low = d;
        pick = v;
      }
    });
    cand.erase(pick);
    // Include pick.
    {
      cur.insert(pick);
      deg_[pick] = g_.neighbors(pick).intersection_size(cur);
      std::vector<Vertex> touched;
      g_.neighbors(pick).for_each([&](Vertex w) {
        if (cur.contains(w)) {
          ++deg_[w];
          touched.push_back(w);
        }
      });
      VertexSet next = cand;
      cur.for_each([&](Vertex w) {
        if (deg_[w] >= cap_) next -= g_.neighbors(w);
      });
      next.for_each([&](Vertex u) {
        if (g_.neighbors(u).intersection_size(cur) > cap_) next.erase(u);
      });
      const bool ok = dfs(cur, std::move(next));
      for (Vertex w : touched) --deg_[w];
      cur.erase(pick);
      if (ok) return true;
      if (meter_.exhausted()) return false;
    }
    return dfs(cur, std::move(cand));
  }

  const Graph& g_;
  int need_;
  int cap_;
  BudgetMeter meter_;
  std::vector<int> deg_;
  VertexSet found_;
};

std::optional<VertexSet> peel(const Graph& g, VertexSet X, int need, int cap) {
  std::vector<int> deg = internal_degrees(g, X);
  while (X.size() >= need) {
    if (max_over(X, deg) <= cap) return X;
    drop_worst(g, X, deg);
  }
  return std::nullopt;
}

}  // namespace

int extreme_min_size(int n, const Rational& alpha) {
  return static_cast<int>(ceil((1 - alpha) * Rational(n, 3)));
}

int extreme_max_internal_degree(int n, const Rational& alpha) {
  return static_cast<int>(ceil(alpha * Rational(n, 3))) - 1;
}

ExtremeCheck is_alpha_extreme(const Graph& g, const VertexSet& S, const Rational& alpha) {
  check_alpha(alpha);
  if (S.universe() != g.order()) throw std::invalid_argument("vertex set universe does not match graph");
  ExtremeCheck out;
  out.size_ok = Rational(S.size()) >= (1 - alpha) * Rational(g.order(), 3);
  const Rational limit = alpha * Rational(g.order(), 3);
  bool degrees_ok = true;
  S.for_each([&](Vertex v) {
    const int d = g.neighbors(v).intersection_size(S);
    out.max_internal_degree = std::max(out.max_internal_degree, d);
    if (degrees_ok && Rational(d) >= limit) {
      degrees_ok = false;
      out.witness = v;
    }
  });
  out.extreme = out.size_ok && degrees_ok;
  return out;
}

VertexSet trim_extreme_set(const Graph& g, VertexSet S, const Rational& alpha) {
  check_alpha(alpha);
  const int need = extreme_min_size(g.order(), alpha);
  std::vector<int> deg = internal_degrees(g, S);
  while (S.size() > need) drop_worst(g, S, deg);
  return S;
}

AlphaExtremeSearch find_alpha_extreme(const Graph& g, const Rational& alpha, const SearchBudget& budget,
                                      int exact_threshold) {
  check_alpha(alpha);
  const int n = g.order();
  AlphaExtremeSearch out;
  if (n == 0) {
    out.exact = true;
    out.method = "empty";
    return out;
  }
  const int need = extreme_min_size(n, alpha);
  const int cap = extreme_max_internal_degree(n, alpha);
  const auto finish = [&](VertexSet S, std::string method) {
    S = trim_extreme_set(g, S, alpha);
    const ExtremeCheck check = is_alpha_extreme(g, S, alpha);
    if (!check) throw std::logic_error("trimmed set lost extremeness");
    out.certificate = ExtremeCertificate{S, alpha, check.max_internal_degree};
    out.exact = true;
    out.method = std::move(method);
  };

  // A member v of an extreme set S has |S \ N(v)| >= need - cap, and
  // S \ N(v) lies in the non-neighbourhood of v.
  VertexSet cand(n);
  for (Vertex v = 0; v < n; ++v)
    if (n - g.degree(v) >= need - cap) cand.insert(v);
  if (cand.size() < need) {
    out.exact = true;
    out.method = "degree-bound";
    return out;
  }

  std::vector<Vertex> seeds = cand.members();
  std::stable_sort(seeds.begin(), seeds.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  if (n > 400 && seeds.size() > 64) seeds.resize(64);
  for (Vertex s : seeds) {
    VertexSet X = cand - g.neighbors(s);
    if (auto found = peel(g, std::move(X), need, cap)) {
      finish(std::move(*found), "peeling");
      return out;
    }
  }
  if (auto found = peel(g, cand, need, cap)) {
    finish(std::move(*found), "peeling");
    return out;
  }

  SearchBudget bb = budget;
  if (n > exact_threshold) bb.node_limit = std::min(bb.node_limit, 20'000LL);
  SparseSetSearch search(g, need, cap, bb);
  if (auto found = search.run(cand)) {
    finish(std::move(*found), "branch-and-bound");
    return out;
  }
  out.exact = !search.exhausted();
  out.method = out.exact ? "branch-and-bound" : "peeling";
  return out;
}

AlphaBetaCheck is_alpha_beta_extreme(const Graph& g, const VertexSet& S, const Rational& alpha,
                                     const Rational& beta) {
  check_alpha(alpha);
  if (beta <= 0 || beta >= alpha) throw std::invalid_argument("beta must lie in (0, alpha)");
  AlphaBetaCheck out;
  out.core = VertexSet(g.order());
  const Rational limit = alpha * Rational(g.order(), 3);
  S.for_each([&](Vertex v) {
    if (Rational(g.neighbors(v).intersection_size(S)) >= limit) out.core.insert(v);
  });
  out.size_ok = Rational(S.size()) >= (1 - alpha + beta) * Rational(g.order(), 3);
  out.extreme = out.size_ok && out.core.size() < floor(beta * Rational(g.order(), 3));
  return out;
}

SpecialSetDescriptor special_set(const Graph& g, Vertex u, Vertex v, Vertex w, Vertex x, Vertex y) {
  for (Vertex a : {u, v, w, x, y})
    if (!g.in_range(a)) throw std::out_of_range("vertex out of range");
  SpecialSetDescriptor d{u, v, w, x, y, VertexSet(g.order())};
  VertexSet uv = g.neighbors(u) & g.neighbors(v);
  d.realized = ((uv & g.neighbors(w)) | (uv & g.neighbors(x))) & g.neighbors(y);
  return d;
}

std::string to_string(const ScanMode& mode) {
  if (mode.kind == ScanMode::Kind::exhaustive) return "exhaustive";
  return "sampled(" + std::to_string(mode.samples) + ", seed " + std::to_string(mode.seed) + ")";
}

ScanStats for_each_special_set(const Graph& g, const ScanMode& mode, int min_size,
                               const std::function<void(const SpecialSetDescriptor&)>& visit) {
  const int n = g.order();
  ScanStats stats;
  if (mode.kind == ScanMode::Kind::sampled) {
    if (n == 0) return stats;
    Rng rng(mode.seed);
    for (long long i = 0; i < mode.samples; ++i) {
      Vertex t[5];
      for (Vertex& a : t) a = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
      ++stats.tuples;
      SpecialSetDescriptor d = special_set(g, t[0], t[1], t[2], t[3], t[4]);
      if (d.realized.size() >= min_size) {
        ++stats.visited;
        visit(d);
      }
    }
    return stats;
  }
  if (n > kExhaustiveScanLimit)
    throw std::invalid_argument("exhaustive special-set scan refused above n = " +
                                std::to_string(kExhaustiveScanLimit));
  std::vector<std::uint64_t> nb(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) nb[v] = n == 0 ? 0 : g.neighbors(v).words()[0];
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> a(static_cast<std::size_t>(n), 0);
  const long long pairs = 1LL * n * (n + 1) / 2;
  stats.tuples = pairs * pairs * n;
  const auto emit = [&](std::uint64_t mask, Vertex u, Vertex v, Vertex w, Vertex x, Vertex y) {
    if (std::popcount(mask) < min_size || !seen.insert(mask).second) return;
    SpecialSetDescriptor d{u, v, w, x, y, VertexSet(n)};
    for (std::uint64_t m = mask; m != 0; m &= m - 1) d.realized.insert(std::countr_zero(m));
    ++stats.visited;
    visit(d);
  };
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u; v < n; ++v) {
      const std::uint64_t uv = nb[u] & nb[v];
      if (std::popcount(uv) < min_size) {
        if (min_size <= 0) emit(0, u, v, u, u, u);
        continue;
      }
      for (Vertex w = 0; w < n; ++w) a[w] = uv & nb[w];
      for (Vertex w = 0; w < n; ++w) {
        for (Vertex x = w; x < n; ++x) {
          const std::uint64_t b = a[w] | a[x];
          if (std::popcount(b) < min_size) {
            if (min_size <= 0) emit(0, u, v, w, x, 0);
            continue;
          }
          for (Vertex y = 0; y < n; ++y) emit(b & nb[y], u, v, w, x, y);
        }
      }
    }
  }
  return stats;
}

SpecialScanReport scan_special_sets(const Graph& g, const Rational& alpha, const Rational& beta,
                                    const ScanMode& mode) {
  SpecialScanReport report;
  report.mode = mode;
  const int min_size = static_cast<int>(ceil((1 - alpha + beta) * Rational(g.order(), 3)));
  report.stats = for_each_special_set(g, mode, min_size, [&](const SpecialSetDescriptor& d) {
    if (is_alpha_beta_extreme(g, d.realized, alpha, beta)) report.violations.push_back(d);
  });
  return report;
}

}  // namespace posa
