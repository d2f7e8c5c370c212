#include "posa/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "posa/random.hpp"
#include "insertion.hpp"

namespace posa {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::proven_absent:
      return "proven-absent";
    case SearchStatus::budget_exhausted:
      return "budget-exhausted";
  }
  return "unknown";
}

namespace {

class HscSearch {
 public:
  HscSearch(const Graph& g, const SearchBudget& budget)
      : g_(g), n_(g.order()), meter_(budget), unused_(VertexSet::full(g.order())) {
    cand_.assign(static_cast<std::size_t>(n_) + 1, VertexSet(n_));
    seq_.reserve(static_cast<std::size_t>(n_));
  }

  SearchResult<Sequence> run() {
    SearchResult<Sequence> out;
    if (n_ == 3) {
      out.status = g_.edge_count() == 3 ? SearchStatus::found : SearchStatus::proven_absent;
      if (out.found()) out.value = {0, 1, 2};
      return out;
    }
    const int need = std::min(4, n_ - 1);
    for (Vertex v = 0; v < n_; ++v)
      if (g_.degree(v) < need) {
        out.status = SearchStatus::proven_absent;
        return out;
      }
    place(0);
    const std::vector<Vertex> firsts = g_.neighbors(0).members();
    for (Vertex s1 : firsts) {
      place(s1);
      if (dfs()) break;
      unplace();
      if (meter_.exhausted()) break;
    }
    out.nodes = meter_.nodes();
    if (static_cast<int>(seq_.size()) == n_) {
      out.status = SearchStatus::found;
      out.value = seq_;
    } else {
      out.status = meter_.exhausted() ? SearchStatus::budget_exhausted : SearchStatus::proven_absent;
    }
    return out;
  }

 private:
  void place(Vertex v) {
    seq_.push_back(v);
    unused_.erase(v);
  }
  void unplace() {
    unused_.insert(seq_.back());
    seq_.pop_back();
  }

  // Every unused neighbor of the vertex that just left the active window must
  // still be able to collect four cycle neighbors.
  bool feasible() const {
    const int d = static_cast<int>(seq_.size());
    if (d < 5) return true;
    const Vertex leaving = seq_[d - 3];
    const std::array<Vertex, 4> window = {seq_[0], seq_[1], seq_[d - 2], seq_[d - 1]};
    bool ok = true;
    g_.neighbors(leaving).for_each([&](Vertex u) {
      if (!ok || !unused_.contains(u)) return;
      int c = g_.neighbors(u).intersection_size(unused_);
      for (Vertex w : window) c += g_.adjacent(u, w) ? 1 : 0;
      if (c < 4) ok = false;
    });
    return ok;
  }

  bool dfs() {
    if (!meter_.tick()) return false;
    const int d = static_cast<int>(seq_.size());
    if (d == n_) {
      return g_.adjacent(seq_[d - 1], seq_[0]) && g_.adjacent(seq_[d - 1], seq_[1]) &&
             g_.adjacent(seq_[d - 2], seq_[0]);
    }
    VertexSet& cand = cand_[d];
    cand = g_.neighbors(seq_[d - 1]);
    cand &= g_.neighbors(seq_[d - 2]);
    cand &= unused_;
    if (d >= n_ - 2) cand &= g_.neighbors(seq_[0]);
    if (d == n_ - 1) cand &= g_.neighbors(seq_[1]);
    for (Vertex v = cand.first(); v >= 0; v = cand.next(v)) {
      // A cycle and its reversal are the same object; keep seq[1] < seq[n-1].
      if (d == n_ - 1 && v < seq_[1]) continue;
      place(v);
      if (feasible() && dfs()) return true;
      unplace();
      if (meter_.exhausted()) return false;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  BudgetMeter meter_;
  VertexSet unused_;
  std::vector<VertexSet> cand_;
  Sequence seq_;
};

struct PathScore {
  int len = 0;
  int c3 = 0;
  int c4 = 0;
  auto key() const { return std::tie(len, c3, c4); }
};

class OptimalPathSearch {
 public:
  OptimalPathSearch(const Graph& g, const SearchBudget& budget)
      : g_(g), n_(g.order()), meter_(budget), unused_(VertexSet::full(g.order())) {
    cand_.assign(static_cast<std::size_t>(n_) + 1, VertexSet(n_));
  }

  Sequence run() {
    if (n_ == 0) return {};
    for (Vertex v = 0; v < n_; ++v) {
      seq_ = {v};
      unused_.erase(v);
      dfs(PathScore{1, 0, 0});
      unused_.insert(v);
      if (meter_.exhausted()) throw std::runtime_error("optimal square path search exhausted its budget");
    }
    return best_seq_;
  }

 private:
  bool can_improve(const PathScore& s) const {
    const int r = unused_.size();
    const int len = s.len + r;
    const int c3 = std::min(s.c3 + r, std::max(0, len - 3));
    const int c4 = std::min(s.c4 + r, std::max(0, len - 4));
    return std::tie(len, c3, c4) > best_.key();
  }

  void dfs(const PathScore& s) {
    if (!meter_.tick()) return;
    if (s.key() > best_.key()) {
      best_ = s;
      best_seq_ = seq_;
    }
    if (!can_improve(s)) return;
    const int d = static_cast<int>(seq_.size());
    VertexSet& cand = cand_[d];
    cand = g_.neighbors(seq_[d - 1]);
    if (d >= 2) cand &= g_.neighbors(seq_[d - 2]);
    cand &= unused_;
    for (Vertex v = cand.first(); v >= 0; v = cand.next(v)) {
      PathScore next{s.len + 1, s.c3, s.c4};
      if (d >= 3 && g_.adjacent(seq_[d - 3], v)) ++next.c3;
      if (d >= 4 && g_.adjacent(seq_[d - 4], v)) ++next.c4;
      seq_.push_back(v);
      unused_.erase(v);
      dfs(next);
      unused_.insert(v);
      seq_.pop_back();
      if (meter_.exhausted() || !can_improve(s)) return;
    }
  }

  const Graph& g_;
  int n_;
  BudgetMeter meter_;
  VertexSet unused_;
  std::vector<VertexSet> cand_;
  Sequence seq_;
  PathScore best_;
  Sequence best_seq_;
};

class HamPathSearch {
 public:
  HamPathSearch(const Graph& g, BudgetMeter& meter)
      : g_(g), n_(g.order()), meter_(meter), unused_(VertexSet::full(g.order())) {
    cand_.assign(static_cast<std::size_t>(n_) + 1, VertexSet(n_));
  }

  // True when found; exhausted state is read from the meter.
  bool run(Sequence& out) {
    for (Vertex a = 0; a < n_; ++a) {
      seq_ = {a};
      unused_.erase(a);
      const std::vector<Vertex> nbrs = g_.neighbors(a).members();
      for (Vertex b : nbrs) {
        seq_.push_back(b);
        unused_.erase(b);
        if (dfs()) {
          out = seq_;
          return true;
        }
        unused_.insert(b);
        seq_.pop_back();
        if (meter_.exhausted()) return false;
      }
      unused_.insert(a);
    }
    return false;
  }

 private:
  bool feasible() const {
    const int d = static_cast<int>(seq_.size());
    if (d < 3) return true;
    const Vertex leaving = seq_[d - 3];
    bool ok = true;
    g_.neighbors(leaving).for_each([&](Vertex u) {
      if (!ok || !unused_.contains(u)) return;
      int c = g_.neighbors(u).intersection_size(unused_);
      c += g_.adjacent(u, seq_[d - 1]) ? 1 : 0;
      c += g_.adjacent(u, seq_[d - 2]) ? 1 : 0;
      if (c < std::min(2, n_ - 1)) ok = false;
    });
    return ok;
  }

  bool dfs() {
    if (!meter_.tick()) return false;
    const int d = static_cast<int>(seq_.size());
    if (d == n_) return seq_.front() < seq_.back() || n_ == 1;
    VertexSet& cand = cand_[d];
    cand = g_.neighbors(seq_[d - 1]);
    cand &= g_.neighbors(seq_[d - 2]);
    cand &= unused_;
    for (Vertex v = cand.first(); v >= 0; v = cand.next(v)) {
      seq_.push_back(v);
      unused_.erase(v);
      if (feasible() && dfs()) return true;
      unused_.insert(v);
      seq_.pop_back();
      if (meter_.exhausted()) return false;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  BudgetMeter& meter_;
  VertexSet unused_;
  std::vector<VertexSet> cand_;
  Sequence seq_;
};

// Hardest-first order of the off-sequence vertices: fewest single-vertex
// insertion spots first, ties by index.
std::vector<Vertex> hardest_first(const Graph& g, const Sequence& seq, bool cyclic, const VertexSet& off) {
  std::vector<std::pair<int, Vertex>> order;
  off.for_each([&](Vertex x) { order.emplace_back(detail::single_spots(g, seq, cyclic, x), x); });
  std::sort(order.begin(), order.end());
  std::vector<Vertex> out;
  out.reserve(order.size());
  for (const auto& [spots, x] : order) out.push_back(x);
  return out;
}

// One sweep of block insertions; returns the number of vertices inserted.
int insertion_sweep(const Graph& g, Sequence& seq, bool cyclic, VertexSet& off, BudgetMeter& meter,
                    detail::BlockScratch& scratch, int max_block) {
  int inserted = 0;
  for (Vertex x : hardest_first(g, seq, cyclic, off)) {
    if (!off.contains(x)) continue;
    if (!meter.tick()) break;
    std::vector<Vertex> block;
    for (int r = 1; r <= max_block && block.empty(); ++r) {
      const auto pos = detail::find_block(g, seq, cyclic, off, x, r, scratch, block, 0);
      if (pos >= 0) {
        seq.insert(seq.begin() + pos, block.begin(), block.end());
        for (Vertex z : block) off.erase(z);
        inserted += static_cast<int>(block.size());
      }
    }
  }
  return inserted;
}

}  // namespace

SearchResult<Sequence> exact_hsc(const Graph& g, const SearchBudget& budget) {
  if (g.order() < 3) throw std::invalid_argument("exact_hsc needs at least 3 vertices");
  return HscSearch(g, budget).run();
}

Sequence optimal_square_path_exact(const Graph& g, const SearchBudget& budget) {
  return OptimalPathSearch(g, budget).run();
}

Sequence greedy_square_path(const Graph& g, Vertex a, Vertex b, const VertexSet& allowed) {
  if (!g.adjacent(a, b) || !allowed.contains(a) || !allowed.contains(b))
    throw std::invalid_argument("greedy_square_path needs an allowed edge");
  Sequence path = {a, b};
  VertexSet avail = allowed;
  avail.erase(a);
  avail.erase(b);
  detail::extend_ends(g, path, avail, nullptr);
  return path;
}

SearchResult<Sequence> fk2_path(const Graph& g, const SearchBudget& budget, std::uint64_t seed) {
  SearchResult<Sequence> out;
  const int n = g.order();
  if (n == 0) {
    out.status = SearchStatus::found;
    return out;
  }
  if (n == 1) {
    out.status = SearchStatus::found;
    out.value = {0};
    return out;
  }
  BudgetMeter meter(budget);
  Rng rng(seed);
  detail::BlockScratch scratch(n);
  Sequence best;
  const int attempts = 12;
  for (int attempt = 0; attempt < attempts && !meter.exhausted(); ++attempt) {
    Vertex a = -1;
    Vertex b = -1;
    if (attempt == 0) {
      // Start at the hardest vertex so it ends up at an end of the path.
      a = static_cast<Vertex>(std::min_element(g.degrees().begin(), g.degrees().end()) - g.degrees().begin());
      int bd = n + 1;
      g.neighbors(a).for_each([&](Vertex v) {
        if (g.degree(v) < bd) {
          bd = g.degree(v);
          b = v;
        }
      });
    } else {
      a = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
      const std::vector<Vertex> nb = g.neighbors(a).members();
      if (!nb.empty()) b = nb[rng.below(nb.size())];
    }
    if (b < 0) {
      if (best.empty()) best = {a};
      continue;
    }
    Sequence path = {a, b};
    VertexSet off = VertexSet::full(n);
    off.erase(a);
    off.erase(b);
    detail::extend_ends(g, path, off, attempt == 0 ? nullptr : &rng);
    for (int round = 0; round < 4 * n && !off.empty() && !meter.exhausted(); ++round) {
      const int got = insertion_sweep(g, path, false, off, meter, scratch, 3);
      const int before = static_cast<int>(path.size());
      detail::extend_ends(g, path, off, &rng);
      if (got == 0 && static_cast<int>(path.size()) == before) break;
    }
    if (path.size() > best.size()) best = path;
    if (static_cast<int>(path.size()) == n) break;
  }
  if (static_cast<int>(best.size()) == n) {
    out.status = SearchStatus::found;
    out.value = best;
    out.nodes = meter.nodes();
    return out;
  }
  Sequence exact;
  HamPathSearch search(g, meter);
  if (search.run(exact)) {
    out.status = SearchStatus::found;
    out.value = exact;
  } else {
    const bool guaranteed = 3 * min_degree(g) >= 2 * n - 1;
    out.status = meter.exhausted() || guaranteed ? SearchStatus::budget_exhausted : SearchStatus::proven_absent;
    out.value = best;
  }
  out.nodes = meter.nodes();
  return out;
}

SearchResult<Sequence> fk3_complete(const Graph& g, std::span<const Vertex> c, const SearchBudget& budget,
                                    std::uint64_t seed) {
  if (!verify_square_cycle(g, c)) throw std::invalid_argument("fk3_complete needs a square cycle");
  const int n = g.order();
  SearchResult<Sequence> out;
  Sequence cycle(c.begin(), c.end());
  if (static_cast<int>(cycle.size()) == n) {
    out.status = SearchStatus::found;
    out.value = cycle;
    return out;
  }
  BudgetMeter meter(budget);
  Rng rng(seed);
  detail::BlockScratch scratch(n);
  VertexSet off = VertexSet::full(n);
  for (Vertex v : cycle) off.erase(v);
  Sequence best = cycle;
  std::vector<long long> tabu(static_cast<std::size_t>(n), -1);
  const long long tenure = 7;

  for (long long step = 0; !off.empty() && !meter.exhausted(); ++step) {
    while (!off.empty() && insertion_sweep(g, cycle, true, off, meter, scratch, 4) > 0) {
    }
    if (cycle.size() > best.size()) best = cycle;
    if (off.empty()) break;
    // Stuck: let an off-cycle vertex take the place of a cycle vertex whose
    // four cycle neighbours it sees, then try to re-home the evicted vertex.
    std::vector<Vertex> stuck = off.members();
    rng.shuffle(stuck);
    bool moved = false;
    for (Vertex x : stuck) {
      std::vector<int> spots = detail::replace_spots(g, cycle, x);
      std::erase_if(spots, [&](int i) { return tabu[cycle[i]] >= step; });
      if (spots.empty()) continue;
      const int i = spots[rng.below(spots.size())];
      const Vertex w = cycle[i];
      cycle[i] = x;
      off.erase(x);
      off.insert(w);
      tabu[x] = step + tenure;
      moved = true;
      break;
    }
    if (!moved) {
      // Shorten the cycle by a removable vertex so that new windows appear.
      std::vector<int> removable = detail::removable_positions(g, cycle);
      std::erase_if(removable, [&](int i) { return tabu[cycle[i]] >= step; });
      if (removable.empty() || cycle.size() <= 4) break;
      const int i = removable[rng.below(removable.size())];
      off.insert(cycle[i]);
      cycle.erase(cycle.begin() + i);
    }
    meter.tick();
  }
  if (off.empty()) {
    out.status = SearchStatus::found;
    out.value = cycle;
    out.nodes = meter.nodes();
    return out;
  }
  if (n <= 13) {
    auto exact = exact_hsc(g, meter.remaining());
    if (exact.found()) {
      out.status = SearchStatus::found;
      out.value = exact.value;
      out.nodes = meter.nodes() + exact.nodes;
      return out;
    }
  }
  out.status = SearchStatus::budget_exhausted;
  out.value = best;
  out.nodes = meter.nodes();
  return out;
}

namespace {

class MisSearch {
 public:
  MisSearch(const Graph& g, const SearchBudget& budget) : g_(g), meter_(budget) {}

  VertexSet run() {
    best_ = VertexSet(g_.order());
    VertexSet cur(g_.order());
    dfs(g_.all(), cur);
    if (meter_.exhausted()) throw std::runtime_error("independent set search exhausted its budget");
    return best_;
  }

 private:
  // Greedy clique cover: an independent set meets each clique at most once.
  int cover_bound(const VertexSet& cand) const {
    VertexSet rest = cand;
    int cliques = 0;
    while (!rest.empty()) {
      const Vertex v = rest.first();
      VertexSet common = g_.neighbors(v) & rest;
      rest.erase(v);
      for (Vertex w = common.first(); w >= 0; w = common.first()) {
        rest.erase(w);
        common &= g_.neighbors(w);
      }
      ++cliques;
    }
    return cliques;
  }

  void dfs(VertexSet cand, VertexSet& cur) {
    if (!meter_.tick()) return;
    if (cand.empty()) {
      if (cur.size() > best_.size()) best_ = cur;
      return;
    }
    if (cur.size() + cover_bound(cand) <= best_.size()) return;
    Vertex pivot = -1;
    int low = g_.order() + 1;
    cand.for_each([&](Vertex v) {
      const int d = g_.neighbors(v).intersection_size(cand);
      if (d < low) {
        low = d;
        pivot = v;
      }
    });
    // Some maximum independent set inside cand meets N[pivot].
    VertexSet branch = g_.neighbors(pivot) & cand;
    branch.insert(pivot);
    for (Vertex w = branch.first(); w >= 0; w = branch.next(w)) {
      VertexSet next = cand - g_.neighbors(w);
      next.erase(w);
      cur.insert(w);
      dfs(std::move(next), cur);
      cur.erase(w);
      cand.erase(w);
      if (meter_.exhausted()) return;
      if (cur.size() + cover_bound(cand) <= best_.size()) return;
    }
  }

  const Graph& g_;
  BudgetMeter meter_;
  VertexSet best_;
};

}  // namespace

VertexSet max_independent_set_exact(const Graph& g, const SearchBudget& budget) {
  return MisSearch(g, budget).run();
}

}  // namespace posa
