#include "posa/pathcover.hpp"

#include <algorithm>
#include <stdexcept>

#include "insertion.hpp"
#include "posa/oracle.hpp"

namespace posa {

namespace {

bool in_regime(const Graph& h, const Rational& eps) {
  const int n = h.order();
  return n >= 6000 && eps <= Rational(1, 500) &&
         Rational(min_degree(h)) >= (Rational(2, 3) - eps) * Rational(n);
}

// Grows seq (x y ...) forward only, choosing the candidate with the fewest
// onward options.
void grow_forward(const Graph& h, Sequence& seq, VertexSet& avail) {
  while (true) {
    const Vertex x = seq[seq.size() - 2], y = seq.back();
    const VertexSet cand = h.neighbors(x) & h.neighbors(y) & avail;
    if (cand.empty()) return;
    Vertex best = -1;
    int best_score = 0;
    cand.for_each([&](Vertex v) {
      const int onward = (h.neighbors(y) & h.neighbors(v)).intersection_size(avail) - 1;
      const int score = onward <= 0 ? 1 << 30 : onward;
      if (best < 0 || score < best_score) {
        best = v;
        best_score = score;
      }
    });
    seq.push_back(best);
    avail.erase(best);
  }
}

Sequence lift(const InducedSubgraph& sub, const Sequence& local) {
  Sequence out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(sub.host(v));
  return out;
}

// Move (m1) for a vertex x seeing more than (2/3 - 4 eps)|P| of P.
bool move_m1(const Graph& h, Sequence& path, VertexSet& off, Vertex x, std::vector<std::string>& log) {
  const int p = static_cast<int>(path.size());
  int i = -1;
  for (int j = 0; j + 1 < p; ++j)
    if (h.adjacent(x, path[j]) && h.adjacent(x, path[j + 1])) {
      i = j;
      break;
    }
  if (i < 0) return false;
  const int q = i;  // |u_1 ... u_{i-1}|
  const Vertex ui = path[i];
  VertexSet ys = h.neighbors(x) & h.neighbors(ui) & off;
  for (Vertex y = ys.first(); y >= 0; y = ys.next(y)) {
    VertexSet avail = off;
    avail.erase(x);
    avail.erase(y);
    Sequence grown{x, y};
    grow_forward(h, grown, avail);
    if (static_cast<int>(grown.size()) <= q) continue;
    Sequence next(grown.rbegin(), grown.rend());
    next.insert(next.end(), path.begin() + i, path.end());
    for (int j = 0; j < i; ++j) off.insert(path[j]);
    for (Vertex v : grown) off.erase(v);
    log.push_back("m1 x=" + std::to_string(x + 1) + " i=" + std::to_string(i + 1) + " q=" + std::to_string(q) +
                  " |P'|=" + std::to_string(grown.size()));
    path = std::move(next);
    return true;
  }
  return false;
}

}  // namespace

LongPathResult longest_square_path(const Graph& h, const Rational& epsilon, const SearchBudget& budget,
                                   std::uint64_t seed) {
  const int n = h.order();
  LongPathResult out;
  const Rational target = (Rational(1, 2) - 3 * epsilon) * Rational(n);
  if (n == 0) {
    out.bound_met = true;
    return out;
  }
  if (n <= 12) {
    out.path = optimal_square_path_exact(h, budget);
    out.log.push_back("oracle");
    out.bound_met = Rational(static_cast<long>(out.path.size())) >= target;
    return out;
  }
  Vertex a = -1, b = -1;
  for (Vertex u = 0; u < n && a < 0; ++u) {
    const Vertex v = h.neighbors(u).next(u);
    if (v >= 0) a = u, b = v;
  }
  if (a < 0) {
    out.path = {0};
    out.bound_met = Rational(1) >= target;
    return out;
  }
  return improve_square_path(h, greedy_square_path(h, a, b, h.all()), epsilon, budget, seed, true);
}

LongPathResult improve_square_path(const Graph& h, Sequence path, const Rational& epsilon,
                                   const SearchBudget& budget, std::uint64_t seed, bool restart) {
  const int n = h.order();
  if (!verify_square_path(h, path)) throw std::invalid_argument("starting path is not a square path");
  LongPathResult out;
  const Rational target = (Rational(1, 2) - 3 * epsilon) * Rational(n);
  BudgetMeter meter(budget);
  VertexSet off = h.all();
  for (Vertex v : path) off.erase(v);
  const Rational m1_share = Rational(2, 3) - 4 * epsilon;

  int iterations = 0;
  bool restarted = !restart;
  while (!off.empty() && meter.tick()) {
    if (++iterations > n) throw std::logic_error("path cover loop did not terminate");
    const std::size_t before = path.size();
    detail::extend_ends(h, path, off, nullptr);
    if (path.size() > before) {
      out.log.push_back("extend +" + std::to_string(path.size() - before));
      continue;
    }
    bool moved = false;
    const Rational limit = m1_share * Rational(static_cast<long>(path.size()));
    const VertexSet on = off.complement();
    for (Vertex x = off.first(); x >= 0 && !moved; x = off.next(x)) {
      if (Rational(h.neighbors(x).intersection_size(on)) <= limit) continue;
      moved = move_m1(h, path, off, x, out.log);
    }
    if (!moved) {
      // (m2): a square path of H - P that beats P.
      const InducedSubgraph rest = induced(h, off);
      SearchBudget sub = meter.remaining();
      sub.node_limit = std::min(sub.node_limit, 200'000LL);
      SearchResult<Sequence> r = fk2_path(rest.graph, sub, seed);
      meter.tick(r.nodes);
      if (r.value.size() > path.size()) {
        const Sequence lifted = lift(rest, r.value);
        for (Vertex v : path) off.insert(v);
        for (Vertex v : lifted) off.erase(v);
        path = lifted;
        out.log.push_back("m2 |P|=" + std::to_string(path.size()));
        moved = true;
      }
    }
    if (!moved && !restarted) {
      // Practical extra: one restart of the hamiltonian path heuristic on
      // all of H, which escapes greedy dead ends the two moves cannot.
      restarted = true;
      SearchBudget sub = meter.remaining();
      sub.node_limit = std::min(sub.node_limit, 200'000LL);
      SearchResult<Sequence> r = fk2_path(h, sub, seed);
      meter.tick(r.nodes);
      if (r.value.size() > path.size()) {
        off = h.all();
        for (Vertex v : r.value) off.erase(v);
        path = r.value;
        out.log.push_back("restart |P|=" + std::to_string(path.size()));
        moved = true;
      }
    }
    if (!moved) break;
    if (path.size() <= before) throw std::logic_error("path cover move did not lengthen the path");
  }
  out.bound_met = Rational(static_cast<long>(path.size())) >= target;
  if (!out.bound_met && in_regime(h, epsilon)) {
    const Rational q_limit = (Rational(1, 6) - 2 * epsilon) * Rational(n);
    out.diagnostics.push_back("loop stopped at |P|=" + std::to_string(path.size()) + " below (1/2-3eps)n; q < " +
                              to_string(q_limit) + " was expected to hold for some m1 vertex");
  }
  if (!verify_square_path(h, path)) throw std::logic_error("path cover produced an invalid path");
  out.path = std::move(path);
  return out;
}

CoverResult cover_two_paths(const Graph& h, const Rational& epsilon, const SearchBudget& budget, std::uint64_t seed) {
  const int n = h.order();
  CoverResult out;
  out.bound = (Rational(5, 6) - 2 * epsilon) * Rational(n);
  out.regime = n > 0 && in_regime(h, epsilon);
  BudgetMeter meter(budget);
  LongPathResult first = longest_square_path(h, epsilon, budget, seed);
  meter.tick(1);
  out.p1 = first.path;
  out.log = first.log;
  for (const std::string& d : first.diagnostics) out.log.push_back("diagnostic: " + d);
  const int p = static_cast<int>(out.p1.size());

  if (Rational(p) > out.bound || p == n) {
    out.route = "p1-alone";
  } else {
    VertexSet rest_set = h.all();
    for (Vertex v : out.p1) rest_set.erase(v);
    const VertexSet on = rest_set.complement();
    const Rational share = (Rational(2, 3) - 3 * epsilon) * Rational(p);
    Vertex x = -1;
    for (Vertex v = rest_set.first(); v >= 0 && x < 0; v = rest_set.next(v))
      if (Rational(h.neighbors(v).intersection_size(on)) > share) x = v;

    SearchBudget sub = meter.remaining();
    sub.node_limit = std::min(sub.node_limit, 200'000LL);
    const auto fk2_on = [&](const VertexSet& s) {
      const InducedSubgraph g = induced(h, s);
      return lift(g, fk2_path(g.graph, sub, seed).value);
    };
    const int hh = rest_set.size();
    if (x >= 0 && 6 * hh > n) {
      out.route = "fk2-neighbourhood";
      out.log.push_back("H'' = N_H'(x), x=" + std::to_string(x + 1));
      out.p2 = fk2_on(h.neighbors(x) & rest_set);
      // Practical extra: the whole of H - P1 may do better at desk scale.
      Sequence whole = fk2_on(rest_set);
      if (whole.size() > out.p2.size()) {
        out.p2 = std::move(whole);
        out.log.push_back("kept the longer path of H - P1");
      }
    } else {
      out.route = "fk2-complement";
      out.p2 = fk2_on(rest_set);
    }
  }
  out.sum = static_cast<int>(out.p1.size() + out.p2.size());
  out.bound_met = Rational(out.sum) > out.bound;

  VertexSet seen(n);
  for (const Sequence* s : {&out.p1, &out.p2})
    for (Vertex v : *s) {
      if (seen.contains(v)) throw std::logic_error("cover paths intersect");
      seen.insert(v);
    }
  if (!out.p2.empty() && !verify_square_path(h, out.p2)) throw std::logic_error("second cover path is invalid");
  return out;
}

}  // namespace posa
