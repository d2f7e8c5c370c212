#include "posa/extremal.hpp"

#include <algorithm>
#include <numeric>

#include "posa/extremity.hpp"
#include "posa/random.hpp"

namespace posa {

ExtremalError::ExtremalError(std::string step, const std::string& what)
    : std::runtime_error(step + ": " + what), step_(std::move(step)) {}

namespace {

std::string str(long long v) { return std::to_string(v); }

bool connected(const Graph& h) {
  const int n = h.order();
  if (n == 0) return true;
  VertexSet seen = VertexSet::of(n, {0});
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next(n);
    frontier.for_each([&](Vertex v) { next |= h.neighbors(v); });
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen.size() == n;
}

std::vector<VertexSet> components(const Graph& h) {
  const int n = h.order();
  std::vector<VertexSet> out;
  VertexSet left = h.all();
  while (!left.empty()) {
    VertexSet comp = VertexSet::of(n, {left.first()});
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next(n);
      frontier.for_each([&](Vertex v) { next |= h.neighbors(v); });
      next -= comp;
      comp |= next;
      frontier = std::move(next);
    }
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_plain_cycle(const Graph& h, const Sequence& c) {
  const int L = static_cast<int>(c.size());
  if (L < 3) return false;
  VertexSet seen(h.order());
  for (int i = 0; i < L; ++i) {
    if (!h.in_range(c[i]) || seen.contains(c[i])) return false;
    seen.insert(c[i]);
    if (!h.adjacent(c[i], c[(i + 1) % L])) return false;
  }
  return true;
}

bool is_plain_path(const Graph& h, const Sequence& p) {
  VertexSet seen(h.order());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!h.in_range(p[i]) || seen.contains(p[i])) return false;
    seen.insert(p[i]);
    if (i > 0 && !h.adjacent(p[i - 1], p[i])) return false;
  }
  return true;
}

// Extends p at both ends inside `allowed` (smallest candidate first) until
// neither end has a neighbour in `allowed` off the path.
int extend_path(const Graph& h, Sequence& p, VertexSet& allowed) {
  int added = 0;
  for (int side = 0; side < 2; ++side) {
    while (true) {
      const Vertex v = (h.neighbors(p.back()) & allowed).first();
      if (v < 0) break;
      p.push_back(v);
      allowed.erase(v);
      ++added;
    }
    std::reverse(p.begin(), p.end());
  }
  return added;
}

// floor(sqrt(alpha) k) by integers: largest q with q^2 den <= num k^2.
int floor_sqrt_alpha_k(const Rational& alpha, int k) {
  const long long num = alpha.numerator(), den = alpha.denominator();
  long long q = 0;
  while ((q + 1) * (q + 1) * den <= num * k * k) ++q;
  return static_cast<int>(q);
}

int floor_alpha_k(const Rational& alpha, int k) {
  return static_cast<int>(alpha.numerator() * k / alpha.denominator());
}

// Minimum degree of g - X, looking at vertices in ascending degree order.
int min_degree_without(const Graph& g, const std::vector<Vertex>& by_degree, const VertexSet& X) {
  int best = g.order();
  const int r = X.size();
  for (Vertex w : by_degree) {
    if (g.degree(w) - r >= best) break;
    if (X.contains(w)) continue;
    best = std::min(best, g.degree(w) - g.neighbors(w).intersection_size(X));
  }
  return best;
}

}  // namespace

Reduction reduce_to_3k(const Graph& g, const VertexSet* keep) {
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("reduce_to_3k needs a nonempty graph");
  if (3 * min_degree(g) < 2 * n) throw std::invalid_argument("minimum degree below 2n/3");
  const int r = n % 3;
  std::vector<Vertex> by_degree(static_cast<std::size_t>(n));
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });

  VertexSet X(n);
  const auto kept_cost = [&](const VertexSet& Y) { return keep ? Y.intersection_size(*keep) : 0; };
  const auto better = [&](int deg, int cost, int best_deg, int best_cost) {
    return best_deg < 0 || cost < best_cost || (cost == best_cost && deg > best_deg);
  };
  if (r == 2 && n <= 400) {
    int best_deg = -1, best_cost = 0;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        const VertexSet Y = VertexSet::of(n, {u, v});
        const int d = min_degree_without(g, by_degree, Y);
        const int cost = kept_cost(Y);
        if (better(d, cost, best_deg, best_cost)) {
          best_deg = d;
          best_cost = cost;
          X = Y;
        }
      }
  } else {
    for (int step = 0; step < r; ++step) {
      int best_deg = -1, best_cost = 0;
      VertexSet chosen = X;
      for (Vertex u = 0; u < n; ++u) {
        if (X.contains(u)) continue;
        VertexSet Y = X;
        Y.insert(u);
        const int d = min_degree_without(g, by_degree, Y);
        const int cost = kept_cost(Y);
        if (better(d, cost, best_deg, best_cost)) {
          best_deg = d;
          best_cost = cost;
          chosen = std::move(Y);
        }
      }
      X = std::move(chosen);
    }
  }
  Reduction out;
  out.removed = X.members();
  out.reduced = induced(g, X.complement());
  out.min_degree = out.reduced.graph.order() > 0 ? min_degree(out.reduced.graph) : 0;
  if (3 * out.min_degree < 2 * out.reduced.graph.order())
    throw std::logic_error("3k reduction left minimum degree below 2k");
  return out;
}

PathOrCycle long_path_or_cycle(const Graph& h) {
  const int n = h.order();
  if (n < 3) throw std::invalid_argument("long_path_or_cycle needs at least 3 vertices");
  if (!connected(h)) throw std::invalid_argument("long_path_or_cycle needs a connected graph");
  const int delta = min_degree(h);
  Sequence p{0};
  VertexSet off = h.all();
  off.erase(0);
  for (int round = 0; round <= n; ++round) {
    extend_path(h, p, off);
    const int len = static_cast<int>(p.size());
    if (len - 1 >= 2 * delta) return {p, false};
    // Both ends see only path vertices and d(v1) + d(vp) >= 2 delta >= |P|,
    // so some v_{i+1} ~ v1 and v_i ~ vp.
    const Vertex v1 = p.front(), vp = p.back();
    int split = -1;
    for (int i = 0; i + 1 < len && split < 0; ++i)
      if (h.adjacent(v1, p[i + 1]) && h.adjacent(vp, p[i])) split = i;
    if (split < 0) throw std::logic_error("no crossing pair on a short maximal path");
    Sequence cycle(p.begin(), p.begin() + split + 1);
    cycle.insert(cycle.end(), p.rbegin(), p.rend() - split - 1);
    if (len == n) return {cycle, true};
    // Leave the cycle through a vertex with a neighbour outside it.
    int at = -1;
    Vertex w = -1;
    for (int i = 0; i < len && at < 0; ++i) {
      w = (h.neighbors(cycle[i]) & off).first();
      if (w >= 0) at = i;
    }
    p = rotated(cycle, static_cast<std::size_t>((at + 1) % len));
    p.push_back(w);
    off.erase(w);
  }
  throw std::logic_error("long_path_or_cycle did not terminate");
}

Sequence even_long_cycle(const Graph& h, const Sequence& c) {
  const int n = h.order();
  if (n % 2 != 0) throw std::invalid_argument("even_long_cycle needs an even number of vertices");
  if (!is_plain_cycle(h, c)) throw std::invalid_argument("even_long_cycle needs a cycle of h");
  const int delta = min_degree(h);
  if (static_cast<int>(c.size()) <= n - delta) throw std::invalid_argument("cycle is not longer than |h| - delta(h)");
  const int target = std::min(2 * delta, n);
  Sequence C = c;

  const auto finish = [&](Sequence out) {
    if (out.size() % 2 != 0 || static_cast<int>(out.size()) < target || !is_plain_cycle(h, out))
      throw std::logic_error("even cycle misses its length or parity bound");
    return out;
  };

  for (int round = 0; round <= n; ++round) {
    const int L = static_cast<int>(C.size());
    if (L == n) return finish(C);
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < L; ++i) pos[C[i]] = i;
    VertexSet rest = h.all();
    for (Vertex v : C) rest.erase(v);

    Sequence P{rest.first()};
    rest.erase(P[0]);
    extend_path(h, P, rest);
    const int p = static_cast<int>(P.size());
    const Vertex v1 = P.front(), vp = P.back();

    // vp next to two consecutive cycle vertices: put it between them.
    int gap = -1;
    for (int i = 0; i < L && gap < 0; ++i)
      if (h.adjacent(vp, C[i]) && h.adjacent(vp, C[(i + 1) % L])) gap = i;
    if (gap >= 0) {
      C.insert(C.begin() + gap + 1, vp);
      continue;
    }
    Vertex x = -1;
    for (Vertex u : C)
      if (h.adjacent(v1, u) && (x < 0 || u < x)) x = u;
    if (x < 0) throw std::logic_error("path end has no neighbour on the cycle");
    const auto fd = [&](Vertex u) { return (pos[u] - pos[x] + L) % L; };
    Vertex y = -1, z = -1;
    for (Vertex u : C) {
      if (u == x || !h.adjacent(vp, u)) continue;
      if (y < 0 || fd(u) < fd(y)) y = u;
      if (z < 0 || fd(u) > fd(z)) z = u;
    }
    if (y < 0) throw std::logic_error("path end has no second neighbour on the cycle");
    // C forward from u to w, inclusive.
    const auto arc = [&](Vertex u, Vertex w) {
      Sequence s;
      for (int i = pos[u];; i = (i + 1) % L) {
        s.push_back(C[i]);
        if (C[i] == w) break;
      }
      return s;
    };
    const auto via_xy = [&] {  // replace xCy by x P y
      Sequence s = P;
      const Sequence back = arc(y, x);
      s.insert(s.end(), back.begin(), back.end());
      return s;
    };
    const auto via_zx = [&] {  // replace zCx by z P x
      Sequence s = arc(x, z);
      s.insert(s.end(), P.rbegin(), P.rend());
      return s;
    };
    const int xy = fd(y), zx = L - fd(z);
    if (xy <= p) {
      C = via_xy();
      continue;
    }
    if (zx <= p) {
      C = via_zx();
      continue;
    }
    if (L % 2 == 0) return finish(C);
    if ((xy - zx) % 2 != 0) {
      Sequence a = via_xy();
      return finish(a.size() % 2 == 0 ? a : via_zx());
    }
    // yCz has odd length, so two consecutive neighbours of vp on it are an
    // odd distance apart; route through vp instead.
    std::vector<Vertex> marks;
    for (Vertex u : C)
      if (u != x && h.adjacent(vp, u)) marks.push_back(u);
    std::sort(marks.begin(), marks.end(), [&](Vertex a, Vertex b) { return fd(a) < fd(b); });
    for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
      if ((fd(marks[i + 1]) - fd(marks[i])) % 2 == 0) continue;
      Sequence s = arc(marks[i + 1], marks[i]);
      s.push_back(vp);
      return finish(s);
    }
    throw std::logic_error("no odd segment between neighbours of the path end");
  }
  throw std::logic_error("even_long_cycle did not terminate");
}

PortSet cyclic_ports(const Sequence& z) {
  const int L = static_cast<int>(z.size());
  if (L < 4 || L % 2 != 0) throw std::invalid_argument("cyclic ports need an even host of at least 4 vertices");
  PortSet out{z, {}};
  for (int i = 0; i < L / 2; ++i)
    out.ports.push_back({z[2 * i], z[2 * i + 1], z[(2 * i + 2) % L], z[(2 * i + 3) % L]});
  return out;
}

PortSet path_ports(const Sequence& z) {
  const int L = static_cast<int>(z.size());
  if (L % 2 != 0) throw std::invalid_argument("path ports need an even host");
  PortSet out{z, {}};
  for (int i = 0; 2 * i + 3 < L; ++i) out.ports.push_back({z[2 * i], z[2 * i + 1], z[2 * i + 2], z[2 * i + 3]});
  return out;
}

InsertionMatching insert_ports(const Graph& g, const VertexSet& s_avail, const PortSet& ports, bool check_hall) {
  const int t = static_cast<int>(ports.ports.size());
  if (s_avail.size() < t) throw std::invalid_argument("fewer available vertices than ports");
  const std::vector<Vertex> xs = s_avail.members();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(t));  // port -> indices into xs
  std::vector<int> xdeg(xs.size(), 0);
  for (int p = 0; p < t; ++p) {
    const auto& w = ports.ports[p];
    const VertexSet seeing = common_neighborhood(g, {w[0], w[1], w[2], w[3]}) & s_avail;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (seeing.contains(xs[i])) {
        adj[p].push_back(static_cast<int>(i));
        ++xdeg[i];
      }
  }
  InsertionMatching out;
  if (t > 0) {
    const int min_x = *std::min_element(xdeg.begin(), xdeg.end());
    int min_p = t;
    for (const auto& a : adj) min_p = std::min(min_p, static_cast<int>(a.size()));
    out.hall_slack = min_x + min_p - t;
    if (check_hall && out.hall_slack < 0)
      throw ExtremalError("ports", "degree-sum Hall condition fails by " + str(-out.hall_slack));
  }

  // Kuhn's augmenting paths, ports in order, candidates ascending.
  std::vector<int> owner(xs.size(), -1);
  std::vector<int> seen(xs.size(), -1);
  const auto augment = [&](auto&& self, int p, int stamp) -> bool {
    for (int i : adj[p]) {
      if (seen[i] == stamp) continue;
      seen[i] = stamp;
      if (owner[i] < 0 || self(self, owner[i], stamp)) {
        owner[i] = p;
        return true;
      }
    }
    return false;
  };
  for (int p = 0; p < t; ++p)
    if (!augment(augment, p, p)) throw ExtremalError("ports", "no matching saturates port " + str(p + 1));
  out.pairs.assign(static_cast<std::size_t>(t), {-1, -1});
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (owner[i] >= 0) out.pairs[owner[i]] = {xs[i], owner[i]};
  for (const auto& [x, p] : out.pairs)
    for (Vertex y : ports.ports[p])
      if (!g.adjacent(x, y)) throw std::logic_error("matched vertex misses its port");
  return out;
}

Sequence weave(const PortSet& ports, const InsertionMatching& matching) {
  const Sequence& z = ports.host;
  if (matching.pairs.size() != ports.ports.size()) throw std::invalid_argument("matching does not cover the ports");
  Sequence out;
  for (std::size_t i = 0; i < matching.pairs.size(); ++i) {
    out.push_back(z[2 * i]);
    out.push_back(z[2 * i + 1]);
    out.push_back(matching.pairs[i].first);
  }
  for (std::size_t i = 2 * matching.pairs.size(); i < z.size(); ++i) out.push_back(z[i]);
  return out;
}

Case2Outcome case2_decompose(const Graph& h1) {
  const int nh = h1.order();
  if (nh < 3) throw std::invalid_argument("case2_decompose needs at least 3 vertices");
  const int delta = min_degree(h1);
  const int thr = nh - delta;
  Case2Outcome out;
  const auto long_cycle = [&](Sequence c, std::string source) {
    if (!is_plain_cycle(h1, c) || static_cast<int>(c.size()) <= thr)
      throw std::logic_error("claimed long cycle is not one");
    out.long_cycle = std::move(c);
    out.cycle_source = std::move(source);
    return out;
  };

  if (!connected(h1)) {
    std::vector<VertexSet> comps = components(h1);
    if (comps.size() != 2)
      throw ExtremalError("case2_decompose", "G[T1] has " + str(static_cast<long long>(comps.size())) + " components");
    if (comps[1].size() > comps[0].size()) std::swap(comps[0], comps[1]);
    Case2Split& s = out.split;
    s.connected = false;
    s.A = s.A_core = comps[0];
    s.C = s.C_core = comps[1];
    s.B = VertexSet(nh);
    out.split_found = true;
    return out;
  }

  PathOrCycle start = long_path_or_cycle(h1);
  if (start.cycle) return long_cycle(start.seq, "LPath");
  Sequence P = start.seq;
  int improvements = 0;
  for (long long guard = 0;; ++guard) {
    if (guard > 4LL * nh * nh + 16) throw std::logic_error("case2_decompose did not stabilise");
    VertexSet off = h1.all();
    for (Vertex v : P) off.erase(v);
    improvements += extend_path(h1, P, off);
    const int l = static_cast<int>(P.size());
    std::vector<int> pos(static_cast<std::size_t>(nh), -1);
    for (int q = 0; q < l; ++q) pos[P[q]] = q;
    const Vertex y1 = P.front(), yl = P.back();
    int i = 0, j = l - 1;
    h1.neighbors(y1).for_each([&](Vertex u) { i = std::max(i, pos[u]); });
    h1.neighbors(yl).for_each([&](Vertex u) { j = std::min(j, pos[u]); });

    if (i + 1 > thr) return long_cycle(Sequence(P.begin(), P.begin() + i + 1), "end cycle at y1");
    if (l - j > thr) return long_cycle(Sequence(P.begin() + j, P.end()), "end cycle at yl");
    if (i > j) {
      // Crossing neighbours: the cycle y1 .. yj' yl .. yi' y1 with i'-j' least.
      int bi = -1, bj = -1;
      h1.neighbors(y1).for_each([&](Vertex a) {
        h1.neighbors(yl).for_each([&](Vertex b) {
          if (pos[a] > pos[b] && (bi < 0 || pos[a] - pos[b] < bi - bj)) bi = pos[a], bj = pos[b];
        });
      });
      Sequence D(P.begin(), P.begin() + bj + 1);
      for (int q = l - 1; q >= bi; --q) D.push_back(P[q]);
      if (static_cast<int>(D.size()) > thr) return long_cycle(D, "nocross");
      throw ExtremalError("nocross", "crossing end neighbours without a long cycle");
    }
    if (i < l - 1 - j) {  // keep |A| >= |C|
      std::reverse(P.begin(), P.end());
      continue;
    }

    // ||A,C|| = 0, or the cycle through y_a y_b holds N(y1) and N(yl).
    bool restart = false;
    for (int a = 0; a < i && !restart; ++a) {
      int b = -1;
      h1.neighbors(P[a]).for_each([&](Vertex u) {
        if (pos[u] > j && b < 0) b = pos[u];
      });
      if (b < 0) continue;
      int ap = -1, bp = -1;
      h1.neighbors(y1).for_each([&](Vertex u) {
        if (pos[u] > a && (ap < 0 || pos[u] < ap)) ap = pos[u];
      });
      h1.neighbors(yl).for_each([&](Vertex u) {
        if (pos[u] < b && pos[u] > bp) bp = pos[u];
      });
      Sequence D(P.begin(), P.begin() + a + 1);
      D.insert(D.end(), P.begin() + b, P.end());
      for (int q = bp; q >= ap; --q) D.push_back(P[q]);
      if (static_cast<int>(D.size()) > thr) return long_cycle(D, "dj");
      throw ExtremalError("dj", "edge between A and C without a long cycle");
    }

    // Cores; a core vertex with a neighbour beyond its side allows a longer
    // path or one with smaller j - i.
    for (int h = 0; h < i && !restart; ++h) {
      if (!h1.adjacent(y1, P[h + 1])) continue;
      VertexSet bad = h1.neighbors(P[h]);
      for (int q = 0; q <= i; ++q) bad.erase(P[q]);
      if (bad.empty()) continue;
      const Vertex w = bad.first();
      Sequence Q;
      if (pos[w] < 0) Q.push_back(w);
      for (int q = h; q >= 0; --q) Q.push_back(P[q]);
      Q.insert(Q.end(), P.begin() + h + 1, P.end());
      P = std::move(Q);
      ++improvements;
      restart = true;
    }
    for (int h = l - 1; h > j && !restart; --h) {
      if (!h1.adjacent(yl, P[h - 1])) continue;
      VertexSet bad = h1.neighbors(P[h]);
      for (int q = j; q < l; ++q) bad.erase(P[q]);
      if (bad.empty()) continue;
      const Vertex w = bad.first();
      Sequence Q(P.begin(), P.begin() + h);
      for (int q = l - 1; q >= h; --q) Q.push_back(P[q]);
      if (pos[w] < 0) Q.push_back(w);
      P = std::move(Q);
      ++improvements;
      restart = true;
    }
    if (restart) {
      if (!is_plain_path(h1, P)) throw std::logic_error("improvement move broke the path");
      continue;
    }

    Case2Split& s = out.split;
    s.A = VertexSet(nh), s.B = VertexSet(nh), s.C = VertexSet(nh);
    s.A_core = VertexSet(nh), s.C_core = VertexSet(nh);
    for (int q = 0; q < l; ++q) (q < i ? s.A : q <= j ? s.B : s.C).insert(P[q]);
    for (int h = 0; h < i; ++h)
      if (h1.adjacent(y1, P[h + 1])) s.A_core.insert(P[h]);
    for (int h = j + 1; h < l; ++h)
      if (h1.adjacent(yl, P[h - 1])) s.C_core.insert(P[h]);
    s.path = P;
    s.improvements = improvements;
    if (s.A.size() + s.B.size() + s.C.size() != nh)
      throw ExtremalError("case2_decompose", "maximal path misses part of a connected G[T1]");
    if (s.C.size() < delta || s.A.size() < s.C.size())
      throw ExtremalError("ACbounds", "|C| = " + str(s.C.size()) + ", |A| = " + str(s.A.size()));
    if (s.A_core.size() < delta || s.C_core.size() < delta)
      throw ExtremalError("cores", "|A'| = " + str(s.A_core.size()) + ", |C'| = " + str(s.C_core.size()) +
                                       " below delta(G[T1]) = " + str(delta));
    out.split_found = true;
    return out;
  }
}

Bridges find_square_p5_bridges(const Graph& g, const VertexSet& S, const VertexSet& A, const VertexSet& A_core,
                               const VertexSet& C, const VertexSet& C_core) {
  if (S.empty()) throw std::invalid_argument("bridges need a nonempty S");
  if (edges_between(g, A, C) != 0) throw std::invalid_argument("bridges need ||A,C|| = 0");
  if (A.size() < 4 || C.size() < 4) throw std::invalid_argument("bridges need |A|, |C| >= 4");
  if (!A_core.is_subset_of(A) || !C_core.is_subset_of(C)) throw std::invalid_argument("cores must lie in A and C");
  const VertexSet outside = (A | C).complement();
  const auto N = [&](Vertex v) -> const VertexSet& { return g.neighbors(v); };

  // Tail (p, q) completing a square P5 p q u w r s from the middle pair u w
  // given its two ends: p ~ q, u; r ~ w, s.
  for (Vertex x = S.first(); x >= 0; x = S.next(x))
    for (Vertex xp = S.first(); xp >= 0; xp = S.next(xp)) {
      if (xp == x || g.adjacent(x, xp)) continue;
      const VertexSet a_ends = A_core & N(x), c_starts = C_core & N(x);
      for (Vertex a2s = a_ends.first(); a2s >= 0; a2s = a_ends.next(a2s))
        for (Vertex c1 = c_starts.first(); c1 >= 0; c1 = c_starts.next(c1)) {
          VertexSet vs = N(a2s) & N(c1) & N(x) & outside;
          vs.erase(xp);
          for (Vertex v = vs.first(); v >= 0; v = vs.next(v))
            for (int orient = 0; orient < 2; ++orient) {
              // Q = a_{2s-1} a_{2s} m1 m2 c1 c2
              const Vertex m1 = orient == 0 ? v : x, m2 = orient == 0 ? x : v;
              const VertexSet a_prev = A & N(a2s) & N(m1);
              const VertexSet c_next = C & N(c1) & N(m2);
              for (Vertex a2s1 = a_prev.first(); a2s1 >= 0; a2s1 = a_prev.next(a2s1))
                for (Vertex c2 = c_next.first(); c2 >= 0; c2 = c_next.next(c2)) {
                  const Sequence Q{a2s1, a2s, m1, m2, c1, c2};
                  const VertexSet used = VertexSet::of(g.order(), Q);
                  const VertexSet a_firsts = (A_core & N(xp)) - used;
                  const VertexSet c_lasts = (C_core & N(xp)) - used;
                  for (Vertex a1 = a_firsts.first(); a1 >= 0; a1 = a_firsts.next(a1))
                    for (Vertex c2t = c_lasts.first(); c2t >= 0; c2t = c_lasts.next(c2t)) {
                      VertexSet vps = (N(a1) & N(c2t) & N(xp) & outside) - used;
                      for (Vertex vp = vps.first(); vp >= 0; vp = vps.next(vp))
                        for (int o2 = 0; o2 < 2; ++o2) {
                          // Q' = c_{2t-1} c_{2t} n1 n2 a1 a2
                          const Vertex n1 = o2 == 0 ? vp : xp, n2 = o2 == 0 ? xp : vp;
                          const Vertex c2t1 = ((C & N(c2t) & N(n1)) - used).first();
                          VertexSet a_next = (A & N(a1) & N(n2)) - used;
                          const Vertex a2 = a_next.first();
                          if (c2t1 < 0 || a2 < 0) continue;
                          Bridges out;
                          out.Q = Q;
                          out.Qp = {c2t1, c2t, n1, n2, a1, a2};
                          out.x = x, out.v = v, out.xp = xp, out.vp = vp;
                          if (!verify_square_path(g, out.Q) || !verify_square_path(g, out.Qp) ||
                              VertexSet::of(g.order(), out.Qp).intersects(used))
                            throw std::logic_error("bridge construction produced an invalid P5");
                          return out;
                        }
                    }
                }
            }
        }
    }
  throw ExtremalError("con", "no pair of disjoint square P5 bridges");
}

namespace {

// Exact s-t hamiltonian path search on h (local indices), Warnsdorff order.
class HamPathSearch {
 public:
  HamPathSearch(const Graph& h, Vertex t, BudgetMeter& meter) : h_(h), t_(t), meter_(meter), free_(h.all()) {}

  bool run(Vertex s) {
    path_.push_back(s);
    free_.erase(s);
    return dfs();
  }
  const Sequence& path() const { return path_; }

 private:
  bool dfs() {
    if (!meter_.tick()) return false;
    const Vertex e = path_.back();
    if (free_.empty()) return e == t_;
    if (e == t_) return false;
    VertexSet cand = h_.neighbors(e) & free_;
    if (free_.size() > 1) cand.erase(t_);
    std::vector<std::pair<int, Vertex>> order;
    cand.for_each([&](Vertex v) { order.emplace_back((h_.neighbors(v) & free_).size(), v); });
    std::sort(order.begin(), order.end());
    for (const auto& [deg, v] : order) {
      path_.push_back(v);
      free_.erase(v);
      if (dfs()) return true;
      free_.insert(v);
      path_.pop_back();
      if (meter_.exhausted()) return false;
    }
    return false;
  }

  const Graph& h_;
  Vertex t_;
  BudgetMeter& meter_;
  VertexSet free_;
  Sequence path_;
};

}  // namespace

SearchResult<Sequence> ham_connected_path(const Graph& h, Vertex s, Vertex t, const VertexSet& exclusions,
                                          const SearchBudget& budget, std::uint64_t seed) {
  if (!h.in_range(s) || !h.in_range(t) || s == t) throw std::invalid_argument("ham_connected_path needs s != t");
  if (exclusions.contains(s) || exclusions.contains(t)) throw std::invalid_argument("s and t must not be excluded");
  const InducedSubgraph sub = induced(h, exclusions.complement());
  const Graph& H = sub.graph;
  const int N = H.order();
  const Vertex ls = sub.from_host[s], lt = sub.from_host[t];
  SearchResult<Sequence> out;
  BudgetMeter meter(budget);

  // Rotation-extension with s fixed; t is appended last.
  Rng rng(seed);
  Sequence p{ls};
  VertexSet free = H.all();
  free.erase(ls);
  free.erase(lt);
  const long long step_limit = 20LL * N * N + 1000;
  for (long long step = 0; step < step_limit && meter.tick(); ++step) {
    const Vertex e = p.back();
    if (free.empty()) {
      if (H.adjacent(e, lt)) {
        p.push_back(lt);
        out.status = SearchStatus::found;
        out.value = sub.lift(p);
        out.nodes = meter.nodes();
        return out;
      }
    } else {
      const VertexSet cand = H.neighbors(e) & free;
      if (!cand.empty()) {
        Vertex best = -1;
        int best_deg = 0;
        cand.for_each([&](Vertex v) {
          const int d = (H.neighbors(v) & free).size();
          if (best < 0 || d < best_deg) best = v, best_deg = d;
        });
        p.push_back(best);
        free.erase(best);
        continue;
      }
    }
    // Rotate at the far end: e ~ p[i] gives the new end p[i+1].
    const int len = static_cast<int>(p.size());
    std::vector<int> pivots, good;
    for (int i = 0; i + 2 < len; ++i) {
      if (!H.adjacent(e, p[i])) continue;
      pivots.push_back(i);
      const Vertex end = p[i + 1];
      if (free.empty() ? H.adjacent(end, lt) : (H.neighbors(end) & free).size() > 0) good.push_back(i);
    }
    if (pivots.empty()) break;
    const std::vector<int>& pool = good.empty() ? pivots : good;
    const int i = pool[rng.below(pool.size())];
    std::reverse(p.begin() + i + 1, p.end());
  }

  HamPathSearch search(H, lt, meter);
  if (search.run(ls)) {
    out.status = SearchStatus::found;
    out.value = sub.lift(search.path());
  } else {
    out.status = meter.exhausted() ? SearchStatus::budget_exhausted : SearchStatus::proven_absent;
  }
  out.nodes = meter.nodes();
  return out;
}

namespace {

void stage(ExtremalReport& r, const std::string& name, const std::string& detail) {
  r.stages.push_back(name + ": " + detail);
}

// Spanning path first, second, ..., penult, last of G[Y] minus one extra
// vertex when |Y| is odd, with (first, second) and (penult, last) fixed.
Sequence segment(const Graph& g, const VertexSet& Y, Vertex first, Vertex second, Vertex penult, Vertex last,
                 const SearchBudget& budget, std::uint64_t seed, ExtremalReport& report, const char* name) {
  VertexSet excl = Y.complement();
  excl.insert(first);
  excl.insert(last);
  if (Y.size() % 2 != 0) {
    VertexSet spare = Y;
    for (Vertex v : {first, second, penult, last}) spare.erase(v);
    const Vertex extra = spare.first();
    if (extra < 0) throw ExtremalError("segments", std::string(name) + " has no spare vertex");
    excl.insert(extra);
    stage(report, "segments", std::string(name) + " odd, leaves out vertex " + str(extra + 1));
  }
  SearchResult<Sequence> r = ham_connected_path(g, second, penult, excl, budget, seed);
  if (!r.found())
    throw ExtremalError("segments", std::string(name) + " segment not found (" + to_string(r.status) + ")");
  Sequence out{first};
  out.insert(out.end(), r.value.begin(), r.value.end());
  out.push_back(last);
  return out;
}

}  // namespace

ExtremalRun extremal_hsc(const Graph& g, const VertexSet& S_in, const SearchBudget& budget, std::uint64_t seed) {
  const int n = g.order();
  const Rational& alpha = kExtremalAlpha;
  if (n < 3) throw std::invalid_argument("extremal_hsc needs at least 3 vertices");
  if (3 * min_degree(g) < 2 * n) throw std::invalid_argument("minimum degree below 2n/3");
  if (S_in.universe() != n || !is_alpha_extreme(g, S_in, alpha))
    throw std::invalid_argument("S is not a 1/36-extreme set of g");
  BudgetMeter meter(budget);
  ExtremalRun run;
  ExtremalReport& rep = run.report;
  rep.n = n;

  // Work on G' with 3k vertices.
  const Reduction red = reduce_to_3k(g, &S_in);
  const Graph& G = red.reduced.graph;
  const int N = G.order();
  const int k = N / 3;
  rep.k = k;
  rep.removed = red.removed;
  stage(rep, "3k", "removed " + str(static_cast<long long>(red.removed.size())) + ", delta(G') = " +
                       str(red.min_degree));
  VertexSet S = red.reduced.restrict(S_in);
  if (!is_alpha_extreme(G, S, alpha)) {
    AlphaExtremeSearch again = find_alpha_extreme(G, alpha, meter.remaining());
    if (!again.certificate) throw ExtremalError("3k", "no 1/36-extreme set survives the reduction");
    S = again.certificate->S;
    rep.s_source = "re-found after reduction (" + again.method + ")";
  }
  S = trim_extreme_set(G, S, alpha);
  const int fa = floor_alpha_k(alpha, k);
  if (S.size() != k - fa) throw std::logic_error("trimmed extreme set has the wrong order");
  rep.s_size = S.size();
  const VertexSet T = S.complement();

  Sequence woven;
  if (Rational(k) < 1 / alpha) {
    rep.branch = "small-k";
    if (edges_between(G, S, T) != 1LL * S.size() * T.size())
      throw ExtremalError("small-k", "G[S,T] is not complete");
    Sequence cyc;
    if (T.size() == 2) {
      cyc = T.members();
    } else {
      const InducedSubgraph gt = induced(G, T);
      PathOrCycle d = long_path_or_cycle(gt.graph);
      if (!d.cycle || static_cast<int>(d.seq.size()) != T.size())
        throw ExtremalError("small-k", "no hamiltonian cycle in G[T]");
      cyc = gt.lift(d.seq);
    }
    const std::vector<Vertex> xs = S.members();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      woven.push_back(cyc[2 * i]);
      woven.push_back(cyc[2 * i + 1]);
      woven.push_back(xs[i]);
    }
    stage(rep, "small-k", "Dirac cycle on T, " + str(static_cast<long long>(xs.size())) + " insertions");
  } else {
    // T0: the required number of T-vertices with fewest neighbours in S.
    const int b = floor_sqrt_alpha_k(alpha, k);
    const int t0 = T.size() % 2 == 0 ? 2 * b : 2 * b - 1;
    std::vector<Vertex> ts = T.members();
    std::stable_sort(ts.begin(), ts.end(), [&](Vertex u, Vertex v) {
      return G.neighbors(u).intersection_size(S) < G.neighbors(v).intersection_size(S);
    });
    VertexSet T0 = VertexSet::of(N, std::span<const Vertex>(ts.data(), static_cast<std::size_t>(t0)));
    const VertexSet T1 = T - T0;
    if ((N - S.size() - T0.size()) % 2 != 0 || T0.size() < 2 * b - 1 || T0.size() > 2 * b)
      throw std::logic_error("T0 has the wrong size or parity");
    rep.t0_size = T0.size();
    const int m = k - T0.size() + fa;
    rep.m = m;
    S.for_each([&](Vertex x) {
      if (T.size() - G.neighbors(x).intersection_size(T) > 2 * fa)
        throw ExtremalError("degx", "vertex " + str(x + 1) + " misses too much of T");
    });
    T1.for_each([&](Vertex y) {
      if (S.size() - G.neighbors(y).intersection_size(S) > b)
        throw ExtremalError("degy", "vertex " + str(y + 1) + " misses too much of S");
    });
    if (3 * m < 2 * k + 3) throw ExtremalError("m", "m = " + str(m) + " below 2k/3 + 1");
    const InducedSubgraph t1 = induced(G, T1);
    if (min_degree(t1.graph) < m) throw ExtremalError("T1", "delta(G[T1]) below m");
    stage(rep, "T0", "|T0| = " + str(T0.size()) + ", m = " + str(m));

    Case2Outcome split = case2_decompose(t1.graph);
    if (!split.split_found) {
      rep.branch = "case1";
      const Sequence even = t1.lift(even_long_cycle(t1.graph, split.long_cycle));
      rep.even_cycle = static_cast<int>(even.size());
      if (rep.even_cycle < 2 * m) throw ExtremalError("case1", "even cycle shorter than 2m");
      stage(rep, "case1", "cycle from " + split.cycle_source + ", even cycle of length " + str(rep.even_cycle));
      const PortSet ports = cyclic_ports(even);
      const InsertionMatching match = insert_ports(G, S, ports, true);
      rep.ports = static_cast<int>(ports.ports.size());
      rep.hall_slack = match.hall_slack;
      woven = weave(ports, match);
    } else {
      const Case2Split& sp = split.split;
      rep.branch = sp.connected ? "case2-connected" : "case2-disconnected";
      rep.improvements = sp.improvements;
      const VertexSet A = t1.lift(sp.A, N), C = t1.lift(sp.C, N);
      const VertexSet Ac = t1.lift(sp.A_core, N), Cc = t1.lift(sp.C_core, N);
      rep.a_size = A.size(), rep.b_size = sp.B.size(), rep.c_size = C.size();
      rep.a_core = Ac.size(), rep.c_core = Cc.size();
      if (Ac.size() < m || Cc.size() < m) throw ExtremalError("cores", "|A'| or |C'| below m");
      if (A.size() >= k) throw ExtremalError("ACbounds", "|A| >= k");
      stage(rep, rep.branch,
            "|A| = " + str(A.size()) + ", |B| = " + str(sp.B.size()) + ", |C| = " + str(C.size()) +
                ", improvements " + str(sp.improvements));
      // Claim Y'.
      (A | C).complement().for_each([&](Vertex v) {
        bool some = false;
        for (const auto& [Y, Yc] : {std::pair{&A, &Ac}, std::pair{&C, &Cc}}) {
          bool all = true;
          Yc->for_each([&](Vertex y) { all = all && (G.neighbors(v) & G.neighbors(y) & *Y).size() >= 3; });
          some = some || all;
        }
        if (!some) throw ExtremalError("Y'", "vertex " + str(v + 1) + " has no good side");
      });

      const Bridges br = find_square_p5_bridges(G, S, A, Ac, C, Cc);
      stage(rep, "con", "Q = " + format_sequence(red.reduced.lift(br.Q)) +
                            ", Q' = " + format_sequence(red.reduced.lift(br.Qp)));
      const Sequence R = segment(G, A, br.Qp[4], br.Qp[5], br.Q[0], br.Q[1], meter.remaining(), seed, rep, "A");
      const Sequence Rp = segment(G, C, br.Q[4], br.Q[5], br.Qp[0], br.Qp[1], meter.remaining(), seed, rep, "C");
      rep.even_cycle = static_cast<int>(R.size() + Rp.size() + 4);

      VertexSet avail = S;
      for (Vertex v : {br.x, br.v, br.xp, br.vp}) avail.erase(v);
      PortSet pa = path_ports(R), pc = path_ports(Rp);
      PortSet all{{}, pa.ports};
      all.ports.insert(all.ports.end(), pc.ports.begin(), pc.ports.end());
      const InsertionMatching match = insert_ports(G, avail, all, true);
      rep.ports = static_cast<int>(all.ports.size());
      rep.hall_slack = match.hall_slack;
      const auto lay = [&](const Sequence& seg, std::size_t offset) {
        const std::size_t s = seg.size() / 2;
        for (std::size_t i = 0; i < s; ++i) {
          woven.push_back(seg[2 * i]);
          woven.push_back(seg[2 * i + 1]);
          if (i + 1 < s) woven.push_back(match.pairs[offset + i].first);
        }
      };
      lay(R, 0);
      woven.push_back(br.Q[2]);
      woven.push_back(br.Q[3]);
      lay(Rp, pa.ports.size());
      woven.push_back(br.Qp[2]);
      woven.push_back(br.Qp[3]);
    }
  }

  rep.woven = static_cast<int>(woven.size());
  if (!verify_square_cycle(G, woven)) throw std::logic_error("woven square cycle does not verify");
  if (3 * rep.woven <= 2 * N) throw ExtremalError("length", "woven cycle not longer than 2k");
  stage(rep, "weave", "square cycle of length " + str(rep.woven) + " in G'");

  SearchResult<Sequence> full = fk3_complete(G, woven, meter.remaining(), seed);
  meter.tick(full.nodes);
  if (!full.found()) throw ExtremalError("fk3_complete", "completion in G' stopped (" + to_string(full.status) + ")");
  Sequence cycle = red.reduced.lift(full.value);
  if (!red.removed.empty()) {
    full = fk3_complete(g, cycle, meter.remaining(), seed);
    if (!full.found())
      throw ExtremalError("fk3_complete", "reinsertion into G stopped (" + to_string(full.status) + ")");
    cycle = full.value;
  }
  stage(rep, "fk3_complete", "hamiltonian");
  const Verdict v = verify_square_cycle(g, cycle);
  if (!v.accepted || !v.hamiltonian) throw std::logic_error("extremal cycle does not verify: " + v.reason);
  run.cycle = std::move(cycle);
  return run;
}

}  // namespace posa
