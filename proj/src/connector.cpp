#include "posa/connector.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

#include "posa/extremity.hpp"

namespace posa {

std::string to_string(ConnectCase c) {
  switch (c) {
    case ConnectCase::none: return "none";
    case ConnectCase::case1: return "1";
    case ConnectCase::case2a: return "2a";
    case ConnectCase::case2b: return "2b";
    case ConnectCase::fallback: return "fallback";
  }
  return "?";
}

std::string to_string(ConnectStatus s) {
  switch (s) {
    case ConnectStatus::connected: return "connected";
    case ConnectStatus::anchor_not_found: return "anchor-not-found";
    case ConnectStatus::case_exhausted: return "case-exhausted";
  }
  return "?";
}

PortClasses classify_ports_of_four(const Graph& h, const std::array<Vertex, 4>& ap) {
  const int n = h.order();
  for (int i = 0; i < 4; ++i) {
    if (!h.in_range(ap[i])) throw std::out_of_range("port vertex out of range");
    for (int j = 0; j < i; ++j)
      if (ap[i] == ap[j]) throw std::invalid_argument("port vertices must be distinct");
  }
  PortClasses pc;
  for (VertexSet& s : pc.S) s = VertexSet(n);
  pc.T1 = VertexSet(n);
  pc.T2 = VertexSet(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto& nb = h.neighbors(v);
    const int left = nb.contains(ap[0]) + nb.contains(ap[1]);
    const int right = nb.contains(ap[2]) + nb.contains(ap[3]);
    pc.S[left + right].insert(v);
    if (left + right >= 3) {
      if (left == 2) pc.T1.insert(v);
      if (right == 2) pc.T2.insert(v);
    }
  }
  pc.U = (pc.T1 | pc.T2).complement();
  return pc;
}

namespace {

// A block of the path whose internal order is left to the arrangement.
using Group = std::vector<Vertex>;

// First square path obtained by ordering each group (in sequence), or empty.
Sequence arrange(const Graph& h, const std::vector<Group>& groups) {
  Sequence seq;
  std::function<bool(std::size_t, std::vector<Vertex>)> place = [&](std::size_t gi, std::vector<Vertex> rest) {
    if (rest.empty()) {
      if (gi + 1 == groups.size()) return true;
      return place(gi + 1, groups[gi + 1]);
    }
    for (std::size_t i = 0; i < rest.size(); ++i) {
      const Vertex v = rest[i];
      const std::size_t len = seq.size();
      if (len >= 1 && !h.adjacent(seq[len - 1], v)) continue;
      if (len >= 2 && !h.adjacent(seq[len - 2], v)) continue;
      seq.push_back(v);
      std::vector<Vertex> next = rest;
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
      if (place(gi, next)) return true;
      seq.pop_back();
    }
    return false;
  };
  if (groups.empty() || !place(0, groups[0])) return {};
  return seq;
}

class Solver {
 public:
  Solver(const Graph& h, const ConnectorParams& p, ConnectionTrace& trace) : h_(h), p_(p), trace_(trace) {}

  // Cases for one orientation. ab, cd and the anchors are already oriented.
  Sequence run(OrderedEdge ab, OrderedEdge cd, const std::array<Vertex, 4>& ap, const VertexSet& v_prime,
               const PortClasses& pc, ConnectCase only) {
    ab_ = ab;
    cd_ = cd;
    ap_ = ap;
    const auto wanted = [&](ConnectCase c) { return only == ConnectCase::none || only == c; };
    if (wanted(ConnectCase::case1)) {
      Sequence s = case1(pc, v_prime, {});
      if (!s.empty()) return done(ConnectCase::case1, s);
    }
    if (wanted(ConnectCase::case2a)) {
      Sequence s = case2a(pc, v_prime);
      if (!s.empty()) return done(ConnectCase::case2a, s);
    }
    if (wanted(ConnectCase::case2b)) {
      Sequence s = case2b(pc, v_prime);
      if (!s.empty()) return done(ConnectCase::case2b, s);
    }
    return {};
  }

  void note_special(const std::string& name, const VertexSet& s) {
    if (!p_.faithful) return;
    const Rational third(h_.order(), 3);
    if (Rational(s.size()) < (1 - p_.alpha + p_.beta) * third) return;
    if (is_alpha_beta_extreme(h_, s, p_.alpha, p_.beta)) trace_.extreme_special_sets.push_back(name);
  }

 private:
  Sequence done(ConnectCase c, Sequence s) {
    trace_.case_taken = c;
    return s;
  }

  std::vector<Group> frame(const std::vector<Group>& middle) const {
    std::vector<Group> g{{ab_.first}, {ab_.second}, {ap_[0], ap_[1]}};
    g.insert(g.end(), middle.begin(), middle.end());
    g.push_back({ap_[2], ap_[3]});
    g.push_back({cd_.first});
    g.push_back({cd_.second});
    return g;
  }

  // Middle part joining {a'b'} to {c'd'}. Inside case 2a, sides holds the
  // bridge edges {a''b''} and {c''d''} that surround it.
  Sequence case1(const PortClasses& pc, const VertexSet& v2, const std::vector<Group>& sides) {
    const VertexSet s4 = pc.S[4] & v2;
    const VertexSet s34 = (pc.S[3] | pc.S[4]) & v2;
    const auto attempt = [&](Group q) -> Sequence {
      if (sides.empty()) return arrange(h_, frame({q}));
      return arrange(h_, frame({sides[0], q, sides[1]}));
    };
    const Vertex x0 = s4.first();
    if (x0 < 0) return {};
    // The proof's first step: x in S4 with a partner u in S3 ∪ S4.
    for (Vertex x = x0; x >= 0; x = s4.next(x)) {
      const VertexSet partners = h_.neighbors(x) & s34;
      for (Vertex u = partners.first(); u >= 0; u = partners.next(u)) {
        Sequence s = attempt({x, u});
        if (!s.empty()) {
          trace_.chosen.push_back({"x", x});
          trace_.chosen.push_back({"u", u});
          return s;
        }
      }
      if (p_.faithful) break;
    }
    // Otherwise an edge inside S4.
    for (Vertex u = s4.first(); u >= 0; u = s4.next(u)) {
      const VertexSet ends = h_.neighbors(u) & s4;
      for (Vertex v = ends.next(u); v >= 0; v = ends.next(v)) {
        Sequence s = attempt({u, v});
        if (!s.empty()) {
          trace_.chosen.push_back({"u", u});
          trace_.chosen.push_back({"v", v});
          return s;
        }
      }
    }
    return {};
  }

  Sequence case2a(const PortClasses& pc, const VertexSet& v1) {
    const VertexSet t1 = pc.T1 & v1;
    const VertexSet t2 = pc.T2 & v1;
    for (Vertex x = t1.first(); x >= 0; x = t1.next(x)) {
      const VertexSet ys = h_.neighbors(x) & t2;
      for (Vertex y = ys.first(); y >= 0; y = ys.next(y)) {
        Sequence s = arrange(h_, frame({{x, y}}));
        if (!s.empty()) {
          trace_.chosen.push_back({"x", x});
          trace_.chosen.push_back({"y", y});
          return s;
        }
      }
    }
    // Bridge A'' = {a'', b'', c'', d''} and a nested case 1.
    int tried = 0;
    const int limit = p_.faithful ? 1 : 16;
    for (Vertex a2 = t1.first(); a2 >= 0 && tried < limit; a2 = t1.next(a2)) {
      const VertexSet b2s = h_.neighbors(a2) & t1;
      for (Vertex b2 = b2s.next(a2); b2 >= 0 && tried < limit; b2 = b2s.next(b2)) {
        VertexSet rest = t2;
        rest.erase(a2);
        rest.erase(b2);
        for (Vertex c2 = rest.first(); c2 >= 0 && tried < limit; c2 = rest.next(c2)) {
          const VertexSet d2s = h_.neighbors(c2) & rest;
          for (Vertex d2 = d2s.next(c2); d2 >= 0 && tried < limit; d2 = d2s.next(d2)) {
            ++tried;
            const std::array<Vertex, 4> a_pp{a2, b2, c2, d2};
            const PortClasses inner = classify_ports_of_four(h_, a_pp);
            VertexSet v2 = v1;
            for (Vertex z : a_pp) v2.erase(z);
            note_special("S4(A'')", inner.S[4]);
            Sequence s = case1(inner, v2, {{a2, b2}, {c2, d2}});
            if (!s.empty()) {
              trace_.chosen.insert(trace_.chosen.begin(),
                                   {{"a''", a2}, {"b''", b2}, {"c''", c2}, {"d''", d2}});
              return s;
            }
          }
        }
      }
    }
    return {};
  }

  Sequence case2b(const PortClasses& pc, const VertexSet& v1) {
    const VertexSet xs = h_.neighbors(ap_[0]) & h_.neighbors(ap_[1]) & v1;
    for (Vertex x = xs.first(); x >= 0; x = xs.next(x)) {
      const VertexSet s = pc.T2 & h_.neighbors(x) & v1;
      note_special("T2 ∩ N(x)", pc.T2 & h_.neighbors(x));
      for (Vertex y = s.first(); y >= 0; y = s.next(y)) {
        const VertexSet zs = h_.neighbors(y) & s;
        for (Vertex z = zs.next(y); z >= 0; z = zs.next(z)) {
          Sequence path = arrange(h_, frame({{x}, {y, z}}));
          if (!path.empty()) {
            trace_.chosen.push_back({"x", x});
            trace_.chosen.push_back({"y", y});
            trace_.chosen.push_back({"z", z});
            return path;
          }
        }
      }
      if (p_.faithful) break;
    }
    return {};
  }

  const Graph& h_;
  const ConnectorParams& p_;
  ConnectionTrace& trace_;
  OrderedEdge ab_, cd_;
  std::array<Vertex, 4> ap_{};
};

std::optional<std::pair<Vertex, Vertex>> anchor_edge(const Graph& h, const VertexSet& pool) {
  for (Vertex u = pool.first(); u >= 0; u = pool.next(u)) {
    const VertexSet ends = h.neighbors(u) & pool;
    const Vertex v = ends.next(u);
    if (v >= 0) return std::make_pair(u, v);
  }
  return std::nullopt;
}

void check_faithful(const Graph& h, const ConnectorParams& p) {
  const Rational n(h.order());
  if (!(0 < p.beta && p.beta < p.alpha && p.alpha <= Rational(1, 36)))
    throw std::invalid_argument("connecting lemma needs 0 < beta < alpha <= 1/36");
  if (!(0 < p.epsilon && p.epsilon <= (p.alpha - p.beta) * Rational(10, 151)))
    throw std::invalid_argument("connecting lemma needs 0 < eps <= (alpha-beta)/15.1");
  if (p.l != 10) throw std::invalid_argument("connecting lemma fixes l = 10");
  if (n < 660 / p.epsilon || n < 69 / p.beta)
    throw std::invalid_argument("connecting lemma needs n >= max(660/eps, 69/beta)");
  if (Rational(min_degree(h)) < (Rational(2, 3) - p.epsilon) * n)
    throw std::invalid_argument("connecting lemma needs minimum degree >= (2/3 - eps)n");
}

}  // namespace

ConnectResult connect(const Graph& h, OrderedEdge ab, OrderedEdge cd, const VertexSet& L,
                      const ConnectorParams& params) {
  const int n = h.order();
  const Vertex a = ab.first, b = ab.second, c = cd.first, d = cd.second;
  for (Vertex v : {a, b, c, d})
    if (!h.in_range(v)) throw std::out_of_range("edge endpoint out of range");
  if (a == b || a == c || a == d || b == c || b == d || c == d)
    throw std::invalid_argument("ab and cd must be disjoint");
  if (!h.adjacent(a, b) || !h.adjacent(c, d)) throw std::invalid_argument("ab and cd must be edges");
  if (L.universe() != n) throw std::invalid_argument("L has the wrong universe");
  if (L.contains(a) || L.contains(b) || L.contains(c) || L.contains(d))
    throw std::invalid_argument("ab and cd must avoid L");
  if (L.size() > params.l) throw std::invalid_argument("|L| exceeds l");
  if (params.faithful) check_faithful(h, params);

  ConnectResult out;
  ConnectionTrace& trace = out.trace;
  Solver solver(h, params, trace);
  const VertexSet A = VertexSet::of(n, {a, b, c, d});

  // (a) anchors a'b' in N(a,b) and c'd' in N(c,d).
  const VertexSet nab = common_neighborhood(h, {a, b});
  const VertexSet ncd = common_neighborhood(h, {c, d});
  solver.note_special("N(a,b)", nab);
  solver.note_special("N(c,d)", ncd);
  const auto first = anchor_edge(h, nab - L - A);
  std::optional<std::pair<Vertex, Vertex>> second;
  if (first) {
    VertexSet pool = ncd - L - A;
    pool.erase(first->first);
    pool.erase(first->second);
    second = anchor_edge(h, pool);
  }

  if (first && second) {
    const std::array<Vertex, 4> ap{first->first, first->second, second->first, second->second};
    trace.anchors = ap;
    trace.classes = classify_ports_of_four(h, ap);
    const PortClasses& pc = trace.classes;
    solver.note_special("S4", pc.S[4]);
    solver.note_special("T1", pc.T1);
    solver.note_special("T2", pc.T2);
    VertexSet v_prime = (A | VertexSet::of(n, ap) | L).complement();

    const int l = params.l;
    const bool swap = pc.T1.size() > pc.T2.size();
    const int t1 = std::min(pc.T1.size(), pc.T2.size());
    if (pc.S[4].size() > l + 12) trace.proof_case = ConnectCase::case1;
    else trace.proof_case = t1 > l + 8 ? ConnectCase::case2a : ConnectCase::case2b;

    const std::array<Vertex, 4> ap_rev{ap[3], ap[2], ap[1], ap[0]};
    const auto oriented = [&](bool reversed, ConnectCase only) -> Sequence {
      if (!reversed) return solver.run(ab, cd, ap, v_prime, pc, only);
      PortClasses rev = classify_ports_of_four(h, ap_rev);
      Sequence s = solver.run({d, c}, {b, a}, ap_rev, v_prime, rev, only);
      std::reverse(s.begin(), s.end());
      return s;
    };

    Sequence path;
    trace.oriented_reversed = swap;
    if (params.faithful) {
      path = oriented(swap, trace.proof_case);
    } else {
      path = oriented(swap, ConnectCase::none);
      if (path.empty()) {
        trace.oriented_reversed = !swap;
        path = oriented(!swap, ConnectCase::none);
      }
    }
    if (!path.empty()) {
      out.status = ConnectStatus::connected;
      out.path = std::move(path);
    }
  }

  if (!out.ok() && !params.faithful && params.fallback_nodes > 0) {
    trace.chosen.clear();
    Sequence path =
        bounded_connect_search(h, ab, cd, L, kMaxConnectorOrder, params.fallback_nodes, &trace.fallback_nodes);
    if (!path.empty()) {
      trace.case_taken = ConnectCase::fallback;
      out.status = ConnectStatus::connected;
      out.path = std::move(path);
    }
  }
  if (!out.ok()) {
    trace.case_taken = ConnectCase::none;
    out.status = (first && second) ? ConnectStatus::case_exhausted : ConnectStatus::anchor_not_found;
    return out;
  }

  // Soundness gate; a failure here is a bug, never a result.
  const Verdict v = verify_square_path(h, out.path);
  const Sequence& p = out.path;
  bool endpoints = p.size() >= 4 && p[0] == a && p[1] == b && p[p.size() - 2] == c && p.back() == d;
  bool avoids = true;
  for (Vertex x : p) avoids = avoids && !L.contains(x);
  if (!v || !endpoints || !avoids || static_cast<int>(p.size()) > kMaxConnectorOrder)
    throw std::logic_error("connector produced an invalid path: " + format_sequence(p));
  return out;
}

Sequence bounded_connect_search(const Graph& h, OrderedEdge ab, OrderedEdge cd, const VertexSet& blocked,
                                int max_order, long long node_limit, long long* nodes) {
  const Vertex c = cd.first, d = cd.second;
  VertexSet used = blocked;
  for (Vertex v : {ab.first, ab.second, c, d}) used.insert(v);
  Sequence seq{ab.first, ab.second};
  long long count = 0;
  const auto closes = [&]() {
    const Vertex x = seq[seq.size() - 2], y = seq.back();
    return h.adjacent(x, c) && h.adjacent(y, c) && h.adjacent(y, d);
  };
  std::function<bool(int)> dfs = [&](int depth) {
    if (++count > node_limit) return false;
    if (depth == 0) return closes();
    const Vertex x = seq[seq.size() - 2], y = seq.back();
    VertexSet cand = h.neighbors(x) & h.neighbors(y);
    cand -= used;
    // Vertices that already see c and d first.
    std::vector<std::pair<int, Vertex>> order;
    cand.for_each([&](Vertex v) { order.push_back({-(h.adjacent(v, c) + h.adjacent(v, d)), v}); });
    std::sort(order.begin(), order.end());
    for (const auto& [key, v] : order) {
      seq.push_back(v);
      used.insert(v);
      if (dfs(depth - 1)) return true;
      used.erase(v);
      seq.pop_back();
      if (count > node_limit) return false;
    }
    return false;
  };
  Sequence found;
  for (int interior = 0; interior + 4 <= max_order && count <= node_limit; ++interior) {
    if (dfs(interior)) {
      found = seq;
      found.push_back(c);
      found.push_back(d);
      break;
    }
  }
  if (nodes) *nodes = count;
  return found;
}

}  // namespace posa
