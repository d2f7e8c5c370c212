#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "posa/budget.hpp"
#include "posa/graph.hpp"
#include "posa/rational.hpp"
#include "posa/square.hpp"

namespace posa {

struct OrderedEdge {
  Vertex first = -1;
  Vertex second = -1;
};

struct ConnectorParams {
  Rational alpha{11, 504};
  Rational beta{1, 504};
  Rational epsilon{25, 19026};
  int l = 10;
  // Faithful mode checks the lemma's hypotheses (and throws when they fail)
  // and follows only the case selected by the counting argument.
  bool faithful = false;
  // Node limit of the exhaustive search used when every case fails
  // (practical mode only); 0 disables it.
  long long fallback_nodes = 200'000;
};

/// S_i = {v : ||v,A'|| = i}, T1/T2 = members of S_3 ∪ S_4 seeing both of
/// {a',b'} / {c',d'}, U = V minus (T1 ∪ T2).
struct PortClasses {
  std::array<VertexSet, 5> S;
  VertexSet T1, T2, U;
};

PortClasses classify_ports_of_four(const Graph& h, const std::array<Vertex, 4>& a_prime);

enum class ConnectCase { none, case1, case2a, case2b, fallback };

std::string to_string(ConnectCase c);

enum class ConnectStatus { connected, anchor_not_found, case_exhausted };

std::string to_string(ConnectStatus s);

struct ConnectionTrace {
  std::array<Vertex, 4> anchors{-1, -1, -1, -1};  // a', b', c', d'
  ConnectCase case_taken = ConnectCase::none;
  // Case the counting argument selects: |S4| > l+12 gives 1, otherwise 2a
  // or 2b by |T1| > l+8 after orienting so that |T1| <= |T2|.
  ConnectCase proof_case = ConnectCase::none;
  bool oriented_reversed = false;  // roles of ab and cd swapped
  PortClasses classes;
  std::vector<std::pair<std::string, Vertex>> chosen;
  // Special sets met along the way that were (alpha, beta)-extreme; only
  // filled in faithful mode.
  std::vector<std::string> extreme_special_sets;
  long long fallback_nodes = 0;
};

struct ConnectResult {
  ConnectStatus status = ConnectStatus::case_exhausted;
  Sequence path;  // a b ... c d
  ConnectionTrace trace;

  bool ok() const { return status == ConnectStatus::connected; }
};

inline constexpr int kMaxConnectorOrder = 14;

/// Square (ab, cd)-path of order at most 14 avoiding L. Throws
/// std::invalid_argument when ab, cd are not disjoint edges of h - L or
/// |L| > l, and in faithful mode when the degree or order hypotheses fail.
ConnectResult connect(const Graph& h, OrderedEdge ab, OrderedEdge cd, const VertexSet& L,
                      const ConnectorParams& params = {});

/// Square (ab, cd)-path with at most max_order vertices whose interior
/// avoids `blocked`, by depth-first iterative deepening.
Sequence bounded_connect_search(const Graph& h, OrderedEdge ab, OrderedEdge cd, const VertexSet& blocked,
                                int max_order, long long node_limit, long long* nodes = nullptr);

}  // namespace posa
