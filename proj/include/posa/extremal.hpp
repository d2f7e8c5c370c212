#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "posa/budget.hpp"
#include "posa/graph.hpp"
#include "posa/oracle.hpp"
#include "posa/rational.hpp"
#include "posa/square.hpp"

namespace posa {

/// A construction step of the extremal case failed. The theorem holds for
/// every order, so this means a broken precondition or a bug.
class ExtremalError : public std::runtime_error {
 public:
  ExtremalError(std::string step, const std::string& what);
  const std::string& step() const { return step_; }

 private:
  std::string step_;
};

struct Reduction {
  InducedSubgraph reduced;      // G' on 3k vertices
  std::vector<Vertex> removed;  // host vertices, ascending
  int min_degree = 0;           // delta(G')
};

/// Deletes n mod 3 vertices, as few of them from `keep` as possible and
/// subject to that leaving the largest minimum degree (exhaustive over pairs
/// up to 400 vertices, one vertex at a time above; ties to small indices).
/// Any choice leaves delta >= 2k.
Reduction reduce_to_3k(const Graph& g, const VertexSet* keep = nullptr);

struct PathOrCycle {
  Sequence seq;
  bool cycle = false;

  /// Number of edges.
  int length() const {
    const int n = static_cast<int>(seq.size());
    return cycle ? n : std::max(0, n - 1);
  }
};

/// Path or cycle of length at least min(2 delta(h), |h|) by extension and
/// Dirac-style closing. Throws std::invalid_argument when h is disconnected
/// or has fewer than 3 vertices.
PathOrCycle long_path_or_cycle(const Graph& h);

/// Even cycle of length at least min(2 delta(h), |h|) from a cycle c with
/// |c| > |h| - delta(h). |h| must be even.
Sequence even_long_cycle(const Graph& h, const Sequence& c);

/// Windows {z_{2i-1}, z_{2i}, z_{2i+1}, z_{2i+2}} over a host sequence.
struct PortSet {
  Sequence host;
  std::vector<std::array<Vertex, 4>> ports;
};

/// |z|/2 windows with indices taken modulo |z| (|z| even, at least 4).
PortSet cyclic_ports(const Sequence& z);
/// |z|/2 - 1 windows along a path (|z| even).
PortSet path_ports(const Sequence& z);

struct InsertionMatching {
  std::vector<std::pair<Vertex, int>> pairs;  // (x, port index), by port
  // min over x, p of ||x,P|| + ||S',p|| - |P| in the insertion bigraph.
  int hall_slack = 0;
};

/// Matching of ports to distinct vertices of s_avail seeing the whole port,
/// by augmenting paths. check_hall throws ExtremalError when the degree-sum
/// form of Hall's condition fails; a missing saturating matching throws too.
InsertionMatching insert_ports(const Graph& g, const VertexSet& s_avail, const PortSet& ports,
                               bool check_hall = false);

/// Square cycle z1 z2 x1 z3 z4 x2 ... from cyclic ports and their matching.
Sequence weave(const PortSet& ports, const InsertionMatching& matching);

struct Case2Split {
  VertexSet A, B, C, A_core, C_core;
  bool connected = true;
  Sequence path;  // the path y1 ... yl behind the split (connected case)
  int improvements = 0;
};

struct Case2Outcome {
  bool split_found = false;
  Case2Split split;
  // Otherwise a cycle longer than |h1| - delta(h1), which leads to Case 1.
  Sequence long_cycle;
  std::string cycle_source;
};

/// Splits h1 = G[T1] into A, B, C along a non-extendable path with the
/// end-neighbourhood moves of the proof applied until stable, or returns a
/// long cycle found on the way.
Case2Outcome case2_decompose(const Graph& h1);

struct Bridges {
  Sequence Q;   // a_{2s-1} a_{2s} {v x} c_1 c_2
  Sequence Qp;  // c_{2t-1} c_{2t} {v' x'} a_1 a_2
  Vertex x = -1, v = -1, xp = -1, vp = -1;
};

/// Two disjoint square P5's joining edges of A and C through S.
Bridges find_square_p5_bridges(const Graph& g, const VertexSet& S, const VertexSet& A, const VertexSet& A_core,
                               const VertexSet& C, const VertexSet& C_core);

/// Spanning s-t path of h minus exclusions, by rotation-extension with an
/// exact backtracking fallback. proven_absent only when the search completed.
SearchResult<Sequence> ham_connected_path(const Graph& h, Vertex s, Vertex t, const VertexSet& exclusions,
                                          const SearchBudget& budget = {}, std::uint64_t seed = 0);

struct ExtremalReport {
  std::string branch;  // "small-k", "case1", "case2-connected", "case2-disconnected"
  int n = 0;
  int k = 0;
  std::vector<Vertex> removed;
  std::string s_source = "given";
  int s_size = 0;
  int t0_size = 0;
  int m = 0;
  int a_size = 0, b_size = 0, c_size = 0;
  int a_core = 0, c_core = 0;
  int even_cycle = 0;  // length of the even cycle (Case 1) or of D (Case 2)
  int improvements = 0;
  int ports = 0;
  int hall_slack = 0;
  int woven = 0;  // length of the square cycle handed to completion
  std::vector<std::string> stages;
};

struct ExtremalRun {
  Sequence cycle;
  ExtremalReport report;
};

/// Hamiltonian square cycle of g from a 1/36-extreme set S. Throws
/// std::invalid_argument on precondition violations and ExtremalError
/// (naming the step) when a construction step fails.
ExtremalRun extremal_hsc(const Graph& g, const VertexSet& S, const SearchBudget& budget = {},
                         std::uint64_t seed = 0);

inline const Rational kExtremalAlpha{1, 36};

}  // namespace posa
