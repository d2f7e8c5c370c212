#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "posa/budget.hpp"
#include "posa/graph.hpp"
#include "posa/rational.hpp"
#include "posa/square.hpp"

namespace posa {

struct LongPathResult {
  Sequence path;
  bool bound_met = false;  // |P| >= (1/2 - 3 eps) n
  // One entry per applied move: "extend", "m1 x=.. i=.. q=..", "m2", "oracle".
  std::vector<std::string> log;
  // Filled when the loop stops short of the bound in the lemma's regime.
  std::vector<std::string> diagnostics;
};

/// Improvement loop for part (a) of the path cover lemma, starting from a
/// greedy square path on the first edge. Every applied move lengthens the
/// path. Graphs on at most 12 vertices use the exact optimum instead.
LongPathResult longest_square_path(const Graph& h, const Rational& epsilon, const SearchBudget& budget = {},
                                   std::uint64_t seed = 0);

/// The same loop from a given square path; restart enables one rerun of the
/// hamiltonian path heuristic on all of h when both moves are stuck.
LongPathResult improve_square_path(const Graph& h, Sequence path, const Rational& epsilon,
                                   const SearchBudget& budget = {}, std::uint64_t seed = 0, bool restart = false);

struct CoverResult {
  Sequence p1;
  Sequence p2;
  std::string route;  // "p1-alone", "fk2-complement" or "fk2-neighbourhood"
  std::vector<std::string> log;
  int sum = 0;
  Rational bound;         // (5/6 - 2 eps) n
  bool bound_met = false; // sum > bound
  bool regime = false;    // eps <= 1/500, n >= 6000, delta >= (2/3 - eps) n
};

/// Part (b): P1 from longest_square_path, P2 from a hamiltonian square path
/// search on H - P1 or on the neighbourhood of a vertex that sees much of P1.
CoverResult cover_two_paths(const Graph& h, const Rational& epsilon, const SearchBudget& budget = {},
                            std::uint64_t seed = 0);

}  // namespace posa
