#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "posa/budget.hpp"
#include "posa/graph.hpp"
#include "posa/square.hpp"

namespace posa {

enum class SearchStatus { found, proven_absent, budget_exhausted };

std::string to_string(SearchStatus s);

template <class T>
struct SearchResult {
  SearchStatus status = SearchStatus::budget_exhausted;
  T value{};
  long long nodes = 0;

  bool found() const { return status == SearchStatus::found; }
};

/// Hamiltonian square cycle by backtracking. Vertex 0 is placed first and
/// extensions are tried in ascending order.
SearchResult<Sequence> exact_hsc(const Graph& g, const SearchBudget& budget = {});

/// Square path maximizing (length, 3-chords, 4-chords) lexicographically.
/// Exhausted budget throws std::runtime_error.
Sequence optimal_square_path_exact(const Graph& g, const SearchBudget& budget = {});

/// Hamiltonian square path. proven_absent is reported only when the
/// minimum degree is below (2n-1)/3 and the exhaustive search completed.
/// On budget exhaustion value holds the longest square path seen.
SearchResult<Sequence> fk2_path(const Graph& g, const SearchBudget& budget = {},
                                std::uint64_t seed = 0);

/// Extends the square cycle c to a hamiltonian one by block insertions and
/// local exchanges, falling back to exact search on small graphs. On budget
/// exhaustion value holds the longest cycle reached.
SearchResult<Sequence> fk3_complete(const Graph& g, std::span<const Vertex> c,
                                    const SearchBudget& budget = {}, std::uint64_t seed = 0);

/// Maximum independent set by branch and bound with a clique-cover bound.
/// Exhausted budget throws std::runtime_error.
VertexSet max_independent_set_exact(const Graph& g, const SearchBudget& budget = {});

/// Greedy square path grown from both ends of the edge (a, b), choosing the
/// candidate with the fewest onward options.
Sequence greedy_square_path(const Graph& g, Vertex a, Vertex b, const VertexSet& allowed);

}  // namespace posa
