#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posa/graph.hpp"
#include "posa/rational.hpp"

namespace posa {

using Sequence = std::vector<Vertex>;

struct Verdict {
  bool accepted = false;
  bool hamiltonian = false;
  // First violating index pair in sequence positions, -1 when not applicable.
  int first = -1;
  int second = -1;
  std::string reason;

  explicit operator bool() const { return accepted; }
};

Verdict verify_square_path(const Graph& g, std::span<const Vertex> seq);

/// Throws std::invalid_argument when seq has fewer than 3 vertices.
Verdict verify_square_cycle(const Graph& g, std::span<const Vertex> seq);

/// Number of pairs (i, i+k) with seq[i] ~ seq[i+k]; k must be 3 or 4.
int count_chords(const Graph& g, std::span<const Vertex> path, int k);

struct BoundReport {
  std::string subject;
  Rational bound;
  long long observed = 0;
  bool satisfied = false;
};

/// Necessary conditions on an optimal square path with respect to an outside
/// vertex v: one report per segment, one for the whole path, and the edge
/// bound when partner and q are both given and |P| >= 2q+2.
std::vector<BoundReport> check_optimal_bounds(const Graph& g, std::span<const Vertex> path, Vertex v,
                                              std::optional<int> q = std::nullopt,
                                              std::optional<Vertex> partner = std::nullopt);

/// 1-based whitespace separated vertex list.
std::string format_sequence(std::span<const Vertex> seq);
Sequence parse_sequence(std::string_view text, int n);

/// Sequence reversed or rotated to start at position `start`.
Sequence rotated(std::span<const Vertex> seq, std::size_t start);
Sequence reversed(std::span<const Vertex> seq);

}  // namespace posa
