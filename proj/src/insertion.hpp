#pragma once

#include <vector>

#include "posa/graph.hpp"
#include "posa/random.hpp"
#include "posa/square.hpp"

namespace posa::detail {

struct BlockScratch {
  explicit BlockScratch(int n) : masks(6, VertexSet(n)) {}
  std::vector<VertexSet> masks;
  long long nodes = 0;
};

/// Positions where x alone can be inserted into seq.
int single_spots(const Graph& g, const Sequence& seq, bool cyclic, Vertex x);

/// Looks for a block of r off-sequence vertices containing x that can be
/// inserted before seq[pos]. Returns pos (the block is written to `block`) or
/// -1. Positions are scanned starting at `offset`.
int find_block(const Graph& g, const Sequence& seq, bool cyclic, const VertexSet& off, Vertex x, int r,
               BlockScratch& scratch, std::vector<Vertex>& block, int offset);

/// Greedily extends both ends of a square path with vertices of avail,
/// removing the used ones from avail. Ties are broken by rng when given.
void extend_ends(const Graph& g, Sequence& path, VertexSet& avail, Rng* rng);

/// Cycle positions i such that x can replace cycle[i].
std::vector<int> replace_spots(const Graph& g, const Sequence& cycle, Vertex x);

/// Cycle positions whose vertex can be dropped keeping a square cycle.
std::vector<int> removable_positions(const Graph& g, const Sequence& cycle);

}  // namespace posa::detail
