#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "posa/graph.hpp"

namespace posa {

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// C_n squared.
Graph square_cycle_graph(int n);
/// K_{3t+2} minus the edges among {0..t}.
Graph tight_graph(int t);
/// K_n minus the edges among {0..n/3-1}; n divisible by 3.
Graph planted_extreme_graph(int n);
/// Planted instance whose T side is two cliques A, C with no edges between
/// them: S = {0..k-1} carries a perfect matching (k >= 37, so S stays
/// 1/36-extreme) and each matched vertex misses one of two hub vertices k,
/// k+1 that see all of T. With `connected` a third hub, the last vertex,
/// sees all of S and T and joins the cliques.
Graph planted_case2_graph(int n, bool connected);
/// Planted-extreme graph with random edges removed inside T and, for
/// k > 36, sparse edges added inside S paid for by removed S-T edges. The
/// set {0..k-1} stays 1/36-extreme and the minimum degree stays 2k.
Graph perturbed_planted_graph(int n, std::uint64_t seed);
/// Vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);
/// Complete tripartite graph with parts of sizes differing by at most one.
Graph tripartite_graph(int n);
/// G(n, p) with p = delta/(n-1), then deficient vertices are repaired by
/// joining them to random non-neighbours until the minimum degree is delta.
Graph random_mindeg_graph(int n, int delta, std::uint64_t seed);

enum class Family { random_mindeg, tight, planted_extreme, square_cycle, complete, tripartite };

struct GeneratorSpec {
  Family family = Family::complete;
  int n = 0;      // order, or t for the tight family
  int delta = 0;  // random-mindeg only
  std::uint64_t seed = 0;
};

Family parse_family(const std::string& name);
std::string to_string(Family f);

/// Builds the graph and checks the family's declared properties, throwing
/// std::logic_error if a check fails.
Graph generate(const GeneratorSpec& spec);

}  // namespace posa
