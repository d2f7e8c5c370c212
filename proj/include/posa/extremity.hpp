#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "posa/budget.hpp"
#include "posa/graph.hpp"
#include "posa/rational.hpp"

namespace posa {

struct ExtremeCertificate {
  VertexSet S;
  Rational alpha;
  int max_internal_degree = 0;
};

struct ExtremeCheck {
  bool extreme = false;
  Vertex witness = -1;  // first vertex with too many neighbours in S
  int max_internal_degree = 0;
  bool size_ok = false;

  explicit operator bool() const { return extreme; }
};

/// |S| >= (1-alpha)n/3 and every v in S has ||v,S|| < alpha n/3.
ExtremeCheck is_alpha_extreme(const Graph& g, const VertexSet& S, const Rational& alpha);

/// Smallest order of an alpha-extreme set, ceil((1-alpha)n/3), and the
/// largest internal degree such a set may have.
int extreme_min_size(int n, const Rational& alpha);
int extreme_max_internal_degree(int n, const Rational& alpha);

/// Drops members of largest internal degree (ties: larger index) until S has
/// extreme_min_size vertices. Removing vertices never raises an internal
/// degree, so an extreme set stays extreme.
VertexSet trim_extreme_set(const Graph& g, VertexSet S, const Rational& alpha);

struct AlphaExtremeSearch {
  std::optional<ExtremeCertificate> certificate;
  // True when a "none" answer is certified (exhaustive search completed).
  bool exact = false;
  std::string method;
};

/// Peeling heuristic followed by exhaustive branch and bound when the graph
/// is small (n <= exact_threshold) or the bounded search completes within
/// budget. Returned sets are trimmed to extreme_min_size by removing
/// vertices of largest internal degree, ties to the larger index.
AlphaExtremeSearch find_alpha_extreme(const Graph& g, const Rational& alpha, const SearchBudget& budget = {},
                                      int exact_threshold = 30);

struct AlphaBetaCheck {
  bool extreme = false;
  bool size_ok = false;
  VertexSet core;  // {v in S : ||v,S|| >= alpha n/3}

  explicit operator bool() const { return extreme; }
};

AlphaBetaCheck is_alpha_beta_extreme(const Graph& g, const VertexSet& S, const Rational& alpha,
                                     const Rational& beta);

struct SpecialSetDescriptor {
  Vertex u = 0, v = 0, w = 0, x = 0, y = 0;
  VertexSet realized;
};

/// (N(u,v,w) ∪ N(u,v,x)) ∩ N(y).
SpecialSetDescriptor special_set(const Graph& g, Vertex u, Vertex v, Vertex w, Vertex x, Vertex y);

struct ScanMode {
  enum class Kind { exhaustive, sampled };
  Kind kind = Kind::exhaustive;
  long long samples = 0;
  std::uint64_t seed = 0;

  static ScanMode exhaustive() { return {}; }
  static ScanMode sampled(long long k, std::uint64_t seed) { return {Kind::sampled, k, seed}; }
};

std::string to_string(const ScanMode& mode);

inline constexpr int kExhaustiveScanLimit = 60;

struct ScanStats {
  long long tuples = 0;
  long long visited = 0;  // distinct sets in exhaustive mode, tuples otherwise
};

/// Visits special sets with at least min_size vertices. Exhaustive mode
/// enumerates u <= v, w <= x (the definition is symmetric in both pairs) and
/// visits each distinct realized set once, with its first descriptor.
/// Exhaustive mode throws std::invalid_argument above kExhaustiveScanLimit.
ScanStats for_each_special_set(const Graph& g, const ScanMode& mode, int min_size,
                               const std::function<void(const SpecialSetDescriptor&)>& visit);

struct SpecialScanReport {
  ScanMode mode;
  ScanStats stats;
  std::vector<SpecialSetDescriptor> violations;
};

/// Special sets that are (alpha, beta)-extreme.
SpecialScanReport scan_special_sets(const Graph& g, const Rational& alpha, const Rational& beta,
                                    const ScanMode& mode);

}  // namespace posa
