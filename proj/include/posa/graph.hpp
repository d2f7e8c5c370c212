#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace posa {

using Vertex = int;

/// Subset of [0, universe) stored as a packed bitset. Cardinality is cached
/// and kept exact across every mutating operation.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(int universe);

  static VertexSet full(int universe);
  static VertexSet of(int universe, std::span<const Vertex> members);
  static VertexSet of(int universe, std::initializer_list<Vertex> members);

  int universe() const { return universe_; }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Vertex v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear();

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Complement within the universe.
  VertexSet complement() const;

  int intersection_size(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  /// Smallest member, or -1.
  Vertex first() const;
  /// Smallest member strictly greater than v, or -1.
  Vertex next(Vertex v) const;

  std::vector<Vertex> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Vertex>(w * kWordBits + b));
        bits &= bits - 1;
      }
    }
  }

  std::span<const Word> words() const { return words_; }

 private:
  void recount();

  int universe_ = 0;
  int count_ = 0;
  std::vector<Word> words_;
};

/// Immutable simple undirected graph with dense bit-matrix adjacency.
class Graph {
 public:
  Graph() = default;

  int order() const { return static_cast<int>(rows_.size()); }
  long long edge_count() const { return edges_; }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  int degree(Vertex v) const { return rows_[v].size(); }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  const std::vector<int>& degrees() const { return degrees_; }
  VertexSet all() const { return VertexSet::full(order()); }

  bool in_range(Vertex v) const { return v >= 0 && v < order(); }

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> rows_;
  std::vector<int> degrees_;
  long long edges_ = 0;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  int order() const { return static_cast<int>(rows_.size()); }
  /// Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  int degree(Vertex v) const { return rows_[v].size(); }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }

  Graph build() const;

 private:
  void check(Vertex u, Vertex v) const;
  std::vector<VertexSet> rows_;
};

/// Builds a graph from an existing one, for small edits.
GraphBuilder to_builder(const Graph& g);

class GraphFormatError : public std::runtime_error {
 public:
  GraphFormatError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses the "p sq <n> <m>" / "e <u> <v>" text format (1-based vertices).
Graph load_graph(std::string_view text);
/// Throws std::invalid_argument when the file cannot be opened.
Graph load_graph_file(const std::string& path);
std::string format_graph(const Graph& g, std::string_view comment = {});

/// N(v1) ∩ ... ∩ N(vk). Repeated vertices are allowed.
VertexSet common_neighborhood(const Graph& g, std::span<const Vertex> vs);
VertexSet common_neighborhood(const Graph& g, std::initializer_list<Vertex> vs);

enum class EdgeMode { graph, complement };

/// Number of unordered adjacent (or non-adjacent, in complement mode) pairs
/// {x, y}, x != y, with x in a and y in b. Pairs inside a ∩ b count once.
long long edges_between(const Graph& g, const VertexSet& a, const VertexSet& b,
                        EdgeMode mode = EdgeMode::graph);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;    // local -> host
  std::vector<Vertex> from_host;  // host -> local, -1 when absent

  Vertex host(Vertex local) const { return to_host[local]; }
  std::vector<Vertex> lift(std::span<const Vertex> local) const;
  VertexSet lift(const VertexSet& local, int host_order) const;
  VertexSet restrict(const VertexSet& host_set) const;
};

InducedSubgraph induced(const Graph& g, const VertexSet& s);

/// Throws std::invalid_argument on an empty graph.
int min_degree(const Graph& g);

}  // namespace posa
