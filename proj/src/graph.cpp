#include "posa/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace posa {

namespace {

int words_for(int universe) { return (universe + VertexSet::kWordBits - 1) / VertexSet::kWordBits; }

}  // namespace

VertexSet::VertexSet(int universe)
    : universe_(universe), words_(static_cast<std::size_t>(words_for(universe)), 0) {
  if (universe < 0) throw std::invalid_argument("negative universe");
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~Word{0};
  if (const int tail = universe % kWordBits; tail != 0) s.words_.back() = (Word{1} << tail) - 1;
  s.count_ = universe;
  return s;
}

VertexSet VertexSet::of(int universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<Vertex> members) {
  return of(universe, std::span<const Vertex>(members.begin(), members.size()));
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= universe_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  Word& w = words_[static_cast<std::size_t>(v) >> 6];
  const Word bit = Word{1} << (v & 63);
  if ((w & bit) == 0) {
    w |= bit;
    ++count_;
  }
}

void VertexSet::erase(Vertex v) {
  if (v < 0 || v >= universe_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  Word& w = words_[static_cast<std::size_t>(v) >> 6];
  const Word bit = Word{1} << (v & 63);
  if ((w & bit) != 0) {
    w &= ~bit;
    --count_;
  }
}

void VertexSet::clear() {
  std::fill(words_.begin(), words_.end(), 0);
  count_ = 0;
}

void VertexSet::recount() {
  int c = 0;
  for (Word w : words_) c += std::popcount(w);
  count_ = c;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  if (other.universe_ != universe_) throw std::invalid_argument("universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.universe_ != universe_) throw std::invalid_argument("universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  if (other.universe_ != universe_) throw std::invalid_argument("universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  recount();
  return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) -= *this; }

int VertexSet::intersection_size(const VertexSet& other) const {
  int c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
  return c;
}

bool VertexSet::intersects(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

Vertex VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return static_cast<Vertex>(i * kWordBits + std::countr_zero(words_[i]));
  return -1;
}

Vertex VertexSet::next(Vertex v) const {
  const int start = v + 1;
  if (start >= universe_) return -1;
  std::size_t i = static_cast<std::size_t>(start) >> 6;
  Word w = words_[i] & (~Word{0} << (start & 63));
  while (true) {
    if (w != 0) return static_cast<Vertex>(i * kWordBits + std::countr_zero(w));
    if (++i == words_.size()) return -1;
    w = words_[i];
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(count_));
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

GraphBuilder::GraphBuilder(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

void GraphBuilder::check(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop");
}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  check(u, v);
  if (rows_[u].contains(v)) return false;
  rows_[u].insert(v);
  rows_[v].insert(u);
  return true;
}

bool GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check(u, v);
  if (!rows_[u].contains(v)) return false;
  rows_[u].erase(v);
  rows_[v].erase(u);
  return true;
}

Graph GraphBuilder::build() const {
  Graph g;
  g.rows_ = rows_;
  g.degrees_.resize(rows_.size());
  long long twice = 0;
  for (std::size_t v = 0; v < rows_.size(); ++v) {
    g.degrees_[v] = rows_[v].size();
    twice += g.degrees_[v];
  }
  g.edges_ = twice / 2;
  return g;
}

GraphBuilder to_builder(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    g.neighbors(u).for_each([&](Vertex v) {
      if (u < v) b.add_edge(u, v);
    });
  return b;
}

GraphFormatError::GraphFormatError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

long long parse_count(std::istringstream& in, int line, const char* field) {
  std::string tok;
  if (!(in >> tok)) throw GraphFormatError(line, std::string("missing ") + field);
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw GraphFormatError(line, std::string("malformed ") + field + " '" + tok + "'");
  }
  if (used != tok.size()) throw GraphFormatError(line, std::string("malformed ") + field + " '" + tok + "'");
  return value;
}

}  // namespace

Graph load_graph(std::string_view text) {
  std::istringstream all{std::string(text)};
  std::string raw;
  int line = 0;
  bool have_header = false;
  long long declared_edges = 0;
  long long seen_edges = 0;
  std::vector<VertexSet> rows;
  int n = 0;
  while (std::getline(all, raw)) {
    ++line;
    std::istringstream in(raw);
    std::string kind;
    if (!(in >> kind)) continue;
    if (kind == "c") continue;
    if (kind == "p") {
      if (have_header) throw GraphFormatError(line, "duplicate header");
      std::string fmt;
      if (!(in >> fmt) || fmt != "sq") throw GraphFormatError(line, "expected 'p sq <n> <m>'");
      const long long nn = parse_count(in, line, "vertex count");
      declared_edges = parse_count(in, line, "edge count");
      if (nn < 0 || nn > 1'000'000) throw GraphFormatError(line, "vertex count out of range");
      if (declared_edges < 0) throw GraphFormatError(line, "negative edge count");
      n = static_cast<int>(nn);
      rows.assign(static_cast<std::size_t>(n), VertexSet(n));
      have_header = true;
    } else if (kind == "e") {
      if (!have_header) throw GraphFormatError(line, "edge before header");
      const long long u = parse_count(in, line, "endpoint");
      const long long v = parse_count(in, line, "endpoint");
      if (u < 1 || u > n || v < 1 || v > n)
        throw GraphFormatError(line, "vertex index out of range");
      if (u == v) throw GraphFormatError(line, "self-loop on vertex " + std::to_string(u));
      const auto a = static_cast<Vertex>(u - 1);
      const auto b = static_cast<Vertex>(v - 1);
      if (rows[a].contains(b))
        throw GraphFormatError(line, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      rows[a].insert(b);
      rows[b].insert(a);
      ++seen_edges;
    } else {
      throw GraphFormatError(line, "unknown line type '" + kind + "'");
    }
    std::string extra;
    if (in >> extra) throw GraphFormatError(line, "trailing token '" + extra + "'");
  }
  if (!have_header) throw GraphFormatError(line, "missing 'p sq' header");
  if (seen_edges != declared_edges)
    throw GraphFormatError(line, "header declares " + std::to_string(declared_edges) + " edges, found " +
                                     std::to_string(seen_edges));
  GraphBuilder builder(n);
  for (Vertex u = 0; u < n; ++u)
    rows[u].for_each([&](Vertex v) {
      if (u < v) builder.add_edge(u, v);
    });
  return builder.build();
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_graph(buf.str());
}

std::string format_graph(const Graph& g, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "c " << comment << '\n';
  out << "p sq " << g.order() << ' ' << g.edge_count() << '\n';
  for (Vertex u = 0; u < g.order(); ++u)
    g.neighbors(u).for_each([&](Vertex v) {
      if (u < v) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    });
  return out.str();
}

VertexSet common_neighborhood(const Graph& g, std::span<const Vertex> vs) {
  if (vs.empty()) throw std::invalid_argument("common_neighborhood of an empty list");
  for (Vertex v : vs)
    if (!g.in_range(v)) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  VertexSet out = g.neighbors(vs[0]);
  for (std::size_t i = 1; i < vs.size(); ++i) out &= g.neighbors(vs[i]);
  return out;
}

VertexSet common_neighborhood(const Graph& g, std::initializer_list<Vertex> vs) {
  return common_neighborhood(g, std::span<const Vertex>(vs.begin(), vs.size()));
}

long long edges_between(const Graph& g, const VertexSet& a, const VertexSet& b, EdgeMode mode) {
  if (a.universe() != g.order() || b.universe() != g.order())
    throw std::invalid_argument("vertex set universe does not match graph");
  long long ordered = 0;
  a.for_each([&](Vertex x) {
    const int adj = g.neighbors(x).intersection_size(b);
    if (mode == EdgeMode::graph) {
      ordered += adj;
    } else {
      ordered += b.size() - adj - (b.contains(x) ? 1 : 0);
    }
  });
  // Pairs with both ends in a ∩ b were seen from both sides.
  const VertexSet both = a & b;
  long long inside = 0;
  both.for_each([&](Vertex x) {
    const int adj = g.neighbors(x).intersection_size(both);
    inside += mode == EdgeMode::graph ? adj : both.size() - 1 - adj;
  });
  return ordered - inside / 2;
}

std::vector<Vertex> InducedSubgraph::lift(std::span<const Vertex> local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_host[v]);
  return out;
}

VertexSet InducedSubgraph::lift(const VertexSet& local, int host_order) const {
  VertexSet out(host_order);
  local.for_each([&](Vertex v) { out.insert(to_host[v]); });
  return out;
}

VertexSet InducedSubgraph::restrict(const VertexSet& host_set) const {
  VertexSet out(graph.order());
  host_set.for_each([&](Vertex v) {
    if (from_host[v] >= 0) out.insert(from_host[v]);
  });
  return out;
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.to_host = s.members();
  out.from_host.assign(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.to_host.size(); ++i) out.from_host[out.to_host[i]] = static_cast<Vertex>(i);
  const int k = static_cast<int>(out.to_host.size());
  GraphBuilder b(k);
  for (Vertex i = 0; i < k; ++i) {
    const VertexSet& row = g.neighbors(out.to_host[i]);
    for (Vertex j = i + 1; j < k; ++j)
      if (row.contains(out.to_host[j])) b.add_edge(i, j);
  }
  out.graph = b.build();
  return out;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("min_degree of the empty graph");
  return *std::min_element(g.degrees().begin(), g.degrees().end());
}

}  // namespace posa
