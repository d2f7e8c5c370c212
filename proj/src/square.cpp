#include "posa/square.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace posa {

namespace {

Verdict reject(int i, int j, std::string reason) {
  Verdict v;
  v.first = i;
  v.second = j;
  v.reason = std::move(reason);
  return v;
}

std::optional<Verdict> check_members(const Graph& g, std::span<const Vertex> seq) {
  std::vector<int> seen(static_cast<std::size_t>(std::max(g.order(), 0)), -1);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Vertex v = seq[i];
    if (!g.in_range(v)) return reject(static_cast<int>(i), -1, "vertex out of range");
    if (seen[v] >= 0) return reject(seen[v], static_cast<int>(i), "repeated vertex");
    seen[v] = static_cast<int>(i);
  }
  return std::nullopt;
}

}  // namespace

Verdict verify_square_path(const Graph& g, std::span<const Vertex> seq) {
  if (seq.empty()) return reject(-1, -1, "empty sequence");
  if (auto bad = check_members(g, seq)) return *bad;
  const int len = static_cast<int>(seq.size());
  for (int i = 0; i < len; ++i) {
    for (int d = 1; d <= 2 && i + d < len; ++d)
      if (!g.adjacent(seq[i], seq[i + d])) return reject(i, i + d, "missing edge");
  }
  Verdict v;
  v.accepted = true;
  v.hamiltonian = len == g.order();
  return v;
}

Verdict verify_square_cycle(const Graph& g, std::span<const Vertex> seq) {
  if (seq.size() < 3) throw std::invalid_argument("square cycle needs at least 3 vertices");
  if (auto bad = check_members(g, seq)) return *bad;
  const int len = static_cast<int>(seq.size());
  for (int i = 0; i < len; ++i) {
    for (int d = 1; d <= 2; ++d) {
      const int j = (i + d) % len;
      if (!g.adjacent(seq[i], seq[j])) return reject(i, j, "missing edge");
    }
  }
  Verdict v;
  v.accepted = true;
  v.hamiltonian = len == g.order();
  return v;
}

int count_chords(const Graph& g, std::span<const Vertex> path, int k) {
  if (k != 3 && k != 4) throw std::invalid_argument("chord length must be 3 or 4");
  if (!verify_square_path(g, path)) throw std::invalid_argument("not a square path");
  int count = 0;
  for (std::size_t i = 0; i + static_cast<std::size_t>(k) < path.size(); ++i)
    if (g.adjacent(path[i], path[i + k])) ++count;
  return count;
}

std::vector<BoundReport> check_optimal_bounds(const Graph& g, std::span<const Vertex> path, Vertex v,
                                              std::optional<int> q, std::optional<Vertex> partner) {
  if (!g.in_range(v)) throw std::out_of_range("vertex out of range");
  if (std::find(path.begin(), path.end(), v) != path.end())
    throw std::invalid_argument("vertex lies on the path");
  if (partner) {
    if (!g.in_range(*partner) || !g.adjacent(v, *partner))
      throw std::invalid_argument("partner is not adjacent to the vertex");
    if (std::find(path.begin(), path.end(), *partner) != path.end())
      throw std::invalid_argument("partner lies on the path");
  }
  const int len = static_cast<int>(path.size());
  std::vector<int> prefix(static_cast<std::size_t>(len) + 1, 0);
  for (int i = 0; i < len; ++i) prefix[i + 1] = prefix[i] + (g.adjacent(v, path[i]) ? 1 : 0);

  std::vector<BoundReport> out;
  out.reserve(static_cast<std::size_t>(len) * (len + 1) / 2 + 2);
  for (int i = 0; i < len; ++i) {
    for (int j = i; j < len; ++j) {
      const int size = j - i + 1;
      BoundReport r;
      r.subject = "segment " + std::to_string(i) + ".." + std::to_string(j);
      r.bound = Rational(2 * size, 3) + 1;
      r.observed = prefix[j + 1] - prefix[i];
      r.satisfied = Rational(r.observed) <= r.bound;
      out.push_back(std::move(r));
    }
  }
  BoundReport whole;
  whole.subject = "path";
  whole.bound = Rational(2 * len, 3) - Rational(1, 3);
  whole.observed = prefix[len];
  whole.satisfied = Rational(whole.observed) <= whole.bound;
  out.push_back(std::move(whole));

  if (partner && q && len >= 2 * *q + 2) {
    BoundReport edge;
    edge.subject = "edge";
    edge.bound = Rational(4 * len, 3) - Rational(2 * *q, 3) + 2;
    long long both = prefix[len];
    for (Vertex u : path) both += g.adjacent(*partner, u) ? 1 : 0;
    edge.observed = both;
    edge.satisfied = Rational(edge.observed) <= edge.bound;
    out.push_back(std::move(edge));
  }
  return out;
}

std::string format_sequence(std::span<const Vertex> seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(seq[i] + 1);
  }
  return out;
}

Sequence parse_sequence(std::string_view text, int n) {
  std::istringstream in{std::string(text)};
  Sequence out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed vertex '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("malformed vertex '" + tok + "'");
    if (v < 1 || v > n) throw std::out_of_range("vertex " + tok + " out of range");
    out.push_back(static_cast<Vertex>(v - 1));
  }
  return out;
}

Sequence rotated(std::span<const Vertex> seq, std::size_t start) {
  Sequence out(seq.begin(), seq.end());
  if (!out.empty()) std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(start % out.size()), out.end());
  return out;
}

Sequence reversed(std::span<const Vertex> seq) { return Sequence(seq.rbegin(), seq.rend()); }

}  // namespace posa
