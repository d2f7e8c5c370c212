#include "insertion.hpp"

#include <algorithm>

namespace posa::detail {

namespace {

struct Context {
  Vertex left2 = -1;
  Vertex left1 = -1;
  Vertex right1 = -1;
  Vertex right2 = -1;
};

Context context_at(const Sequence& seq, bool cyclic, int pos) {
  const int len = static_cast<int>(seq.size());
  Context c;
  if (cyclic) {
    c.left1 = seq[(pos - 1 + len) % len];
    c.left2 = seq[(pos - 2 + 2 * len) % len];
    c.right1 = seq[pos % len];
    c.right2 = seq[(pos + 1) % len];
  } else {
    if (pos - 1 >= 0) c.left1 = seq[pos - 1];
    if (pos - 2 >= 0) c.left2 = seq[pos - 2];
    if (pos < len) c.right1 = seq[pos];
    if (pos + 1 < len) c.right2 = seq[pos + 1];
  }
  return c;
}

bool adj_or_missing(const Graph& g, Vertex a, Vertex b) { return b < 0 || g.adjacent(a, b); }

class BlockBuilder {
 public:
  BlockBuilder(const Graph& g, const VertexSet& off, Vertex x, int r, int xpos, const Context& ctx,
               BlockScratch& scratch, std::vector<Vertex>& block)
      : g_(g), off_(off), x_(x), r_(r), xpos_(xpos), ctx_(ctx), scratch_(scratch), block_(block) {}

  bool run() {
    block_.assign(static_cast<std::size_t>(r_), -1);
    budget_ = 256;
    return dfs(0, ctx_.left2, ctx_.left1);
  }

 private:
  bool right_ok(int j, Vertex e) const {
    if (j == r_ - 1) return adj_or_missing(g_, e, ctx_.right1) && adj_or_missing(g_, e, ctx_.right2);
    if (j == r_ - 2) return adj_or_missing(g_, e, ctx_.right1);
    return true;
  }

  bool dfs(int j, Vertex prev2, Vertex prev1) {
    if (j == r_) return true;
    if (--budget_ < 0) return false;
    ++scratch_.nodes;
    if (j == xpos_) {
      if (!adj_or_missing(g_, x_, prev1) || !adj_or_missing(g_, x_, prev2) || !right_ok(j, x_)) return false;
      block_[j] = x_;
      return dfs(j + 1, prev1, x_);
    }
    VertexSet& mask = scratch_.masks[j];
    mask = off_;
    if (prev1 >= 0) mask &= g_.neighbors(prev1);
    if (prev2 >= 0) mask &= g_.neighbors(prev2);
    if (xpos_ > j && xpos_ - j <= 2) mask &= g_.neighbors(x_);
    if (j == r_ - 1) {
      if (ctx_.right1 >= 0) mask &= g_.neighbors(ctx_.right1);
      if (ctx_.right2 >= 0) mask &= g_.neighbors(ctx_.right2);
    } else if (j == r_ - 2 && ctx_.right1 >= 0) {
      mask &= g_.neighbors(ctx_.right1);
    }
    if (mask.contains(x_)) mask.erase(x_);
    for (int i = 0; i < j; ++i)
      if (mask.contains(block_[i])) mask.erase(block_[i]);
    for (Vertex e = mask.first(); e >= 0; e = mask.next(e)) {
      block_[j] = e;
      if (dfs(j + 1, prev1, e)) return true;
      if (budget_ < 0) return false;
    }
    return false;
  }

  const Graph& g_;
  const VertexSet& off_;
  Vertex x_;
  int r_;
  int xpos_;
  Context ctx_;
  BlockScratch& scratch_;
  std::vector<Vertex>& block_;
  int budget_ = 0;
};

}  // namespace

int single_spots(const Graph& g, const Sequence& seq, bool cyclic, Vertex x) {
  const int len = static_cast<int>(seq.size());
  const int positions = cyclic ? len : len + 1;
  int spots = 0;
  for (int pos = 0; pos < positions; ++pos) {
    const Context c = context_at(seq, cyclic, pos);
    if (adj_or_missing(g, x, c.left1) && adj_or_missing(g, x, c.left2) && adj_or_missing(g, x, c.right1) &&
        adj_or_missing(g, x, c.right2))
      ++spots;
  }
  return spots;
}

int find_block(const Graph& g, const Sequence& seq, bool cyclic, const VertexSet& off, Vertex x, int r,
               BlockScratch& scratch, std::vector<Vertex>& block, int offset) {
  const int len = static_cast<int>(seq.size());
  const int positions = cyclic ? len : len + 1;
  if (positions == 0 || r < 1 || r > static_cast<int>(scratch.masks.size())) return -1;
  for (int t = 0; t < positions; ++t) {
    const int pos = (t + offset) % positions;
    const Context c = context_at(seq, cyclic, pos);
    for (int xpos = 0; xpos < r; ++xpos) {
      if (xpos == 0 && !(adj_or_missing(g, x, c.left1) && adj_or_missing(g, x, c.left2))) continue;
      if (xpos == 1 && !adj_or_missing(g, x, c.left1)) continue;
      if (xpos == r - 1 && !(adj_or_missing(g, x, c.right1) && adj_or_missing(g, x, c.right2))) continue;
      if (xpos == r - 2 && !adj_or_missing(g, x, c.right1)) continue;
      if (BlockBuilder(g, off, x, r, xpos, c, scratch, block).run()) return pos;
    }
  }
  block.clear();
  return -1;
}

namespace {

void extend_back(const Graph& g, Sequence& path, VertexSet& avail, Rng* rng, VertexSet& cand) {
  constexpr int kLookahead = 32;
  while (!avail.empty()) {
    const int len = static_cast<int>(path.size());
    cand = g.neighbors(path[len - 1]);
    if (len >= 2) cand &= g.neighbors(path[len - 2]);
    cand &= avail;
    if (cand.empty()) return;
    std::vector<Vertex> options;
    options.reserve(kLookahead);
    Vertex start = cand.first();
    if (rng != nullptr && cand.size() > kLookahead) {
      const auto skip = rng->below(static_cast<std::uint64_t>(cand.size()));
      for (std::uint64_t i = 0; i < skip; ++i) start = cand.next(start);
    }
    for (Vertex v = start; v >= 0 && static_cast<int>(options.size()) < kLookahead; v = cand.next(v))
      options.push_back(v);
    for (Vertex v = cand.first(); v >= 0 && v != start && static_cast<int>(options.size()) < kLookahead;
         v = cand.next(v))
      options.push_back(v);
    if (rng != nullptr) rng->shuffle(options);
    // Fewest onward options first, but avoid dead ends while others remain.
    Vertex pick = -1;
    long long best = -1;
    for (Vertex v : options) {
      const int onward = (g.neighbors(v) & g.neighbors(path[len - 1]) & avail).size();
      const long long score = onward == 0 ? (1LL << 40) : onward;
      if (pick < 0 || score < best) {
        pick = v;
        best = score;
      }
    }
    path.push_back(pick);
    avail.erase(pick);
  }
}

}  // namespace

void extend_ends(const Graph& g, Sequence& path, VertexSet& avail, Rng* rng) {
  if (path.empty()) return;
  VertexSet cand(g.order());
  extend_back(g, path, avail, rng, cand);
  std::reverse(path.begin(), path.end());
  extend_back(g, path, avail, rng, cand);
  std::reverse(path.begin(), path.end());
}

std::vector<int> replace_spots(const Graph& g, const Sequence& cycle, Vertex x) {
  const int len = static_cast<int>(cycle.size());
  std::vector<int> out;
  if (len < 5) return out;
  for (int i = 0; i < len; ++i) {
    const auto at = [&](int d) { return cycle[(i + d + len) % len]; };
    if (g.adjacent(x, at(-2)) && g.adjacent(x, at(-1)) && g.adjacent(x, at(1)) && g.adjacent(x, at(2)))
      out.push_back(i);
  }
  return out;
}

std::vector<int> removable_positions(const Graph& g, const Sequence& cycle) {
  const int len = static_cast<int>(cycle.size());
  std::vector<int> out;
  if (len < 5) return out;
  for (int i = 0; i < len; ++i) {
    const auto at = [&](int d) { return cycle[(i + d + len) % len]; };
    if (g.adjacent(at(-2), at(1)) && g.adjacent(at(-1), at(2))) out.push_back(i);
  }
  return out;
}

}  // namespace posa::detail
