#pragma once

#include <algorithm>
#include <numeric>
#include <limits>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "posa/graph.hpp"
#include "posa/rational.hpp"

namespace testing_support {

inline bool naive_square(const posa::Graph& g, const std::vector<int>& s, bool cyclic) {
  const int len = static_cast<int>(s.size());
  for (int i = 0; i < len; ++i)
    for (int d = 1; d <= 2; ++d) {
      if (!cyclic && i + d >= len) continue;
      if (!g.adjacent(s[i], s[(i + d) % len])) return false;
    }
  return true;
}

// Permutation brute force, independent of the library searches.
inline bool naive_has_hsc(const posa::Graph& g) {
  std::vector<int> p(static_cast<std::size_t>(g.order()));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (naive_square(g, p, true)) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

inline int naive_mis(const posa::Graph& g) {
  const int n = g.order();
  int best = 0;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1U) && (mask >> v & 1U) && g.adjacent(u, v)) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

struct NaiveScore {
  int len = 0, c3 = 0, c4 = 0;
  bool operator<(const NaiveScore& o) const {
    return std::tie(len, c3, c4) < std::tie(o.len, o.c3, o.c4);
  }
  bool operator==(const NaiveScore& o) const = default;
};

inline NaiveScore naive_score(const posa::Graph& g, const std::vector<int>& s) {
  NaiveScore sc{static_cast<int>(s.size()), 0, 0};
  for (std::size_t i = 0; i + 3 < s.size(); ++i) sc.c3 += g.adjacent(s[i], s[i + 3]);
  for (std::size_t i = 0; i + 4 < s.size(); ++i) sc.c4 += g.adjacent(s[i], s[i + 4]);
  return sc;
}

// Best score over all square paths, by enumerating every subset ordering.
inline NaiveScore naive_optimal(const posa::Graph& g) {
  const int n = g.order();
  NaiveScore best;
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1U) s.push_back(v);
    if (static_cast<int>(s.size()) < best.len) continue;
    do {
      if (naive_square(g, s, false)) best = std::max(best, naive_score(g, s));
    } while (std::next_permutation(s.begin(), s.end()));
  }
  return best;
}

struct NaiveReservoir {
  bool weak = true, ii_a = true, ii_b = true, iii = true;
  double m_ii_a = std::numeric_limits<double>::infinity();
  double m_ii_b = std::numeric_limits<double>::infinity();
  double m_iii = std::numeric_limits<double>::infinity();
};

// Properties (i)-(iii) of a candidate reservoir, walking every one of the
// n^5 tuples (u, v, w, x, y) with plain adjacency lookups. n <= 32.
inline NaiveReservoir naive_reservoir(const posa::Graph& g, const std::vector<int>& reservoir, posa::Rational a1,
                                      posa::Rational b1, posa::Rational eps, posa::Rational rho,
                                      posa::Rational cap, posa::Rational gamma) {
  using posa::Rational;
  const int n = g.order();
  std::vector<char> in_r(static_cast<std::size_t>(n), 0);
  for (int v : reservoir) in_r[v] = 1;
  const Rational r(static_cast<long>(reservoir.size()));
  NaiveReservoir out;
  if (static_cast<std::int64_t>(reservoir.size()) != posa::ceil(rho * n)) out.weak = false;
  for (int u = 0; u < n; ++u) {
    int deg = 0, hit = 0;
    for (int v = 0; v < n; ++v) {
      deg += g.adjacent(u, v);
      hit += g.adjacent(u, v) && in_r[v];
    }
    const Rational share(deg, n);
    if (Rational(hit) < (share - eps) * r || Rational(hit) > (share + eps) * r) out.weak = false;
  }
  std::unordered_map<std::uint32_t, bool> seen;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            std::uint32_t mask = 0;
            for (int z = 0; z < n; ++z) {
              const bool uv = g.adjacent(z, u) && g.adjacent(z, v);
              if (uv && (g.adjacent(z, w) || g.adjacent(z, x)) && g.adjacent(z, y)) mask |= 1U << z;
            }
            if (!seen.emplace(mask, true).second) continue;
            int s = 0, sr = 0;
            for (int z = 0; z < n; ++z) {
              s += mask >> z & 1U;
              sr += (mask >> z & 1U) && in_r[z];
            }
            // Thresholds multiplied through by 3.
            if (Rational(3 * s) >= (1 - a1 + b1) * rho * n) {
              const double m = posa::to_double(cap * rho * s - sr);
              out.m_ii_a = std::min(out.m_ii_a, m);
              if (m < 0) out.ii_a = false;
            }
            if (Rational(3 * sr) >= (1 - a1 + b1) * rho * n) {
              const double m = posa::to_double((1 + gamma) * rho * s - sr);
              out.m_ii_b = std::min(out.m_ii_b, m);
              if (m < 0) out.ii_b = false;
            }
            if (Rational(3 * s) >= (1 - a1 - b1) * n) {
              int high = 0;
              for (int z = 0; z < n; ++z) {
                if (!(mask >> z & 1U) || !in_r[z]) continue;
                int d = 0;
                for (int t = 0; t < n; ++t) d += (mask >> t & 1U) && in_r[t] && g.adjacent(z, t);
                if (Rational(3 * d) >= a1 * rho * n) ++high;
              }
              int need = 0;
              while (Rational(3 * need) < b1 * rho * n) ++need;
              const double m = high - need;
              out.m_iii = std::min(out.m_iii, m);
              if (m < 0) out.iii = false;
            }
          }
  return out;
}

}  // namespace testing_support
