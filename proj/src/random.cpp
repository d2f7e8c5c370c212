#include "posa/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace posa {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

long long Rng::between(long long lo, long long hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::vector<int> Rng::subset(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("subset size out of range");
  // Floyd's algorithm: one draw per chosen element.
  std::vector<char> chosen(static_cast<std::size_t>(n), 0);
  for (int j = n - r; j < n; ++j) {
    const int t = static_cast<int>(below(static_cast<std::uint64_t>(j) + 1));
    chosen[chosen[t] ? j : t] = 1;
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(r));
  for (int v = 0; v < n; ++v)
    if (chosen[v]) out.push_back(v);
  return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace posa
