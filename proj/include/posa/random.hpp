#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace posa {

/// Seeded generator with platform-independent bounded draws (the standard
/// distributions are implementation defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  long long between(long long lo, long long hi);
  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }
  template <class T>
  void shuffle(std::vector<T>& items) {
    shuffle(std::span<T>(items));
  }

  /// Uniform r-subset of [0, n), ascending.
  std::vector<int> subset(int n, int r);

 private:
  std::mt19937_64 engine_;
};

/// Independent stream seed for (seed, index), via splitmix64.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace posa
