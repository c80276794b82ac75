#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace rmj {

/// Seeded random source with a fixed, portable algorithm: a std::mt19937_64
/// engine, 53-bit doubles, and rejection-sampled bounded integers. The
/// standard pins down mt19937_64 output exactly, and none of the
/// implementation-defined <random> distributions are used, so identical
/// seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound) without modulo bias.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Independent child stream; derived from the original seed and the
  /// stream index, so it does not depend on how much of this stream has
  /// been consumed.
  Rng derive(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

inline std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline Rng Rng::derive(std::uint64_t stream) const {
  return Rng(splitmix64(seed_ ^ splitmix64(stream + 1)));
}

/// Uniform random permutation of 0..n-1 (Fisher-Yates).
inline std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.uniform_below(i + 1));
    std::swap(order[i], order[j]);
  }
  return order;
}

}  // namespace rmj
