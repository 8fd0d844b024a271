#pragma once

#include <cstdint>

namespace netgame {

// splitmix64. Small and fast, and we control the exact sequence, so seeded
// runs reproduce bit-identically across platforms and thread counts.
struct SplitMix64 {
  std::uint64_t state = 0x9E3779B97F4A7C15ull;

  SplitMix64() = default;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n). Multiply-shift; bias is O(n / 2^64), irrelevant here.
  std::uint32_t uniform_below(std::uint32_t n) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }
};

// Finalizer used to derive independent streams from (seed, index) pairs.
inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xFF51AFD7ED558CCDull;
  x ^= x >> 33;
  x *= 0xC4CEB9FE1A85EC53ull;
  x ^= x >> 33;
  return x;
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed + 0x9E3779B97F4A7C15ull * (index + 1));
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return derive_seed(derive_seed(seed, a), b);
}

// Per-sample generator: draws within a sample are sequential, samples are
// independent of each other and of how samples are distributed over threads.
inline SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(derive_seed(seed, index));
}

// Order-independent uniform for item `item` of sample `index`. Used where the
// same underlying draw must be reusable regardless of traversal order (e.g.
// coupling percolation samples across different p values).
inline double indexed_uniform(std::uint64_t seed, std::uint64_t index, std::uint64_t item) {
  return static_cast<double>(derive_seed(seed, index, item) >> 11) * 0x1.0p-53;
}

}  // namespace netgame
