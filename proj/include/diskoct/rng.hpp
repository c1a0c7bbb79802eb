#pragma once

#include <cstdint>
#include <random>

namespace diskoct {

// mt19937_64 output is fixed by the standard; the helpers below avoid the
// library-specific std::uniform_int_distribution so seeded runs reproduce
// across toolchains.
using Rng = std::mt19937_64;

/// splitmix64 finalizer applied over a seed and up to two stream tags.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0) {
  std::uint64_t z = seed;
  for (std::uint64_t tag : {a, b}) {
    z += 0x9e3779b97f4a7c15ULL + tag * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
  }
  return z;
}

/// Uniform integer in [0, bound), bound > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

/// Uniform integer in [lo, hi].
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  return lo + static_cast<std::int64_t>(uniform_below(rng, span));
}

}  // namespace diskoct
