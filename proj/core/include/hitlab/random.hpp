#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace hitlab {

// std::mt19937_64's output sequence is fixed by the C++ standard, so seeded
// runs reproduce across standard libraries. Bounded draws below avoid the
// implementation-defined std::uniform_int_distribution for the same reason.
using Rng = std::mt19937_64;
inline constexpr std::string_view kRngAlgorithm = "mt19937_64";

// Uniform integer in [0, bound) by rejection; bound > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % bound;
}

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// splitmix64 finalizer over (seed, stream); used to give each Monte Carlo
// worker an independent stream.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace hitlab
