#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "hitlab/graph.hpp"
#include "hitlab/random.hpp"

namespace hitlab {

struct MonteCarloOptions {
  std::size_t walks = 100000;
  std::uint64_t seed = 1;
  // Walks are split into this many chunks, chunk i seeded with
  // derive_seed(seed, i). Results depend on (walks, seed, chunks) only,
  // never on the thread count.
  std::size_t chunks = 8;
  // 0 = hardware concurrency, capped at chunks.
  std::size_t threads = 0;
};

struct MonteCarloResult {
  double mean = 0.0;
  // Sample standard deviation / sqrt(walks); 0 for a single walk.
  double standard_error = 0.0;
  std::size_t walks = 0;
  std::string_view rng = kRngAlgorithm;
};

// Simulates first-passage times from x to y. Throws Disconnected,
// InvalidParams (walks == 0 or chunks == 0).
MonteCarloResult hit_montecarlo(const Graph& g, Vertex x, Vertex y, const MonteCarloOptions& options);
MonteCarloResult hit_montecarlo(const Graph& g, Vertex x, Vertex y, std::size_t walks, std::uint64_t seed);

}  // namespace hitlab
