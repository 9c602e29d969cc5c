#include "hitlab/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "hitlab/error.hpp"

namespace hitlab {

namespace {

// Welford accumulator; merged with Chan's pairwise update.
struct Moments {
  std::size_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double value) {
    ++count;
    const double delta = value - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (value - mean);
  }

  void merge(const Moments& other) {
    if (other.count == 0) return;
    if (count == 0) {
      *this = other;
      return;
    }
    const double total = static_cast<double>(count + other.count);
    const double delta = other.mean - mean;
    mean += delta * static_cast<double>(other.count) / total;
    m2 += other.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(other.count) / total;
    count += other.count;
  }
};

Moments run_chunk(const Graph& g, Vertex x, Vertex y, std::size_t walks, std::uint64_t seed) {
  Rng rng(seed);
  Moments moments;
  for (std::size_t w = 0; w < walks; ++w) {
    Vertex v = x;
    std::uint64_t steps = 0;
    while (v != y) {
      const auto next = g.neighbors(v);
      v = next[uniform_below(rng, next.size())];
      ++steps;
    }
    moments.add(static_cast<double>(steps));
  }
  return moments;
}

}  // namespace

MonteCarloResult hit_montecarlo(const Graph& g, Vertex x, Vertex y, const MonteCarloOptions& options) {
  require_connected(g);
  require_vertex(g, x);
  require_vertex(g, y);
  if (options.walks == 0) throw Error(ErrorCode::InvalidParams, "walks must be >= 1");
  if (options.chunks == 0) throw Error(ErrorCode::InvalidParams, "chunks must be >= 1");

  const std::size_t chunks = std::min(options.chunks, options.walks);
  std::vector<Moments> partial(chunks);
  auto walks_in = [&](std::size_t chunk) {
    return options.walks / chunks + (chunk < options.walks % chunks ? 1 : 0);
  };

  std::size_t threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, chunks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      partial[c] = run_chunk(g, x, y, walks_in(c), derive_seed(options.seed, c));
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  Moments total;
  for (const auto& m : partial) total.merge(m);
  MonteCarloResult result;
  result.mean = total.mean;
  result.walks = total.count;
  if (total.count > 1) {
    const double variance = total.m2 / static_cast<double>(total.count - 1);
    result.standard_error = std::sqrt(variance / static_cast<double>(total.count));
  }
  return result;
}

MonteCarloResult hit_montecarlo(const Graph& g, Vertex x, Vertex y, std::size_t walks, std::uint64_t seed) {
  MonteCarloOptions options;
  options.walks = walks;
  options.seed = seed;
  return hit_montecarlo(g, x, y, options);
}

}  // namespace hitlab
