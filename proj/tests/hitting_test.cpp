#include <gtest/gtest.h>

#include <cmath>

#include "hitlab/error.hpp"
#include "hitlab/generators.hpp"
#include "hitlab/hitting.hpp"
#include "hitlab/montecarlo.hpp"
#include "support/oracles.hpp"

namespace hitlab {
namespace {

constexpr ExactMethod kExact[] = {ExactMethod::Spanning, ExactMethod::Rz, ExactMethod::Tetali};
constexpr FloatMethod kFloat[] = {FloatMethod::Spectral, FloatMethod::Green};

TEST(Oracle, SpecExamples) {
  EXPECT_EQ(hit_oracle(path_graph(2), 0, 1), 1);
  for (std::size_t n = 2; n <= 6; ++n) {
    EXPECT_EQ(hit_oracle(path_graph(n), 0, n - 1), static_cast<long>((n - 1) * (n - 1)));
  }
  EXPECT_EQ(hit_oracle(complete_graph(3), 0, 1), 2);
}

TEST(Oracle, MatchesTextbookElimination) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 2 + seed % 9;
    const Graph g = random_connected(n, seed);
    HittingEngine engine(g);
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) EXPECT_EQ(engine.oracle(x, y), testing::first_step_hitting(g, x, y));
    }
  }
}

TEST(Oracle, Errors) {
  const Graph split = from_edge_list(std::vector<Edge>{{0, 1}, {2, 3}}, 4);
  try {
    hit_oracle(split, 0, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Disconnected);
  }
  try {
    hit_oracle(path_graph(3), 0, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VertexOutOfRange);
  }
}

TEST(ExactMethods, SpecExamples) {
  EXPECT_EQ(hit_exact(path_graph(3), 0, 2, ExactMethod::Spanning), 4);
  EXPECT_EQ(hit_exact(complete_graph(3), 0, 1, ExactMethod::Tetali), 2);
  for (std::size_t big_n = 2; big_n <= 5; ++big_n) {
    const Graph g = lollipop_graph(big_n, big_n);
    const long expected = static_cast<long>(big_n * big_n * big_n + big_n - 1);
    EXPECT_EQ(hit_exact(g, 0, 2 * big_n - 1, ExactMethod::Spanning), expected);
  }
}

TEST(ExactMethods, AgreeWithOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 1 + seed % 8;
    const Graph g = random_connected(n, seed);
    HittingEngine engine(g);
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        const BigRational h = engine.oracle(x, y);
        for (ExactMethod m : kExact) EXPECT_EQ(engine.exact(x, y, m), h) << "seed " << seed;
      }
    }
  }
}

TEST(ExactMethods, SizeCap) {
  const Graph g = path_graph(15);
  EXPECT_THROW(hit_exact(g, 0, 14, ExactMethod::Spanning), Error);
  EXPECT_THROW(hit_exact(g, 0, 14, ExactMethod::Rz), Error);
  EXPECT_EQ(hit_exact(g, 0, 14, ExactMethod::Spanning, 15), 196);
  // Tetali needs no enumeration.
  EXPECT_EQ(hit_exact(g, 0, 14, ExactMethod::Tetali), 196);
}

TEST(FloatMethods, SpecExamples) {
  for (FloatMethod m : kFloat) {
    EXPECT_NEAR(hit_float(path_graph(2), 0, 1, m), 1.0, 1e-10);
    EXPECT_NEAR(hit_float(cycle_graph(5), 2, 2, m), 0.0, 1e-10);
  }
}

TEST(FloatMethods, WithinToleranceOfOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const Graph g = random_connected(n, seed);
    HittingEngine engine(g);
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        const BigRational h = engine.oracle(x, y);
        for (FloatMethod m : kFloat) EXPECT_LE(relative_error(engine.floating(x, y, m), h), 1e-8);
        EXPECT_LE(relative_error(testing::pinv_hitting(g, x, y), h), 1e-8);
      }
    }
  }
}

TEST(Resistance, SpecExamples) {
  EXPECT_EQ(resistance(path_graph(3), 0, 2), 2);
  EXPECT_EQ(resistance(complete_graph(3), 0, 1), make_rational(2, 3));
  EXPECT_EQ(resistance(complete_graph(3), 1, 1), 0);
  EXPECT_EQ(commute(path_graph(2), 0, 1), 2);
  EXPECT_EQ(commute(path_graph(3), 0, 2), 8);
}

TEST(Resistance, CommuteIdentityAndEdgeBound) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 2 + seed % 8;
    const Graph g = random_connected(n, seed);
    HittingEngine engine(g);
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        const BigRational k = engine.commute(x, y);
        EXPECT_EQ(engine.oracle(x, y) + engine.oracle(y, x), k);
        if (g.adjacent(x, y)) EXPECT_LE(k, static_cast<long>(g.volume()));
        for (Vertex z = 0; z < n; ++z) {
          EXPECT_LE(engine.resistance(x, z), engine.resistance(x, y) + engine.resistance(y, z));
        }
      }
    }
  }
}

TEST(HitReport, CollectsRequestedMethods) {
  HittingEngine engine(lollipop_graph(3, 3));
  ReportOptions options;
  options.methods = {HitMethod::Oracle, HitMethod::Spanning, HitMethod::Green, HitMethod::MonteCarlo};
  options.monte_carlo.walks = 20000;
  const HitReport r = make_hit_report(engine, 0, 5, options);
  EXPECT_EQ(r.exact.size(), 2u);
  EXPECT_EQ(r.floating.size(), 1u);
  ASSERT_TRUE(r.monte_carlo.has_value());
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.exact.at(HitMethod::Spanning), 29);
}

TEST(HitMethodNames, RoundTrip) {
  for (HitMethod m : {HitMethod::Oracle, HitMethod::Spanning, HitMethod::Rz, HitMethod::Tetali, HitMethod::Spectral,
                      HitMethod::Green, HitMethod::MonteCarlo}) {
    EXPECT_EQ(parse_hit_method(to_string(m)), m);
  }
  EXPECT_THROW(parse_hit_method("guess"), Error);
}

TEST(MonteCarlo, SpecExamples) {
  const MonteCarloResult k2 = hit_montecarlo(path_graph(2), 0, 1, 10000, 3);
  EXPECT_EQ(k2.mean, 1.0);
  EXPECT_EQ(k2.standard_error, 0.0);
  const MonteCarloResult p3 = hit_montecarlo(path_graph(3), 0, 2, 100000, 5);
  EXPECT_LE(std::abs(p3.mean - 4.0), 3 * p3.standard_error);
  const MonteCarloResult lolli = hit_montecarlo(lollipop_graph(3, 3), 0, 5, 100000, 7);
  EXPECT_LE(std::abs(lolli.mean - 29.0), 3 * lolli.standard_error);
  EXPECT_EQ(hit_montecarlo(path_graph(3), 1, 1, 10, 1).mean, 0.0);
}

TEST(MonteCarlo, ThreadCountDoesNotChangeResult) {
  MonteCarloOptions one;
  one.walks = 30000;
  one.seed = 99;
  one.threads = 1;
  MonteCarloOptions many = one;
  many.threads = 4;
  const Graph g = random_connected(8, 3);
  const MonteCarloResult a = hit_montecarlo(g, 0, 7, one);
  const MonteCarloResult b = hit_montecarlo(g, 0, 7, many);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.standard_error, b.standard_error);
}

TEST(MonteCarlo, Coverage) {
  int covered = 0;
  const int trials = 100;
  for (int trial = 0; trial < trials; ++trial) {
    const Graph g = random_connected(6, static_cast<std::uint64_t>(trial));
    const double exact = to_double(hit_oracle(g, 0, 5));
    const MonteCarloResult r = hit_montecarlo(g, 0, 5, 20000, static_cast<std::uint64_t>(1000 + trial));
    if (std::abs(r.mean - exact) <= 4 * r.standard_error) ++covered;
  }
  EXPECT_GE(covered, 99);
}

TEST(MonteCarlo, Errors) {
  EXPECT_THROW(hit_montecarlo(path_graph(3), 0, 2, 0, 1), Error);
  EXPECT_THROW(hit_montecarlo(from_edge_list(std::vector<Edge>{{0, 1}}, 3), 0, 2, 10, 1), Error);
}

}  // namespace
}  // namespace hitlab
