// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hitlab/analysis.hpp"
#include "hitlab/generators.hpp"
#include "hitlab/hitting.hpp"
#include "hitlab/invariants.hpp"
#include "hitlab/linalg.hpp"
#include "hitlab/montecarlo.hpp"
#include "hitlab/unicycle.hpp"

namespace {

using namespace hitlab;
using Clock = std::chrono::steady_clock;

constexpr double kFloatTolerance = 1e-8;
constexpr double kMonteCarloSigmas = 4.0;
constexpr std::size_t kMonteCarloWalks = 100000;
constexpr double kLollipopBudgetSeconds = 30.0;
constexpr double kSweepBudgetSeconds = 600.0;
constexpr std::size_t kSweepMaxVertices = 8;
constexpr std::size_t kRandomSweepGraphs = 200;

struct Named {
  std::string name;
  Graph graph;
};

// Families with at most 8 vertices plus 200 seeded random connected graphs.
std::vector<Named> sweep_graphs() {
  std::vector<Named> out;
  for (std::size_t n = 1; n <= kSweepMaxVertices; ++n) {
    out.push_back({"path:" + std::to_string(n), path_graph(n)});
    out.push_back({"complete:" + std::to_string(n), complete_graph(n)});
    out.push_back({"star:" + std::to_string(n), star_graph(n)});
    if (n >= 3) out.push_back({"cycle:" + std::to_string(n), cycle_graph(n)});
  }
  for (std::size_t m = 2; m <= kSweepMaxVertices; ++m) {
    for (std::size_t n = 1; m + n <= kSweepMaxVertices; ++n) {
      out.push_back({"lollipop:" + std::to_string(m) + "," + std::to_string(n), lollipop_graph(m, n)});
    }
  }
  for (std::uint64_t seed = 0; seed < kRandomSweepGraphs; ++seed) {
    const std::size_t n = 2 + seed % (kSweepMaxVertices - 1);
    out.push_back({"random:n=" + std::to_string(n) + ",seed=" + std::to_string(seed), random_connected(n, seed)});
  }
  return out;
}

struct Verdict {
  bool passed = true;
  std::string detail;
  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

std::string pair_at(const std::string& graph, Vertex x, Vertex y) {
  return graph + " (" + std::to_string(x) + "," + std::to_string(y) + ")";
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Verdict lollipop_identity() {
  Verdict v;
  const auto start = Clock::now();
  const long expected[] = {9, 29, 67, 129};
  for (std::size_t big_n = 2; big_n <= 5; ++big_n) {
    const Graph g = lollipop_graph(big_n, big_n);
    const Vertex y = 2 * big_n - 1;
    const BigRational want = expected[big_n - 2];
    if (BigRational(hit_lollipop_closed(static_cast<std::int64_t>(big_n))) != want) v.fail("closed form N=" + std::to_string(big_n));
    if (hit_oracle(g, 0, y) != want) v.fail("oracle N=" + std::to_string(big_n));
    if (hit_exact(g, 0, y, ExactMethod::Spanning) != want) v.fail("spanning N=" + std::to_string(big_n));
  }
  const double elapsed = seconds_since(start);
  if (elapsed > kLollipopBudgetSeconds) v.fail("took " + std::to_string(elapsed) + " s");
  if (v.passed) v.detail = "9, 29, 67, 129 by oracle and spanning in " + std::to_string(elapsed) + " s";
  return v;
}

struct SweepVerdicts {
  Verdict exact;
  Verdict floating;
  Verdict commute;
  Verdict reversibility;
  double max_rel_err = 0.0;
  std::size_t pairs = 0;
  std::size_t reversibility_graphs = 0;
};

SweepVerdicts run_sweep() {
  SweepVerdicts s;
  const auto start = Clock::now();
  for (const auto& [name, g] : sweep_graphs()) {
    HittingEngine engine(g);
    const std::size_t n = g.vertex_count();
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        ++s.pairs;
        const BigRational h = engine.oracle(x, y);
        for (ExactMethod m : {ExactMethod::Spanning, ExactMethod::Rz, ExactMethod::Tetali}) {
          if (engine.exact(x, y, m) != h) s.exact.fail(pair_at(name, x, y));
        }
        for (FloatMethod m : {FloatMethod::Spectral, FloatMethod::Green}) {
          const double err = relative_error(engine.floating(x, y, m), h);
          s.max_rel_err = std::max(s.max_rel_err, err);
          if (!(err <= kFloatTolerance)) s.floating.fail(pair_at(name, x, y));
        }
        const BigRational kappa = engine.commute(x, y);
        if (h + engine.oracle(y, x) != kappa) s.commute.fail("identity at " + pair_at(name, x, y));
        if (x != y && g.adjacent(x, y) && kappa > static_cast<long>(g.volume())) {
          s.commute.fail("edge bound at " + pair_at(name, x, y));
        }
      }
    }
    if (n <= 7) {
      ++s.reversibility_graphs;
      if (!reversibility_report(g).consistent()) s.reversibility.fail(name);
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed > kSweepBudgetSeconds) s.exact.fail("sweep took " + std::to_string(elapsed) + " s");
  if (s.exact.passed) {
    s.exact.detail = std::to_string(s.pairs) + " ordered pairs, 4 methods identical, " + std::to_string(elapsed) + " s";
  }
  if (s.floating.passed) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "max relative error %.3g", s.max_rel_err);
    s.floating.detail = buffer;
  }
  if (s.commute.passed) s.commute.detail = std::to_string(s.pairs) + " ordered pairs";
  return s;
}

Verdict invariant_identities() {
  Verdict v;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 6;
    const Graph g = random_connected(n, 5000 + seed);
    const std::string name = "random:n=" + std::to_string(n) + ",seed=" + std::to_string(5000 + seed);
    const WeightedGraph wg = with_degree_weights(g);
    const BigInt vol = static_cast<long>(g.volume());
    const BigInt z = vol * vol * tau(g);
    if (r_invariant(wg, RMethod::Recursive) != 0 || r_invariant(wg, RMethod::Completion) != 0) v.fail("R at " + name);
    if (z_invariant(wg, ZMethod::Recursive) != z || z_invariant(wg, ZMethod::Pathsum) != z) v.fail("Z at " + name);
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        if (x != y && !check_tree_count_identity(g, x, y).holds()) v.fail("tree count at " + pair_at(name, x, y));
      }
    }
  }
  if (v.passed) v.detail = "100 graphs, n <= 7";
  return v;
}

Verdict closed_forms() {
  Verdict v;
  for (std::int64_t n = 1; n <= 8; ++n) {
    const auto size = static_cast<std::size_t>(n);
    const BigInt r = r_invariant(make_weighted(path_graph(size), std::vector<Weight>(size, 2)), RMethod::Recursive);
    if (r != n + 1 || r_closed_path(n) != r) v.fail("path n=" + std::to_string(n));
  }
  for (std::int64_t n = 1; n <= 5; ++n) {
    for (std::int64_t m = n - 1; m <= n + 3; ++m) {
      const auto size = static_cast<std::size_t>(n);
      const BigInt r = r_invariant(make_weighted(complete_graph(size), std::vector<Weight>(size, m)), RMethod::Recursive);
      BigInt power;
      mpz_pow_ui(power.get_mpz_t(), BigInt(static_cast<long>(m + 1)).get_mpz_t(), static_cast<unsigned long>(n - 1));
      const BigInt expected = BigInt(static_cast<long>(m - n + 1)) * power;
      if (r != expected || r_closed_complete(n, m) != r) {
        v.fail("complete n=" + std::to_string(n) + " m=" + std::to_string(m));
      }
    }
  }
  for (std::int64_t m = 2; m <= 4; ++m) {
    for (std::int64_t n = 1; n <= 3; ++n) {
      for (std::int64_t k = 0; k <= 2; ++k) {
        const auto mm = static_cast<std::size_t>(m);
        const auto nn = static_cast<std::size_t>(n);
        const WeightedGraph wg = make_weighted(lollipop_graph(mm, nn), lollipop_weights(mm, nn, k));
        if (r_closed_lollipop(m, n, k) != r_invariant(wg, RMethod::Recursive)) {
          v.fail("lollipop m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
      }
    }
  }
  if (v.passed) v.detail = "path n<=8, complete n<=5 m<=n+3, lollipop m<=4 n<=3 k<=2";
  return v;
}

Verdict bounds() {
  Verdict v;
  std::size_t pairs = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const std::size_t n = 2 + seed % 9;
    const Graph g = random_connected(n, 10000 + seed);
    HittingEngine engine(g);
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        ++pairs;
        for (const auto& c : verify_bounds(engine, x, y).checks) {
          if (c.applicable && c.slack < 0) {
            v.fail(c.name + " at random:n=" + std::to_string(n) + ",seed=" + std::to_string(10000 + seed));
          }
        }
      }
    }
  }
  for (std::size_t n = 3; n <= 8; ++n) {
    const BoundCheck* edge = verify_bounds(path_graph(n), n - 2, n - 1).find(kBoundEdge);
    if (edge == nullptr || !edge->applicable || edge->slack != 0) v.fail("edge bound not sharp on P_" + std::to_string(n));
  }
  if (v.passed) v.detail = std::to_string(pairs) + " ordered pairs; edge bound sharp on P_3..P_8";
  return v;
}

Verdict cut_edges() {
  Verdict v;
  std::size_t bridges = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = random_connected(3 + seed % 10, 20000 + seed, 0.15);
    HittingEngine engine(g);
    for (const auto& [a, b] : g.edges()) {
      if (!g.is_bridge(a, b)) continue;
      ++bridges;
      if (hit_cut_edge(g, a, b) != engine.oracle(a, b) || hit_cut_edge(g, b, a) != engine.oracle(b, a)) {
        v.fail("seed " + std::to_string(20000 + seed));
      }
    }
  }
  if (bridges == 0) v.fail("no bridges generated");
  if (v.passed) v.detail = std::to_string(bridges) + " bridges, both orientations";
  return v;
}

Verdict reversibility(const SweepVerdicts& sweep) {
  Verdict v = sweep.reversibility;
  for (std::size_t n = 3; n <= 7; ++n) {
    if (!reversibility_report(cycle_graph(n)).reversible) v.fail("C_" + std::to_string(n) + " not reversible");
    if (!reversibility_report(complete_graph(n)).reversible) v.fail("K_" + std::to_string(n) + " not reversible");
  }
  if (reversibility_report(path_graph(3)).reversible) v.fail("P_3 reported reversible");
  if (v.passed) v.detail = std::to_string(sweep.reversibility_graphs) + " sweep graphs; C_n, K_n reversible; P_3 not";
  return v;
}

Verdict tree_and_unicycle() {
  Verdict v;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 12;
    const Graph t = random_tree(n, 30000 + seed);
    HittingEngine engine(t);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        if (BigRational(hit_tree_closed(t, a, b)) != engine.oracle(a, b)) v.fail("tree seed " + std::to_string(30000 + seed));
      }
    }
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 3 + seed % 10;
    const Graph g = random_unicyclic(n, 40000 + seed);
    const UnicycleDescriptor u = describe_unicycle(g);
    HittingEngine engine(g);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        if (hit_unicycle_closed(u, a, b) != engine.oracle(a, b)) v.fail("unicycle seed " + std::to_string(40000 + seed));
      }
    }
  }
  if (v.passed) v.detail = "200 trees, 200 unicyclic graphs, n <= 12";
  return v;
}

std::string cli_report(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"hitlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str() + err.str();
}

Verdict monte_carlo() {
  Verdict v;
  for (std::uint64_t c = 0; c < 20; ++c) {
    const std::size_t n = 3 + c % 6;
    const Graph g = c % 4 == 0 ? lollipop_graph(2 + c % 3, 2) : random_connected(n, 50000 + c);
    const Vertex x = 0;
    const Vertex y = g.vertex_count() - 1;
    const double exact = to_double(hit_oracle(g, x, y));
    const MonteCarloResult r = hit_montecarlo(g, x, y, kMonteCarloWalks, 60000 + c);
    if (std::abs(r.mean - exact) > kMonteCarloSigmas * r.standard_error) v.fail("case " + std::to_string(c));
  }
  const std::vector<std::string> args{"mc", "--family", "lollipop:4,3", "--x", "0", "--y", "6", "--walks",
                                      std::to_string(kMonteCarloWalks), "--seed", "2024"};
  if (cli_report(args) != cli_report(args)) v.fail("reports differ for a fixed seed");
  if (v.passed) v.detail = "20 cases within 4 stderr at 1e5 walks; fixed-seed report byte-identical";
  return v;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const std::string& title, const Verdict& v) {
    std::printf("[%s] %2d %s: %s\n", v.passed ? "PASS" : "FAIL", id, title.c_str(), v.detail.c_str());
    std::fflush(stdout);
    if (!v.passed) ++failures;
  };
  auto guarded = [](const std::function<Verdict()>& f) {
    try {
      return f();
    } catch (const std::exception& e) {
      Verdict v;
      v.fail(std::string("exception: ") + e.what());
      return v;
    }
  };

  report(1, "lollipop identity", guarded(lollipop_identity));
  SweepVerdicts sweep;
  try {
    sweep = run_sweep();
  } catch (const std::exception& e) {
    sweep.exact.fail(e.what());
    sweep.floating.fail(e.what());
    sweep.commute.fail(e.what());
    sweep.reversibility.fail(e.what());
  }
  report(2, "exact cross-method agreement", sweep.exact);
  report(3, "float agreement", sweep.floating);
  report(4, "invariant identities", guarded(invariant_identities));
  report(5, "closed forms", guarded(closed_forms));
  report(6, "bounds", guarded(bounds));
  report(7, "cut-edge identity", guarded(cut_edges));
  report(8, "reversibility", guarded([&] { return reversibility(sweep); }));
  report(9, "tree and unicycle closed forms", guarded(tree_and_unicycle));
  report(10, "commute/resistance identities", sweep.commute);
  report(11, "monte carlo sanity", guarded(monte_carlo));
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
