#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hitlab/graph.hpp"
#include "hitlab/invariants.hpp"
#include "hitlab/montecarlo.hpp"
#include "hitlab/paths.hpp"
#include "hitlab/rational.hpp"
#include "hitlab/spectral.hpp"

namespace hitlab {

enum class ExactMethod { Spanning, Rz, Tetali };
enum class FloatMethod { Spectral, Green };

// Every method a report can carry, in report order.
enum class HitMethod { Oracle, Spanning, Rz, Tetali, Spectral, Green, MonteCarlo };

std::string_view to_string(HitMethod method);
// Throws InvalidParams for unknown names.
HitMethod parse_hit_method(std::string_view name);
bool is_exact(HitMethod method);
bool is_float(HitMethod method);

// Float methods must land within this relative error of the exact value.
inline constexpr double kFloatRelTolerance = 1e-8;
// |f - e| / max(|e|, 1); plain relative error whenever e >= 1.
double relative_error(double value, const BigRational& exact);

// Hitting-time computations on one connected graph with shared caches
// (spanning-tree counts of contractions, invariant memo, eigenpairs,
// per-target oracle solutions). Not thread-safe.
class HittingEngine {
 public:
  // Throws Disconnected.
  explicit HittingEngine(Graph g, std::size_t cap = kDefaultEnumerationCap);
  ~HittingEngine();
  HittingEngine(HittingEngine&&) noexcept;
  HittingEngine& operator=(HittingEngine&&) noexcept;

  const Graph& graph() const noexcept { return graph_; }
  std::size_t cap() const noexcept { return cap_; }
  const BigInt& tau_graph() const noexcept { return tau_; }

  // First-step linear system h(y) = 0, h(v) = 1 + mean of h over neighbors.
  BigRational oracle(Vertex x, Vertex y);
  // H(v, y) for every v, from one solve.
  const std::vector<BigRational>& oracle_to(Vertex y);

  // (1/tau) sum_u d_u sum_{P in paths(x,u), y not in P} tau(G / (P + y)).
  BigRational spanning(Vertex x, Vertex y);
  // Z/R bracket over vol * tau with d_G weights.
  BigRational rz(Vertex x, Vertex y);
  // (1/2) sum_z d_z (R_xy + R_yz - R_xz).
  BigRational tetali(Vertex x, Vertex y);
  BigRational exact(Vertex x, Vertex y, ExactMethod method);

  // vol * sum_{k>=2} (1/lambda_k)(v_ky^2/d_y - v_kx v_ky/sqrt(d_x d_y)).
  double spectral(Vertex x, Vertex y);
  // vol * (G(y,y)/d_y - G(x,y)/sqrt(d_x d_y)) with the discrete Green
  // function G = sum_{k>=2} v_k v_k^T / lambda_k.
  double green(Vertex x, Vertex y);
  double floating(Vertex x, Vertex y, FloatMethod method);

  // tau(G / {x, y}) / tau(G); 0 on the diagonal.
  BigRational resistance(Vertex x, Vertex y);
  // vol * resistance.
  BigRational commute(Vertex x, Vertex y);

  // tau of G with the vertex set `merged` identified (masks need n <= 64).
  const BigInt& tau_contracted(VertexMask merged);
  const SpectralDecomposition& spectrum();
  const FloatMatrix& green_function();
  InvariantEngine& invariants();

 private:
  void check_pair(Vertex x, Vertex y) const;

  Graph graph_;
  std::size_t cap_;
  BigInt tau_;
  std::unordered_map<Vertex, std::vector<BigRational>> oracle_cache_;
  std::unordered_map<VertexMask, BigInt> contracted_tau_;
  std::map<std::pair<Vertex, Vertex>, BigRational> resistance_cache_;
  std::optional<SpectralDecomposition> spectrum_;
  std::optional<FloatMatrix> green_;
  std::unique_ptr<InvariantEngine> invariants_;
};

BigRational hit_oracle(const Graph& g, Vertex x, Vertex y);
// Throws Disconnected, SizeCapExceeded (spanning, rz).
BigRational hit_exact(const Graph& g, Vertex x, Vertex y, ExactMethod method,
                      std::size_t cap = kDefaultEnumerationCap);
// Throws Disconnected, NoConvergence.
double hit_float(const Graph& g, Vertex x, Vertex y, FloatMethod method);
BigRational resistance(const Graph& g, Vertex x, Vertex y);
BigRational commute(const Graph& g, Vertex x, Vertex y);

struct HitReport {
  Vertex x = 0;
  Vertex y = 0;
  std::map<HitMethod, BigRational> exact;
  std::map<HitMethod, double> floating;
  std::optional<MonteCarloResult> monte_carlo;

  // All exact values equal.
  bool exact_agree = true;
  // Against the first exact value; 0 when nothing to compare.
  double float_max_rel_err = 0.0;
  bool float_ok = true;
  // Exact value inside mean +- 4 stderr (true when not run).
  bool monte_carlo_ok = true;

  bool ok() const { return exact_agree && float_ok && monte_carlo_ok; }
};

struct ReportOptions {
  std::vector<HitMethod> methods{HitMethod::Oracle};
  MonteCarloOptions monte_carlo{};
};

HitReport make_hit_report(HittingEngine& engine, Vertex x, Vertex y, const ReportOptions& options);

}  // namespace hitlab
