#include "hitlab/hitting.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hitlab/error.hpp"
#include "hitlab/linalg.hpp"

namespace hitlab {

namespace {

struct MethodName {
  HitMethod method;
  std::string_view name;
};

constexpr MethodName kMethodNames[] = {
    {HitMethod::Oracle, "oracle"},     {HitMethod::Spanning, "spanning"}, {HitMethod::Rz, "rz"},
    {HitMethod::Tetali, "tetali"},     {HitMethod::Spectral, "spectral"}, {HitMethod::Green, "green"},
    {HitMethod::MonteCarlo, "mc"},
};

}  // namespace

std::string_view to_string(HitMethod method) {
  for (const auto& entry : kMethodNames) {
    if (entry.method == method) return entry.name;
  }
  return "unknown";
}

HitMethod parse_hit_method(std::string_view name) {
  for (const auto& entry : kMethodNames) {
    if (entry.name == name) return entry.method;
  }
  if (name == "montecarlo") return HitMethod::MonteCarlo;
  throw Error(ErrorCode::InvalidParams, "unknown method '" + std::string(name) + "'");
}

bool is_exact(HitMethod method) {
  return method == HitMethod::Oracle || method == HitMethod::Spanning || method == HitMethod::Rz ||
         method == HitMethod::Tetali;
}

bool is_float(HitMethod method) { return method == HitMethod::Spectral || method == HitMethod::Green; }

double relative_error(double value, const BigRational& exact) {
  const double e = to_double(exact);
  return std::abs(value - e) / std::max(std::abs(e), 1.0);
}

HittingEngine::HittingEngine(Graph g, std::size_t cap) : graph_(std::move(g)), cap_(cap) {
  require_connected(graph_);
  tau_ = tau(graph_);
}

HittingEngine::~HittingEngine() = default;
HittingEngine::HittingEngine(HittingEngine&&) noexcept = default;
HittingEngine& HittingEngine::operator=(HittingEngine&&) noexcept = default;

void HittingEngine::check_pair(Vertex x, Vertex y) const {
  require_vertex(graph_, x);
  require_vertex(graph_, y);
}

const std::vector<BigRational>& HittingEngine::oracle_to(Vertex y) {
  require_vertex(graph_, y);
  if (auto it = oracle_cache_.find(y); it != oracle_cache_.end()) return it->second;
  const std::size_t n = graph_.vertex_count();
  std::vector<std::size_t> index(n, 0);
  std::vector<Vertex> unknowns;
  for (Vertex v = 0; v < n; ++v) {
    if (v == y) continue;
    index[v] = unknowns.size();
    unknowns.push_back(v);
  }
  RationalMatrix a(unknowns.size(), unknowns.size());
  std::vector<BigRational> b(unknowns.size());
  for (std::size_t i = 0; i < unknowns.size(); ++i) {
    const Vertex v = unknowns[i];
    a(i, i) = static_cast<long>(graph_.degree(v));
    b[i] = static_cast<long>(graph_.degree(v));
    for (Vertex u : graph_.neighbors(v)) {
      if (u != y) a(i, index[u]) -= 1;
    }
  }
  const auto solution = solve_exact(a, b);
  std::vector<BigRational> h(n);
  for (std::size_t i = 0; i < unknowns.size(); ++i) h[unknowns[i]] = solution[i];
  return oracle_cache_.emplace(y, std::move(h)).first->second;
}

BigRational HittingEngine::oracle(Vertex x, Vertex y) {
  check_pair(x, y);
  return oracle_to(y)[x];
}

const BigInt& HittingEngine::tau_contracted(VertexMask merged) {
  if (auto it = contracted_tau_.find(merged); it != contracted_tau_.end()) return it->second;
  const auto members = vertices_of(merged);
  return contracted_tau_.emplace(merged, tau(contract(graph_, members))).first->second;
}

BigRational HittingEngine::spanning(Vertex x, Vertex y) {
  check_pair(x, y);
  require_within_cap(graph_, cap_);
  if (x == y) return 0;
  const VertexMask allowed = full_mask(graph_.vertex_count()) & ~bit(y);
  BigInt total = 0;
  visit_simple_paths(graph_, x, allowed, [&](std::span<const Vertex> path, VertexMask on_path) {
    total += tau_contracted(on_path | bit(y)) * static_cast<long>(graph_.degree(path.back()));
    return true;
  });
  return make_rational(total, tau_);
}

InvariantEngine& HittingEngine::invariants() {
  if (!invariants_) invariants_ = std::make_unique<InvariantEngine>(with_degree_weights(graph_), cap_);
  return *invariants_;
}

BigRational HittingEngine::rz(Vertex x, Vertex y) {
  check_pair(x, y);
  require_within_cap(graph_, cap_);
  if (x == y) return 0;
  InvariantEngine& inv = invariants();
  const VertexMask all = inv.all();

  BigInt bracket = inv.z_recursive(all & ~bit(y));
  visit_simple_paths(graph_, x, all, [&](std::span<const Vertex> path, VertexMask on_path) {
    if (path.back() != y) return true;
    bracket -= inv.z_recursive(all & ~on_path);
    return false;
  });
  // Vertex-disjoint pairs: P1 from x (so P1 avoids y), P2 from y avoiding P1.
  visit_simple_paths(graph_, x, all & ~bit(y), [&](std::span<const Vertex> first, VertexMask first_mask) {
    const auto du = static_cast<long>(graph_.degree(first.back()));
    visit_simple_paths(graph_, y, all & ~first_mask,
                       [&](std::span<const Vertex> second, VertexMask second_mask) {
                         bracket += inv.r(all & ~(first_mask | second_mask)) * du *
                                    static_cast<long>(graph_.degree(second.back()));
                         return true;
                       });
    return true;
  });
  return make_rational(bracket, tau_ * static_cast<long>(graph_.volume()));
}

BigRational HittingEngine::resistance(Vertex x, Vertex y) {
  check_pair(x, y);
  if (x == y) return 0;
  const auto key = std::minmax(x, y);
  if (auto it = resistance_cache_.find(key); it != resistance_cache_.end()) return it->second;
  const Vertex pair[] = {x, y};
  BigRational r = make_rational(tau(contract(graph_, pair)), tau_);
  resistance_cache_.emplace(key, r);
  return r;
}

BigRational HittingEngine::commute(Vertex x, Vertex y) {
  return resistance(x, y) * static_cast<long>(graph_.volume());
}

BigRational HittingEngine::tetali(Vertex x, Vertex y) {
  check_pair(x, y);
  const BigRational rxy = resistance(x, y);
  BigRational total = 0;
  for (Vertex z = 0; z < graph_.vertex_count(); ++z) {
    total += (rxy + resistance(y, z) - resistance(x, z)) * static_cast<long>(graph_.degree(z));
  }
  return total / 2;
}

BigRational HittingEngine::exact(Vertex x, Vertex y, ExactMethod method) {
  switch (method) {
    case ExactMethod::Spanning: return spanning(x, y);
    case ExactMethod::Rz: return rz(x, y);
    case ExactMethod::Tetali: return tetali(x, y);
  }
  throw Error(ErrorCode::InvalidParams, "unknown exact method");
}

const SpectralDecomposition& HittingEngine::spectrum() {
  if (!spectrum_) spectrum_ = eigh(normalized_laplacian(graph_));
  return *spectrum_;
}

const FloatMatrix& HittingEngine::green_function() {
  if (green_) return *green_;
  const auto& spec = spectrum();
  const std::size_t n = graph_.vertex_count();
  FloatMatrix g(n, n);
  for (std::size_t k = 1; k < n; ++k) {
    const auto& v = spec.eigenvectors[k];
    const double inv = 1.0 / spec.eigenvalues[k];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) g(i, j) += inv * v[i] * v[j];
    }
  }
  green_ = std::move(g);
  return *green_;
}

double HittingEngine::spectral(Vertex x, Vertex y) {
  check_pair(x, y);
  if (x == y) return 0.0;
  const auto& spec = spectrum();
  const auto dx = static_cast<double>(graph_.degree(x));
  const auto dy = static_cast<double>(graph_.degree(y));
  const double cross = std::sqrt(dx * dy);
  double sum = 0.0;
  for (std::size_t k = 1; k < spec.eigenvalues.size(); ++k) {
    const auto& v = spec.eigenvectors[k];
    sum += (v[y] * v[y] / dy - v[x] * v[y] / cross) / spec.eigenvalues[k];
  }
  return static_cast<double>(graph_.volume()) * sum;
}

double HittingEngine::green(Vertex x, Vertex y) {
  check_pair(x, y);
  if (x == y) return 0.0;
  const auto& g = green_function();
  const auto dx = static_cast<double>(graph_.degree(x));
  const auto dy = static_cast<double>(graph_.degree(y));
  return static_cast<double>(graph_.volume()) * (g(y, y) / dy - g(x, y) / std::sqrt(dx * dy));
}

double HittingEngine::floating(Vertex x, Vertex y, FloatMethod method) {
  return method == FloatMethod::Spectral ? spectral(x, y) : green(x, y);
}

BigRational hit_oracle(const Graph& g, Vertex x, Vertex y) { return HittingEngine(g).oracle(x, y); }

BigRational hit_exact(const Graph& g, Vertex x, Vertex y, ExactMethod method, std::size_t cap) {
  return HittingEngine(g, cap).exact(x, y, method);
}

double hit_float(const Graph& g, Vertex x, Vertex y, FloatMethod method) {
  return HittingEngine(g).floating(x, y, method);
}

BigRational resistance(const Graph& g, Vertex x, Vertex y) { return HittingEngine(g).resistance(x, y); }

BigRational commute(const Graph& g, Vertex x, Vertex y) { return HittingEngine(g).commute(x, y); }

HitReport make_hit_report(HittingEngine& engine, Vertex x, Vertex y, const ReportOptions& options) {
  HitReport report;
  report.x = x;
  report.y = y;
  for (HitMethod method : options.methods) {
    switch (method) {
      case HitMethod::Oracle: report.exact[method] = engine.oracle(x, y); break;
      case HitMethod::Spanning: report.exact[method] = engine.spanning(x, y); break;
      case HitMethod::Rz: report.exact[method] = engine.rz(x, y); break;
      case HitMethod::Tetali: report.exact[method] = engine.tetali(x, y); break;
      case HitMethod::Spectral: report.floating[method] = engine.spectral(x, y); break;
      case HitMethod::Green: report.floating[method] = engine.green(x, y); break;
      case HitMethod::MonteCarlo:
        report.monte_carlo = hit_montecarlo(engine.graph(), x, y, options.monte_carlo);
        break;
    }
  }
  const BigRational reference = report.exact.empty() ? engine.oracle(x, y) : report.exact.begin()->second;
  for (const auto& [method, value] : report.exact) {
    if (value != reference) report.exact_agree = false;
  }
  for (const auto& [method, value] : report.floating) {
    report.float_max_rel_err = std::max(report.float_max_rel_err, relative_error(value, reference));
  }
  report.float_ok = report.float_max_rel_err <= kFloatRelTolerance;
  if (report.monte_carlo) {
    const double gap = std::abs(report.monte_carlo->mean - to_double(reference));
    report.monte_carlo_ok = gap <= 4.0 * report.monte_carlo->standard_error + 1e-12;
  }
  return report;
}

}  // namespace hitlab
