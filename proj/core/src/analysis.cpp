#include "hitlab/analysis.hpp"

#include <algorithm>
#include <string>

#include "hitlab/error.hpp"

namespace hitlab {

bool BoundReport::all_satisfied() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.satisfied; });
}

const BoundCheck* BoundReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<Vertex> reach_avoiding(const Graph& g, Vertex x, Vertex y) {
  require_vertex(g, x);
  require_vertex(g, y);
  if (x == y) return {x};
  const Vertex blocked[] = {y};
  const auto seen = g.reachable_avoiding(x, blocked);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (seen[v]) out.push_back(v);
  }
  return out;
}

namespace {

BoundCheck make_check(std::string_view name, bool applicable, const BigRational& bound,
                      const BigRational& h) {
  BoundCheck c;
  c.name = std::string(name);
  c.applicable = applicable;
  if (applicable) {
    c.bound = bound;
    c.slack = bound - h;
    c.satisfied = c.slack >= 0;
  }
  return c;
}

}  // namespace

BoundReport verify_bounds(HittingEngine& engine, Vertex x, Vertex y) {
  const Graph& g = engine.graph();
  BoundReport report;
  report.x = x;
  report.y = y;
  report.hitting_time = engine.oracle(x, y);
  const BigRational& h = report.hitting_time;

  const auto n1 = static_cast<long>(g.vertex_count() - 1);
  report.checks.push_back(make_check(kBoundCubic, true, BigRational(n1 * n1 * n1), h));
  report.checks.push_back(
      make_check(kBoundMaxDegree, true, BigRational(static_cast<long>(g.max_degree()) * n1 * n1), h));

  const bool edge = x != y && g.adjacent(x, y);
  report.checks.push_back(make_check(
      kBoundEdge, edge, BigRational(static_cast<long>(g.volume()) - static_cast<long>(g.degree(y))), h));

  const bool universal = g.degree(y) + 1 == g.vertex_count();
  std::size_t reach_max = 0;
  if (universal) {
    for (Vertex u : reach_avoiding(g, x, y)) reach_max = std::max(reach_max, g.degree(u));
  }
  report.checks.push_back(
      make_check(kBoundReachDegree, universal, BigRational(static_cast<long>(reach_max)), h));
  return report;
}

BoundReport verify_bounds(const Graph& g, Vertex x, Vertex y) {
  HittingEngine engine(g);
  return verify_bounds(engine, x, y);
}

BigRational hit_cut_edge(const Graph& g, Vertex x, Vertex y) {
  require_vertex(g, x);
  require_vertex(g, y);
  if (x == y || !g.is_bridge(x, y)) {
    throw Error(ErrorCode::NotBridge,
                "(" + std::to_string(x) + "," + std::to_string(y) + ") is not a bridge");
  }
  auto kept = reach_avoiding(g, x, y);
  kept.push_back(y);
  return BigRational(2 * static_cast<long>(g.induced(kept).edge_count()) - 1);
}

ReversibilityReport reversibility_report(const Graph& g, std::size_t cap) {
  HittingEngine engine(g, cap);
  InvariantEngine& inv = engine.invariants();
  const std::size_t n = g.vertex_count();
  ReversibilityReport report;
  for (Vertex v = 0; v < n; ++v) report.z_without.push_back(inv.z_recursive(inv.all() & ~bit(v)));
  report.reversible = std::all_of(report.z_without.begin(), report.z_without.end(),
                                  [&](const BigInt& z) { return z == report.z_without.front(); });

  for (Vertex x = 0; x < n && !report.witness; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (engine.oracle(x, y) != engine.oracle(y, x)) {
        report.witness = std::make_pair(x, y);
        break;
      }
    }
  }
  report.pairwise_symmetric = !report.witness.has_value();

  std::optional<BigRational> first;
  report.resistance_criterion = true;
  for (Vertex v = 0; v < n; ++v) {
    BigRational total = 0;
    for (Vertex u = 0; u < n; ++u) total += engine.resistance(v, u) * static_cast<long>(g.degree(u));
    if (!first) {
      first = total;
    } else if (total != *first) {
      report.resistance_criterion = false;
    }
  }
  return report;
}

namespace detail {

BigInt hanging_path_formula(const Graph& g, std::span<const Vertex> path) {
  std::vector<Edge> path_edges;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) path_edges.emplace_back(path[i], path[i + 1]);
  const Graph rest = g.without_edges(path_edges);

  std::vector<std::size_t> piece_of(g.vertex_count(), 0);
  std::vector<std::size_t> piece_edges;
  for (const auto& comp : rest.components()) {
    std::size_t degree_sum = 0;
    for (Vertex v : comp) {
      piece_of[v] = piece_edges.size();
      degree_sum += rest.degree(v);
    }
    piece_edges.push_back(degree_sum / 2);
  }

  const auto length = static_cast<long>(path.size() - 1);
  BigInt total = length * length;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto to_end = static_cast<long>(path.size() - 1 - i);
    total += 2 * static_cast<long>(piece_edges[piece_of[path[i]]]) * to_end;
  }
  return total;
}

}  // namespace detail

BigInt hit_tree_closed(const Graph& g, Vertex a, Vertex b) {
  if (!g.is_connected() || g.edge_count() + 1 != g.vertex_count()) {
    throw Error(ErrorCode::NotATree, "graph is not a tree");
  }
  require_vertex(g, a);
  require_vertex(g, b);
  // Parent pointers toward b give the a-b path.
  const auto dist = g.distances_from(b);
  std::vector<Vertex> path{a};
  while (path.back() != b) {
    for (Vertex u : g.neighbors(path.back())) {
      if (dist[u] + 1 == dist[path.back()]) {
        path.push_back(u);
        break;
      }
    }
  }
  return detail::hanging_path_formula(g, path);
}

BigInt hit_lollipop_closed(std::int64_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidParams, "lollipop closed form needs N >= 2");
  const BigInt big(static_cast<long>(n));
  return big * big * big + big - 1;
}

}  // namespace hitlab
