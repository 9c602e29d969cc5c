#include "hitlab/unicycle.hpp"

#include <algorithm>
#include <string>

#include "hitlab/analysis.hpp"
#include "hitlab/error.hpp"

namespace hitlab {

UnicycleDescriptor describe_unicycle(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (!g.is_connected() || g.edge_count() != n) {
    throw Error(ErrorCode::NotUnicyclic, "need a connected graph with m = n");
  }

  // Peel leaves; what survives is the cycle.
  std::vector<std::size_t> degree(n);
  std::vector<bool> on_cycle(n, true);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const Vertex v = leaves.back();
    leaves.pop_back();
    on_cycle[v] = false;
    for (Vertex u : g.neighbors(v)) {
      if (on_cycle[u] && --degree[u] == 1) leaves.push_back(u);
    }
  }

  UnicycleDescriptor out;
  out.graph = g;
  const auto start = static_cast<Vertex>(std::find(on_cycle.begin(), on_cycle.end(), true) - on_cycle.begin());
  out.cycle.push_back(start);
  for (Vertex prev = start, cur = start;;) {
    Vertex next = cur;
    for (Vertex u : g.neighbors(cur)) {
      if (on_cycle[u] && u != prev) {
        next = u;
        break;
      }
    }
    if (next == start) break;
    out.cycle.push_back(next);
    prev = cur;
    cur = next;
  }

  out.root.assign(n, n);
  out.parent.assign(n, n);
  out.position.assign(n, 0);
  out.tree_edges.assign(out.cycle.size(), 0);
  for (std::size_t pos = 0; pos < out.cycle.size(); ++pos) {
    const Vertex c = out.cycle[pos];
    std::vector<Vertex> queue{c};
    out.root[c] = c;
    out.parent[c] = c;
    out.position[c] = pos;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex u : g.neighbors(queue[head])) {
        if (on_cycle[u] || out.root[u] != n) continue;
        out.root[u] = c;
        out.parent[u] = queue[head];
        out.position[u] = pos;
        queue.push_back(u);
      }
    }
    out.tree_edges[pos] = queue.size() - 1;
  }
  return out;
}

namespace {

// v, parent(v), ..., root(v).
std::vector<Vertex> path_to_root(const UnicycleDescriptor& u, Vertex v) {
  std::vector<Vertex> path{v};
  while (u.parent[path.back()] != path.back()) path.push_back(u.parent[path.back()]);
  return path;
}

std::vector<Vertex> tree_path(const UnicycleDescriptor& u, Vertex a, Vertex b) {
  auto up = path_to_root(u, a);
  auto down = path_to_root(u, b);
  // Trim the shared tail above the meeting point.
  while (up.size() >= 2 && down.size() >= 2 && up[up.size() - 2] == down[down.size() - 2]) {
    up.pop_back();
    down.pop_back();
  }
  down.pop_back();
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

}  // namespace

BigRational hit_unicycle_closed(const UnicycleDescriptor& u, Vertex a, Vertex b) {
  const Graph& g = u.graph;
  require_vertex(g, a);
  require_vertex(g, b);
  if (a == b) return 0;
  const Vertex i = u.root[a];
  const Vertex j = u.root[b];
  if (i == j) return BigRational(detail::hanging_path_formula(g, tree_path(u, a, b)));

  const auto l = static_cast<long>(u.length());
  const auto path_ai = path_to_root(u, a);
  auto path_jb = path_to_root(u, b);
  std::reverse(path_jb.begin(), path_jb.end());

  std::vector<Vertex> core = path_ai;
  core.insert(core.end(), path_jb.begin(), path_jb.end());
  core.insert(core.end(), u.cycle.begin(), u.cycle.end());
  std::sort(core.begin(), core.end());
  core.erase(std::unique(core.begin(), core.end()), core.end());
  std::vector<Edge> core_edges;
  for (Vertex v : core) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w && std::binary_search(core.begin(), core.end(), w)) core_edges.emplace_back(v, w);
    }
  }
  const Graph rest = g.without_edges(core_edges);
  std::vector<long> hanging(g.vertex_count(), 0);
  for (const auto& comp : rest.components()) {
    std::size_t degree_sum = 0;
    for (Vertex v : comp) degree_sum += rest.degree(v);
    for (Vertex v : comp) hanging[v] = static_cast<long>(degree_sum / 2);
  }

  const auto pi = static_cast<long>(u.position[i]);
  const auto pj = static_cast<long>(u.position[j]);
  const long gap = ((pj - pi) % l + l) % l;
  const long d_ij = std::min(gap, l - gap);
  const auto d_ai = static_cast<long>(path_ai.size() - 1);
  const auto d_jb = static_cast<long>(path_jb.size() - 1);
  const BigRational cycle_term = make_rational(d_ij * (l - d_ij), l);

  BigRational total = 0;
  for (std::size_t idx = 0; idx < path_ai.size(); ++idx) {
    const auto d_vi = static_cast<long>(path_ai.size() - 1 - idx);
    total += 2 * hanging[path_ai[idx]] * (d_vi + d_jb + cycle_term);
  }
  for (std::size_t idx = 0; idx < path_jb.size(); ++idx) {
    const auto d_vb = static_cast<long>(path_jb.size() - 1 - idx);
    total += 2 * hanging[path_jb[idx]] * d_vb;
  }
  for (std::size_t pos = 0; pos < u.length(); ++pos) {
    const Vertex k = u.cycle[pos];
    if (k == i || k == j) continue;
    const auto pk = static_cast<long>(pos);
    const long fwd_j = ((pj - pi) % l + l) % l;
    const long fwd_k = ((pk - pi) % l + l) % l;
    long m_ij = 0;
    long m_jk = 0;
    if (fwd_j < fwd_k) {
      m_ij = fwd_j;
      m_jk = fwd_k - fwd_j;
    } else {
      m_ij = ((pi - pj) % l + l) % l;
      m_jk = ((pj - pk) % l + l) % l;
    }
    total += 2 * hanging[k] * (d_jb + make_rational(m_ij * m_jk, l));
  }
  total += d_ai * d_ai + d_jb * d_jb + 2 * (l + d_ai) * d_jb;
  total += (l + 2 * d_ai) * cycle_term;
  return total;
}

BigRational hit_unicycle_closed(const UnicycleDescriptor& u, Vertex a, Vertex b, Vertex claimed_i,
                                Vertex claimed_j) {
  require_vertex(u.graph, a);
  require_vertex(u.graph, b);
  if (u.root[a] != claimed_i || u.root[b] != claimed_j) {
    throw Error(ErrorCode::VertexNotInClaimedTrees,
                "vertex " + std::to_string(a) + " or " + std::to_string(b) + " is not in the claimed tree");
  }
  return hit_unicycle_closed(u, a, b);
}

}  // namespace hitlab
