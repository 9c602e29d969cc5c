#include "oracles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <functional>
#include <numeric>

namespace hitlab::testing {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

Eigen::MatrixXd pseudoinverse_laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    const auto a = static_cast<Eigen::Index>(u);
    const auto b = static_cast<Eigen::Index>(v);
    l(a, a) += 1;
    l(b, b) += 1;
    l(a, b) -= 1;
    l(b, a) -= 1;
  }
  return l.completeOrthogonalDecomposition().pseudoInverse();
}

}  // namespace

std::uint64_t brute_force_tau(std::size_t n, const std::vector<Edge>& edges) {
  if (n <= 1) return 1;
  const std::size_t need = n - 1;
  std::uint64_t count = 0;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> pick = [&](std::size_t start) {
    if (chosen.size() == need) {
      DisjointSets sets(n);
      for (std::size_t i : chosen) {
        if (!sets.unite(edges[i].first, edges[i].second)) return;
      }
      ++count;
      return;
    }
    for (std::size_t i = start; i + (need - chosen.size()) <= edges.size(); ++i) {
      chosen.push_back(i);
      pick(i + 1);
      chosen.pop_back();
    }
  };
  pick(0);
  return count;
}

std::uint64_t brute_force_tau(const Graph& g) { return brute_force_tau(g.vertex_count(), g.edges()); }

std::uint64_t brute_force_tau(const MultiGraph& mg) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < mg.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < mg.vertex_count(); ++v) {
      for (std::int64_t k = 0; k < mg.multiplicity(u, v); ++k) edges.emplace_back(u, v);
    }
  }
  return brute_force_tau(mg.vertex_count(), edges);
}

std::uint64_t brute_force_tau_identified(const Graph& g, const std::vector<Vertex>& merged) {
  std::vector<std::size_t> cls(g.vertex_count());
  std::size_t next = 1;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const bool in_set = std::find(merged.begin(), merged.end(), v) != merged.end();
    cls[v] = in_set ? 0 : next++;
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (cls[u] != cls[v]) edges.emplace_back(cls[u], cls[v]);
  }
  return brute_force_tau(next, edges);
}

BigInt cofactor_determinant(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt total = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    const BigInt term = BigInt(static_cast<long>(m[0][col])) * cofactor_determinant(minor);
    total += col % 2 == 0 ? term : BigInt(-term);
  }
  return total;
}

BigRational gauss_determinant(std::vector<std::vector<BigRational>> m) {
  const std::size_t n = m.size();
  BigRational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const BigRational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

std::size_t naive_path_count(const Graph& g, Vertex source, long target, const std::vector<Vertex>& avoid) {
  std::vector<Vertex> path{source};
  std::size_t count = 0;
  std::function<void()> walk = [&]() {
    const Vertex end = path.back();
    if (target < 0 || end == static_cast<Vertex>(target)) ++count;
    if (target >= 0 && end == static_cast<Vertex>(target)) return;
    for (Vertex u : g.neighbors(end)) {
      if (std::find(path.begin(), path.end(), u) != path.end()) continue;
      if (std::find(avoid.begin(), avoid.end(), u) != avoid.end()) continue;
      path.push_back(u);
      walk();
      path.pop_back();
    }
  };
  walk();
  return count;
}

BigRational first_step_hitting(const Graph& g, Vertex x, Vertex y) {
  if (x == y) return 0;
  // Unknowns h(v) for v != y:  d_v h(v) - sum_{u~v, u!=y} h(u) = d_v.
  std::vector<Vertex> index(g.vertex_count());
  std::vector<Vertex> order;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == y) continue;
    index[v] = order.size();
    order.push_back(v);
  }
  const std::size_t k = order.size();
  std::vector<std::vector<BigRational>> a(k, std::vector<BigRational>(k + 1, 0));
  for (std::size_t r = 0; r < k; ++r) {
    const Vertex v = order[r];
    a[r][r] = static_cast<long>(g.degree(v));
    a[r][k] = static_cast<long>(g.degree(v));
    for (Vertex u : g.neighbors(v)) {
      if (u != y) a[r][index[u]] -= 1;
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const BigRational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j <= k; ++j) a[r][j] -= f * a[c][j];
    }
  }
  const std::size_t r = index[x];
  return a[r][k] / a[r][r];
}

double pinv_resistance(const Graph& g, Vertex x, Vertex y) {
  const Eigen::MatrixXd p = pseudoinverse_laplacian(g);
  const auto a = static_cast<Eigen::Index>(x);
  const auto b = static_cast<Eigen::Index>(y);
  return p(a, a) + p(b, b) - 2 * p(a, b);
}

double pinv_hitting(const Graph& g, Vertex x, Vertex y) {
  const Eigen::MatrixXd p = pseudoinverse_laplacian(g);
  const auto a = static_cast<Eigen::Index>(x);
  const auto b = static_cast<Eigen::Index>(y);
  double total = 0;
  for (Vertex z = 0; z < g.vertex_count(); ++z) {
    const auto c = static_cast<Eigen::Index>(z);
    total += static_cast<double>(g.degree(z)) * (p(a, c) - p(a, b) - p(b, c) + p(b, b));
  }
  return total;
}

Graph permuted(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edge_list(edges, g.vertex_count());
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const std::size_t shift = a.vertex_count();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edge_list(edges, a.vertex_count() + b.vertex_count());
}

}  // namespace hitlab::testing
