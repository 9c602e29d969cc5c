#include "hitlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <string>

#include "hitlab/error.hpp"

namespace hitlab {

VertexMask mask_of(std::span<const Vertex> vertices) {
  VertexMask mask = 0;
  for (Vertex v : vertices) mask |= bit(v);
  return mask;
}

std::vector<Vertex> vertices_of(VertexMask mask) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

Graph::Graph(std::vector<std::vector<Vertex>> adjacency) : adjacency_(std::move(adjacency)) {
  std::size_t half_edges = 0;
  for (auto& row : adjacency_) {
    std::sort(row.begin(), row.end());
    half_edges += row.size();
  }
  edge_count_ = half_edges / 2;
  if (adjacency_.size() <= kMaxMaskVertices) {
    neighbor_masks_.resize(adjacency_.size(), 0);
    for (Vertex v = 0; v < adjacency_.size(); ++v) neighbor_masks_[v] = mask_of(adjacency_[v]);
  }
}

Graph Graph::from_edge_list(std::span<const Edge> edges, std::size_t n) {
  std::vector<std::vector<Vertex>> adjacency(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" +
                      std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& row = adjacency[v];
    std::sort(row.begin(), row.end());
    auto dup = std::adjacent_find(row.begin(), row.end());
    if (dup != row.end()) {
      throw Error(ErrorCode::DuplicateEdge,
                  "edge (" + std::to_string(std::min(v, *dup)) + "," +
                      std::to_string(std::max(v, *dup)) + ") listed twice");
    }
  }
  return Graph(std::move(adjacency));
}

Graph from_edge_list(std::span<const Edge> edges, std::size_t n) {
  return Graph::from_edge_list(edges, n);
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& row : adjacency_) best = std::max(best, row.size());
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& row = adjacency_.at(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  const std::size_t n = vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex u : adjacency_[comp[head]]) {
        if (!seen[u]) {
          seen[u] = true;
          comp.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const {
  return vertex_count() > 0 && components().size() == 1;
}

std::vector<std::size_t> Graph::distances_from(Vertex source) const {
  require_vertex(*this, source);
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(vertex_count(), kUnreached);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex u : adjacency_[v]) {
      if (dist[u] == kUnreached) {
        dist[u] = dist[v] + 1;
        frontier.push(u);
      }
    }
  }
  return dist;
}

std::vector<bool> Graph::reachable_avoiding(Vertex source, std::span<const Vertex> blocked) const {
  require_vertex(*this, source);
  std::vector<bool> is_blocked(vertex_count(), false);
  for (Vertex b : blocked) is_blocked.at(b) = true;
  std::vector<bool> seen(vertex_count(), false);
  if (is_blocked[source]) return seen;
  std::vector<Vertex> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : adjacency_[v]) {
      if (!seen[u] && !is_blocked[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
    }
  }
  return seen;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  constexpr auto kDropped = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(vertex_count(), kDropped);
  for (std::size_t i = 0; i < keep.size(); ++i) index.at(keep[i]) = i;
  std::vector<std::vector<Vertex>> adjacency(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex u : adjacency_[keep[i]]) {
      if (index[u] != kDropped) adjacency[i].push_back(index[u]);
    }
  }
  return Graph(std::move(adjacency));
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  auto adjacency = adjacency_;
  for (const auto& [u, v] : removed) {
    auto& ru = adjacency.at(u);
    auto& rv = adjacency.at(v);
    ru.erase(std::remove(ru.begin(), ru.end(), v), ru.end());
    rv.erase(std::remove(rv.begin(), rv.end(), u), rv.end());
  }
  return Graph(std::move(adjacency));
}

bool Graph::is_bridge(Vertex u, Vertex v) const {
  if (!adjacent(u, v)) return false;
  const Edge e{u, v};
  return !without_edges(std::span(&e, 1)).reachable_avoiding(u, {})[v];
}

void require_connected(const Graph& g) {
  if (!g.is_connected()) throw Error(ErrorCode::Disconnected, "graph must be connected");
}

void require_vertex(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " with n=" + std::to_string(g.vertex_count()));
  }
}

MultiGraph MultiGraph::from_graph(const Graph& g) {
  MultiGraph mg(g.vertex_count());
  for (const auto& [u, v] : g.edges()) mg.add_edge(u, v);
  return mg;
}

void MultiGraph::add_edge(Vertex u, Vertex v, std::int64_t count) {
  if (u >= n_ || v >= n_) throw Error(ErrorCode::VertexOutOfRange, "multigraph edge");
  if (count < 0) throw Error(ErrorCode::InvalidParams, "negative multiplicity");
  if (u == v || count == 0) return;
  multiplicity_[u * n_ + v] += count;
  multiplicity_[v * n_ + u] += count;
  edge_count_ += count;
}

std::int64_t MultiGraph::degree(Vertex v) const {
  std::int64_t d = 0;
  for (Vertex u = 0; u < n_; ++u) d += multiplicity(v, u);
  return d;
}

bool MultiGraph::is_connected() const {
  if (n_ == 0) return false;
  std::vector<bool> seen(n_, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u = 0; u < n_; ++u) {
      if (!seen[u] && multiplicity(v, u) > 0) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n_;
}

WeightedGraph make_weighted(Graph g, std::vector<Weight> weights) {
  if (weights.size() != g.vertex_count()) {
    throw Error(ErrorCode::InvalidParams, "expected " + std::to_string(g.vertex_count()) +
                                              " weights, got " + std::to_string(weights.size()));
  }
  return WeightedGraph{std::move(g), std::move(weights)};
}

WeightedGraph with_degree_weights(const Graph& g) {
  std::vector<Weight> weights(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) weights[v] = static_cast<Weight>(g.degree(v));
  return WeightedGraph{g, std::move(weights)};
}

WeightedGraph delete_vertices(const WeightedGraph& wg, std::span<const Vertex> removed) {
  std::vector<bool> gone(wg.vertex_count(), false);
  for (Vertex v : removed) {
    require_vertex(wg.graph, v);
    gone[v] = true;
  }
  std::vector<Vertex> keep;
  std::vector<Weight> weights;
  for (Vertex v = 0; v < wg.vertex_count(); ++v) {
    if (!gone[v]) {
      keep.push_back(v);
      weights.push_back(wg.weights[v]);
    }
  }
  return WeightedGraph{wg.graph.induced(keep), std::move(weights)};
}

MultiGraph contract(const Graph& g, std::span<const Vertex> merged) {
  if (merged.empty()) throw Error(ErrorCode::EmptySet, "contract needs a nonempty vertex set");
  const std::size_t n = g.vertex_count();
  std::vector<bool> in_set(n, false);
  for (Vertex v : merged) {
    require_vertex(g, v);
    in_set[v] = true;
  }
  const Vertex anchor = *std::min_element(merged.begin(), merged.end());
  std::vector<Vertex> index(n);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!in_set[v] || v == anchor) index[v] = next++;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in_set[v]) index[v] = index[anchor];
  }
  MultiGraph mg(next);
  for (const auto& [u, v] : g.edges()) mg.add_edge(index[u], index[v]);
  return mg;
}

MultiGraph completion(const WeightedGraph& wg) {
  const std::size_t n = wg.vertex_count();
  if (wg.weights.size() != n) throw Error(ErrorCode::InvalidParams, "weight vector size");
  MultiGraph mg(n + 1);
  for (const auto& [u, v] : wg.graph.edges()) mg.add_edge(u, v);
  for (Vertex v = 0; v < n; ++v) {
    const auto deficit = wg.weights[v] - static_cast<Weight>(wg.graph.degree(v));
    if (deficit < 0) {
      throw Error(ErrorCode::WeightBelowDegree,
                  "vertex " + std::to_string(v) + " has weight " + std::to_string(wg.weights[v]) +
                      " below degree " + std::to_string(wg.graph.degree(v)));
    }
    mg.add_edge(v, n, deficit);
  }
  return mg;
}

}  // namespace hitlab
