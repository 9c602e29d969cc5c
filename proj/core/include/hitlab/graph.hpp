#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hitlab {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;
using Weight = std::int64_t;

// Bit i set <=> vertex i in the set. Only usable for graphs with at most
// kMaxMaskVertices vertices; the enumeration-based methods never exceed it.
using VertexMask = std::uint64_t;
inline constexpr std::size_t kMaxMaskVertices = 64;

inline constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }
inline constexpr VertexMask full_mask(std::size_t n) {
  return n >= kMaxMaskVertices ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}
VertexMask mask_of(std::span<const Vertex> vertices);
std::vector<Vertex> vertices_of(VertexMask mask);

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;

  // Throws DuplicateEdge, LoopEdge or VertexOutOfRange.
  static Graph from_edge_list(std::span<const Edge> edges, std::size_t n);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::size_t volume() const noexcept { return 2 * edge_count_; }
  std::size_t max_degree() const noexcept;
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  bool adjacent(Vertex u, Vertex v) const;

  // Neighbor set as a mask; requires vertex_count() <= kMaxMaskVertices.
  VertexMask neighbor_mask(Vertex v) const { return neighbor_masks_.at(v); }
  bool has_masks() const noexcept { return vertex_count() <= kMaxMaskVertices; }

  // Canonical edge list: u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  // The empty graph is not connected; K_1 is.
  bool is_connected() const;
  std::vector<std::vector<Vertex>> components() const;
  // Unreachable vertices get SIZE_MAX.
  std::vector<std::size_t> distances_from(Vertex source) const;
  // Vertices reachable from `source` without entering `blocked`
  // (source itself included; it must not be blocked).
  std::vector<bool> reachable_avoiding(Vertex source, std::span<const Vertex> blocked) const;

  // Induced subgraph on `keep` (any order); vertex keep[i] becomes i.
  Graph induced(std::span<const Vertex> keep) const;
  // Same vertex set with the given edges removed (missing edges ignored).
  Graph without_edges(std::span<const Edge> removed) const;
  bool is_bridge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  explicit Graph(std::vector<std::vector<Vertex>> adjacency);

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexMask> neighbor_masks_;
  std::size_t edge_count_ = 0;
};

Graph from_edge_list(std::span<const Edge> edges, std::size_t n);

// Throws Disconnected unless g is connected.
void require_connected(const Graph& g);
// Throws VertexOutOfRange.
void require_vertex(const Graph& g, Vertex v);

// Undirected multigraph without loops; multiplicities stored densely.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(std::size_t n) : n_(n), multiplicity_(n * n, 0) {}
  static MultiGraph from_graph(const Graph& g);

  // Loops (u == v) are dropped.
  void add_edge(Vertex u, Vertex v, std::int64_t count = 1);

  std::size_t vertex_count() const noexcept { return n_; }
  std::int64_t multiplicity(Vertex u, Vertex v) const { return multiplicity_.at(u * n_ + v); }
  std::int64_t degree(Vertex v) const;
  std::int64_t edge_count() const noexcept { return edge_count_; }
  bool is_connected() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> multiplicity_;
  std::int64_t edge_count_ = 0;
};

// Graph with an integer weight per vertex. Weights are usually the degrees
// of some ambient graph and are carried unchanged through deletions.
struct WeightedGraph {
  Graph graph;
  std::vector<Weight> weights;

  std::size_t vertex_count() const noexcept { return graph.vertex_count(); }
};

// Throws InvalidParams when the weight vector has the wrong length.
WeightedGraph make_weighted(Graph g, std::vector<Weight> weights);
// (G, d_G).
WeightedGraph with_degree_weights(const Graph& g);

// Induced subgraph on V \ S; surviving vertices keep their relative order
// and their ambient weights.
WeightedGraph delete_vertices(const WeightedGraph& wg, std::span<const Vertex> removed);

// Identifies S to a single vertex. The merged vertex sits at min(S); the
// other vertices keep their relative order. Edges inside S become loops and
// are dropped. Throws EmptySet.
MultiGraph contract(const Graph& g, std::span<const Vertex> merged);

// Adds an apex vertex (index n) joined to v by w_v - d_v parallel edges.
// Throws WeightBelowDegree.
MultiGraph completion(const WeightedGraph& wg);

}  // namespace hitlab
