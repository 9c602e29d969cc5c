#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hitlab/graph.hpp"

namespace hitlab {

inline constexpr std::size_t kDefaultEnumerationCap = 14;

struct SimplePath {
  std::vector<Vertex> vertices;

  Vertex source() const { return vertices.front(); }
  Vertex target() const { return vertices.back(); }
  std::size_t edge_count() const { return vertices.size() - 1; }

  friend bool operator==(const SimplePath&, const SimplePath&) = default;
};

struct PathQuery {
  Vertex source = 0;
  std::optional<Vertex> target;
  std::vector<Vertex> avoid;
  std::size_t cap = kDefaultEnumerationCap;
};

// Throws SizeCapExceeded when g has more than `cap` vertices (or more than
// a vertex mask can hold).
void require_within_cap(const Graph& g, std::size_t cap);

namespace detail {

template <class Visitor>
void extend_paths(const Graph& g, VertexMask allowed, std::array<Vertex, kMaxMaskVertices>& path,
                  std::size_t length, VertexMask on_path, Visitor& visit) {
  if (!visit(std::span<const Vertex>(path.data(), length), on_path)) return;
  VertexMask next = g.neighbor_mask(path[length - 1]) & allowed & ~on_path;
  while (next != 0) {
    const auto u = static_cast<Vertex>(std::countr_zero(next));
    next &= next - 1;
    path[length] = u;
    extend_paths(g, allowed, path, length + 1, on_path | bit(u), visit);
  }
}

}  // namespace detail

// Depth-first, lexicographic enumeration of every simple path that starts at
// `source` and stays inside `allowed`, the trivial path included. The
// visitor gets (path, mask of path vertices) and returns whether to keep
// extending the current path. No cap check; callers validate the graph.
template <class Visitor>
void visit_simple_paths(const Graph& g, Vertex source, VertexMask allowed, Visitor&& visit) {
  if ((allowed & bit(source)) == 0) return;
  std::array<Vertex, kMaxMaskVertices> path{};
  path[0] = source;
  detail::extend_paths(g, allowed, path, 1, bit(source), visit);
}

// Streams the paths selected by `query` in lexicographic order.
// Throws SizeCapExceeded, VertexOutOfRange, or InvalidParams when the
// source is in the avoid set.
void for_each_simple_path(const Graph& g, const PathQuery& query,
                          const std::function<void(std::span<const Vertex>)>& sink);

std::vector<SimplePath> simple_paths(const Graph& g, const PathQuery& query);
std::size_t count_simple_paths(const Graph& g, const PathQuery& query);

}  // namespace hitlab
