#include "hitlab/paths.hpp"

#include <string>

#include "hitlab/error.hpp"

namespace hitlab {

void require_within_cap(const Graph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  if (n > cap || n > kMaxMaskVertices) {
    throw Error(ErrorCode::SizeCapExceeded,
                "path enumeration on n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

void for_each_simple_path(const Graph& g, const PathQuery& query,
                          const std::function<void(std::span<const Vertex>)>& sink) {
  require_within_cap(g, query.cap);
  require_vertex(g, query.source);
  if (query.target) require_vertex(g, *query.target);
  for (Vertex v : query.avoid) require_vertex(g, v);
  const VertexMask avoid = mask_of(query.avoid);
  if ((avoid & bit(query.source)) != 0) {
    throw Error(ErrorCode::InvalidParams, "path source is in the avoid set");
  }
  const VertexMask allowed = full_mask(g.vertex_count()) & ~avoid;
  visit_simple_paths(g, query.source, allowed, [&](std::span<const Vertex> path, VertexMask) {
    if (!query.target) {
      sink(path);
      return true;
    }
    if (path.back() == *query.target) {
      sink(path);
      return false;
    }
    return true;
  });
}

std::vector<SimplePath> simple_paths(const Graph& g, const PathQuery& query) {
  std::vector<SimplePath> out;
  for_each_simple_path(g, query, [&](std::span<const Vertex> path) {
    out.push_back(SimplePath{{path.begin(), path.end()}});
  });
  return out;
}

std::size_t count_simple_paths(const Graph& g, const PathQuery& query) {
  std::size_t count = 0;
  for_each_simple_path(g, query, [&](std::span<const Vertex>) { ++count; });
  return count;
}

}  // namespace hitlab
