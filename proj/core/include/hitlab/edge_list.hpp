#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "hitlab/graph.hpp"

namespace hitlab {

// Text format: header "n m", then m lines "u v" (0-based). '#' starts a
// comment running to end of line; blank lines are ignored. Errors carry the
// 1-based physical line number: ParseError for malformed or missing data,
// DuplicateEdge, LoopEdge, VertexOutOfRange for bad edges.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

// Canonical output: header, then edges with u < v in sorted order.
void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);

}  // namespace hitlab
