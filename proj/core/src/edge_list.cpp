#include "hitlab/edge_list.hpp"

#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "hitlab/error.hpp"

namespace hitlab {

namespace {

// Fields of one logical line with comments stripped; nullopt for blank.
std::optional<std::vector<std::string>> fields_of(const std::string& line) {
  const auto hash = line.find('#');
  std::istringstream in(line.substr(0, hash));
  std::vector<std::string> fields;
  for (std::string f; in >> f;) fields.push_back(std::move(f));
  if (fields.empty()) return std::nullopt;
  return fields;
}

std::size_t parse_count(const std::string& field, std::size_t line) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    if (field.empty() || field[0] == '-' || field[0] == '+') throw std::invalid_argument(field);
    value = std::stoull(field, &used);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "expected a non-negative integer, got '" + field + "'", line);
  }
  if (used != field.size()) {
    throw Error(ErrorCode::ParseError, "expected a non-negative integer, got '" + field + "'", line);
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::size_t line_no = 0;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto fields = fields_of(line);
    if (!fields) continue;
    if (fields->size() != 2) {
      throw Error(ErrorCode::ParseError, "expected two fields, got " + std::to_string(fields->size()),
                  line_no);
    }
    const std::size_t a = parse_count((*fields)[0], line_no);
    const std::size_t b = parse_count((*fields)[1], line_no);
    if (!header) {
      header.emplace(a, b);
      continue;
    }
    const auto [n, m] = *header;
    if (edges.size() == m) {
      throw Error(ErrorCode::ParseError, "more than the declared " + std::to_string(m) + " edges",
                  line_no);
    }
    if (a >= n || b >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n=" + std::to_string(n),
                  line_no);
    }
    if (a == b) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(a), line_no);
    const Edge canonical{std::min(a, b), std::max(a, b)};
    if (!seen.insert(canonical).second) {
      throw Error(ErrorCode::DuplicateEdge,
                  "edge (" + std::to_string(canonical.first) + "," + std::to_string(canonical.second) +
                      ") listed twice",
                  line_no);
    }
    edges.push_back(canonical);
  }
  if (!header) throw Error(ErrorCode::ParseError, "missing 'n m' header", line_no == 0 ? 1 : line_no);
  if (edges.size() != header->second) {
    throw Error(ErrorCode::ParseError,
                "declared " + std::to_string(header->second) + " edges, found " + std::to_string(edges.size()),
                line_no);
  }
  return from_edge_list(edges, header->first);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace hitlab
