#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hitlab/graph.hpp"

namespace hitlab {

enum class Family {
  Path,
  Cycle,
  Complete,
  Star,
  Lollipop,
  RandomTree,
  RandomConnected,
  RandomUnicyclic,
};

std::string_view to_string(Family family);

struct FamilySpec {
  Family family = Family::Path;
  // path/cycle/complete/star: {n}; lollipop: {m, n}; random families: {n}.
  std::vector<std::size_t> sizes;
  std::optional<std::uint64_t> seed;
  // Chord probability for RandomConnected.
  double edge_probability = 0.35;
};

// A generated graph plus its symbolic vertex labels (empty when the family
// has no naming convention) and a canonical spec string.
struct NamedGraph {
  Graph graph;
  std::string family;
  std::vector<std::string> labels;
};

// Deterministic for a fixed spec. Throws InvalidParams.
NamedGraph generate_family(const FamilySpec& spec);

// "lollipop:5,5", "complete:4", "random:n=8,seed=42", "random_tree:n=9,seed=1",
// "random_unicyclic:n=7,seed=3" ("random" = random_connected, which also
// takes p=). Throws ParseError.
FamilySpec parse_family_spec(std::string_view text);
std::string format_family_spec(const FamilySpec& spec);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
// K_{1,n-1} with center 0.
Graph star_graph(std::size_t n);
// K_m on 0..m-1 (x_1..x_m), then the path y_1..y_n on m..m+n-1, x_m ~ y_1.
Graph lollipop_graph(std::size_t m, std::size_t n);
// Uniform labeled tree from a random Pruefer sequence.
Graph random_tree(std::size_t n, std::uint64_t seed);
// Random tree plus each remaining pair independently with probability p.
Graph random_connected(std::size_t n, std::uint64_t seed, double p = 0.35);
// Random tree plus one uniformly chosen non-edge; n >= 3.
Graph random_unicyclic(std::size_t n, std::uint64_t seed);

}  // namespace hitlab
