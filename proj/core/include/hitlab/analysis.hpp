#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hitlab/graph.hpp"
#include "hitlab/hitting.hpp"
#include "hitlab/paths.hpp"
#include "hitlab/rational.hpp"

namespace hitlab {

// One upper bound on H(x, y). Inapplicable bounds are reported with
// applicable = false and satisfied = true.
struct BoundCheck {
  std::string name;
  bool applicable = false;
  BigRational bound;
  BigRational slack;  // bound - H
  bool satisfied = true;
};

struct BoundReport {
  Vertex x = 0;
  Vertex y = 0;
  BigRational hitting_time;
  std::vector<BoundCheck> checks;

  bool all_satisfied() const;
  const BoundCheck* find(std::string_view name) const;
};

// Bound names, in report order.
inline constexpr std::string_view kBoundCubic = "cubic";            // (n-1)^3
inline constexpr std::string_view kBoundMaxDegree = "max_degree";   // d_max (n-1)^2
inline constexpr std::string_view kBoundEdge = "edge";              // 2m - d_y, xy in E
inline constexpr std::string_view kBoundReachDegree = "reach_degree";  // max d_u over S, d_y = n-1

// H comes from the first-step oracle. Throws Disconnected.
BoundReport verify_bounds(HittingEngine& engine, Vertex x, Vertex y);
BoundReport verify_bounds(const Graph& g, Vertex x, Vertex y);

// S = vertices reachable from x by a path avoiding y, x included (for
// x == y, just {x}). Sorted.
std::vector<Vertex> reach_avoiding(const Graph& g, Vertex x, Vertex y);

// For a bridge xy: 2|E(G')| - 1 with G' induced on S + {y}. Throws NotBridge.
BigRational hit_cut_edge(const Graph& g, Vertex x, Vertex y);

struct ReversibilityReport {
  // Z(G - {v}, d_G) per vertex v.
  std::vector<BigInt> z_without;
  // Verdict of the Z criterion.
  bool reversible = false;
  // Direct all-pairs comparison H(x,y) == H(y,x) from the oracle.
  bool pairwise_symmetric = false;
  // sum_u d_u R_vu independent of v.
  bool resistance_criterion = false;
  // First (x, y), x < y, with H(x,y) != H(y,x).
  std::optional<std::pair<Vertex, Vertex>> witness;

  bool consistent() const {
    return reversible == pairwise_symmetric && reversible == resistance_criterion;
  }
};

// Throws Disconnected, SizeCapExceeded.
ReversibilityReport reversibility_report(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

// d(a,b)^2 + 2 sum_{v on P} m_v d(v,b), where P is the a-b path and m_v
// counts the edges of the piece hanging at v once E(P) is removed.
// Throws NotATree.
BigInt hit_tree_closed(const Graph& g, Vertex a, Vertex b);

// N^3 + N - 1 = H(x_1, y_N) on L_{N,N}. Throws InvalidParams for N < 2.
BigInt hit_lollipop_closed(std::int64_t n);

namespace detail {

// The tree formula along an arbitrary path whose edges are all bridges.
BigInt hanging_path_formula(const Graph& g, std::span<const Vertex> path);

}  // namespace detail

}  // namespace hitlab
