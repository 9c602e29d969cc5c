#pragma once

#include <cstddef>
#include <vector>

#include "hitlab/graph.hpp"
#include "hitlab/rational.hpp"

namespace hitlab {

// A connected graph with exactly one cycle C = (c_0, ..., c_{l-1}), read as
// the cycle plus one tree T_i hanging at each cycle vertex.
struct UnicycleDescriptor {
  Graph graph;
  // Cycle vertices in cyclic order, starting at the lowest index.
  std::vector<Vertex> cycle;
  // Per vertex: the cycle vertex whose tree contains it.
  std::vector<Vertex> root;
  // Per vertex: next vertex toward its root (roots point at themselves).
  std::vector<Vertex> parent;
  // Per vertex: position of root[v] on the cycle.
  std::vector<std::size_t> position;
  // Per cycle position: |E(T_i)|.
  std::vector<std::size_t> tree_edges;

  std::size_t length() const noexcept { return cycle.size(); }
};

// Throws NotUnicyclic.
UnicycleDescriptor describe_unicycle(const Graph& g);

// Closed form for H(a, b). For a and b in different trees T_i, T_j:
//
//   2 sum_{v in P_ai} m_v (d(v,i) + d(j,b) + d(i,j)(l - d(i,j))/l)
//   + 2 sum_{v in P_jb} m_v d(v,b)
//   + 2 sum_{k in C \ {i,j}} m_k (d(j,b) + m_ij m_jk / l)
//   + d(a,i)^2 + d(j,b)^2 + 2(l + d(a,i)) d(j,b) + (l + 2 d(a,i)) d(i,j)(l - d(i,j))/l
//
// where m_v counts the edges hanging at v outside G_0 = P_ai + P_jb + C, and
// m_ij, m_jk are the arc lengths i -> j -> k around the cycle. For a, b in
// the same tree the tree formula applies.
BigRational hit_unicycle_closed(const UnicycleDescriptor& u, Vertex a, Vertex b);

// Same, after checking a is in T_{claimed_i} and b in T_{claimed_j}.
// Throws VertexNotInClaimedTrees.
BigRational hit_unicycle_closed(const UnicycleDescriptor& u, Vertex a, Vertex b, Vertex claimed_i,
                                Vertex claimed_j);

}  // namespace hitlab
