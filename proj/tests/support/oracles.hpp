#pragma once

// Reference implementations used only by the tests. Each one is written
// from the definition and shares no code path with the library under test.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "hitlab/graph.hpp"
#include "hitlab/rational.hpp"

namespace hitlab::testing {

// Spanning trees counted by trying every (n-1)-subset of the edge multiset.
// Parallel edges are distinct entries. Keep |E| small.
std::uint64_t brute_force_tau(std::size_t n, const std::vector<Edge>& edges);
std::uint64_t brute_force_tau(const Graph& g);
std::uint64_t brute_force_tau(const MultiGraph& mg);

// Laplace expansion along the first row.
BigInt cofactor_determinant(const std::vector<std::vector<std::int64_t>>& m);

// Gaussian elimination over fractions with no pivot strategy beyond
// "first nonzero"; returns 0 for singular input.
BigRational gauss_determinant(std::vector<std::vector<BigRational>> m);

// Simple paths from `source`, counted by backtracking over vertex lists.
// target < 0 means "any endpoint"; `avoid` vertices are never entered.
std::size_t naive_path_count(const Graph& g, Vertex source, long target, const std::vector<Vertex>& avoid);

// First-step equations solved with textbook elimination over mpq.
BigRational first_step_hitting(const Graph& g, Vertex x, Vertex y);

// Effective resistance from the Laplacian pseudoinverse (Eigen, double).
double pinv_resistance(const Graph& g, Vertex x, Vertex y);

// Hitting time from the same pseudoinverse:
//   H(x,y) = sum_z d_z (L+_xz - L+_xy - L+_yz + L+_yy)
double pinv_hitting(const Graph& g, Vertex x, Vertex y);

// Spanning trees of g with the vertex set S identified, by enumerating edge
// subsets of g and keeping those that become a spanning tree after merging.
std::uint64_t brute_force_tau_identified(const Graph& g, const std::vector<Vertex>& merged);

// Random relabeling of g.
Graph permuted(const Graph& g, std::mt19937_64& rng);

// Disjoint union; vertices of b are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace hitlab::testing
