#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hitlab/graph.hpp"
#include "hitlab/paths.hpp"
#include "hitlab/rational.hpp"

namespace hitlab {

// Vertex-weighted graph invariants R(G, w) and Z(G, w).
//
// R(empty) = 1 and Z(empty) = 0. For a pivot x,
//   R(G) = w_x R(G-x) - sum_{y~x} sum_{P in paths(x,y)} R(G-P)
//   Z(G) = w_x Z(G-x) - sum_{y~x} sum_{P in paths(x,y)} Z(G-P)
//          + w_x^2 R(G-x) + sum_{P1,P2 from x, P1 cap P2 = {x}, ends differ}
//                               w_u w_v R(G-P1-P2)
// where deletions keep the ambient weights. The results do not depend on the
// pivot. Equivalent routes: R(G, w) = tau(completion) when w >= degree, and
//   Z(G) = sum_{x,y} sum_{P in paths(x,y)} w_x w_y R(G-P).

enum class RMethod { Recursive, Completion };
enum class ZMethod { Recursive, Pathsum };
enum class InvariantMethod { Recursive, Pathsum, Completion, Closed };

std::string_view to_string(InvariantMethod method);

struct InvariantValue {
  BigInt value;
  InvariantMethod method;
};

// Memoized evaluation of R and Z on induced subgraphs of one host graph
// with fixed host weights; subgraphs are addressed by vertex mask. Not
// thread-safe; use one engine per thread.
class InvariantEngine {
 public:
  // Throws SizeCapExceeded when the host exceeds `cap`, InvalidParams on a
  // weight-vector size mismatch.
  InvariantEngine(Graph host, std::vector<Weight> weights, std::size_t cap = kDefaultEnumerationCap);
  explicit InvariantEngine(const WeightedGraph& wg, std::size_t cap = kDefaultEnumerationCap);

  const Graph& graph() const noexcept { return host_; }
  std::span<const Weight> weights() const noexcept { return weights_; }
  VertexMask all() const noexcept { return full_mask(host_.vertex_count()); }
  // True when every weight is at least its host degree, so the completion
  // route applies to every induced subgraph.
  bool completion_applies() const noexcept { return completion_applies_; }

  // Throws WeightBelowDegree if some vertex of `s` has w_v < deg_s(v).
  const BigInt& r_completion(VertexMask s);
  // Pivot: lowest-index vertex of a connected subgraph; components are
  // multiplied.
  const BigInt& r_recursive(VertexMask s);
  // Completion when it applies, recursion otherwise.
  const BigInt& r(VertexMask s);

  const BigInt& z_recursive(VertexMask s);
  const BigInt& z_pathsum(VertexMask s);

  // One unmemoized expansion step at an explicit pivot in `s` (sub-results
  // still come from the memo). Used to check pivot independence.
  BigInt r_expand_at(VertexMask s, Vertex pivot);
  BigInt z_expand_at(VertexMask s, Vertex pivot);

  // Connected component of `v` inside `s`.
  VertexMask component_of(Vertex v, VertexMask s) const;

 private:
  std::vector<VertexMask> components(VertexMask s) const;

  Graph host_;
  std::vector<Weight> weights_;
  bool completion_applies_ = false;
  std::unordered_map<VertexMask, BigInt> r_completion_memo_;
  std::unordered_map<VertexMask, BigInt> r_recursive_memo_;
  std::unordered_map<VertexMask, BigInt> z_recursive_memo_;
  std::unordered_map<VertexMask, BigInt> z_pathsum_memo_;
};

// Completion is the default R route. WeightBelowDegree if it does not apply.
BigInt r_invariant(const WeightedGraph& wg, RMethod method = RMethod::Completion,
                   std::size_t cap = kDefaultEnumerationCap);
BigInt z_invariant(const WeightedGraph& wg, ZMethod method = ZMethod::Recursive,
                   std::size_t cap = kDefaultEnumerationCap);

// R and Z by every applicable route, in the order R(recursive),
// R(completion), Z(recursive), Z(pathsum).
struct InvariantSummary {
  std::vector<InvariantValue> r;
  std::vector<InvariantValue> z;
  bool agree() const;
};
InvariantSummary compute_invariants(const WeightedGraph& wg, std::size_t cap = kDefaultEnumerationCap);

// Closed forms.
enum class ClosedFamily { Path, Complete, Lollipop };

// R(P_n, [2,...,2]) = n + 1.
BigInt r_closed_path(std::int64_t n);
// R(K_n, [m,...,m]) = (m - n + 1)(m + 1)^(n - 1).
BigInt r_closed_complete(std::int64_t n, std::int64_t m);
// R(L_{m,n}, D_k) with D_k = d_v + k on the clique and 2 on the path.
BigInt r_closed_lollipop(std::int64_t m, std::int64_t n, std::int64_t k);
// Dispatch: path {n}, complete {n, m}, lollipop {m, n, k}. Throws
// InvalidParams.
BigInt r_closed(ClosedFamily family, std::span<const std::int64_t> params);

// The weight function D_k on lollipop_graph(m, n).
std::vector<Weight> lollipop_weights(std::size_t m, std::size_t n, Weight k);

// For connected g and x != y: R(G-x, d_G), the sum over x-y paths of
// R(G-P, d_G), and tau(G), which must all coincide.
struct TreeCountIdentity {
  BigInt r_without_x;
  BigInt path_sum;
  BigInt tau;
  bool holds() const { return r_without_x == path_sum && path_sum == tau; }
};
TreeCountIdentity check_tree_count_identity(const Graph& g, Vertex x, Vertex y,
                                            std::size_t cap = kDefaultEnumerationCap);

}  // namespace hitlab
