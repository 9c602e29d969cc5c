#include "hitlab/invariants.hpp"

#include <bit>
#include <string>

#include "hitlab/error.hpp"
#include "hitlab/linalg.hpp"

namespace hitlab {

std::string_view to_string(InvariantMethod method) {
  switch (method) {
    case InvariantMethod::Recursive: return "recursive";
    case InvariantMethod::Pathsum: return "pathsum";
    case InvariantMethod::Completion: return "completion";
    case InvariantMethod::Closed: return "closed";
  }
  return "unknown";
}

namespace {

Vertex lowest(VertexMask s) { return static_cast<Vertex>(std::countr_zero(s)); }

BigInt to_big(Weight w) { return BigInt(static_cast<long>(w)); }

}  // namespace

InvariantEngine::InvariantEngine(Graph host, std::vector<Weight> weights, std::size_t cap)
    : host_(std::move(host)), weights_(std::move(weights)) {
  require_within_cap(host_, cap);
  if (weights_.size() != host_.vertex_count()) {
    throw Error(ErrorCode::InvalidParams, "weight vector size does not match the graph");
  }
  completion_applies_ = true;
  for (Vertex v = 0; v < host_.vertex_count(); ++v) {
    if (weights_[v] < static_cast<Weight>(host_.degree(v))) completion_applies_ = false;
  }
}

InvariantEngine::InvariantEngine(const WeightedGraph& wg, std::size_t cap)
    : InvariantEngine(wg.graph, wg.weights, cap) {}

VertexMask InvariantEngine::component_of(Vertex v, VertexMask s) const {
  VertexMask comp = bit(v);
  VertexMask frontier = comp;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) next |= host_.neighbor_mask(lowest(f));
    next &= s & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

std::vector<VertexMask> InvariantEngine::components(VertexMask s) const {
  std::vector<VertexMask> out;
  while (s != 0) {
    const VertexMask comp = component_of(lowest(s), s);
    out.push_back(comp);
    s &= ~comp;
  }
  return out;
}

const BigInt& InvariantEngine::r_completion(VertexMask s) {
  if (auto it = r_completion_memo_.find(s); it != r_completion_memo_.end()) return it->second;
  const auto members = vertices_of(s);
  const std::size_t k = members.size();
  const std::size_t n = k + 1;
  std::vector<std::int64_t> table(n * n, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex v = members[i];
    const VertexMask inside = host_.neighbor_mask(v) & s;
    for (std::size_t j = 0; j < k; ++j) {
      if ((inside & bit(members[j])) != 0) table[i * n + j] = 1;
    }
    const Weight deficit = weights_[v] - std::popcount(inside);
    if (deficit < 0) {
      throw Error(ErrorCode::WeightBelowDegree, "vertex " + std::to_string(v) + " in a subgraph");
    }
    table[i * n + k] = deficit;
    table[k * n + i] = deficit;
  }
  return r_completion_memo_.emplace(s, detail::tau_of_multiplicities(table, n)).first->second;
}

BigInt InvariantEngine::r_expand_at(VertexMask s, Vertex x) {
  if ((s & bit(x)) == 0) throw Error(ErrorCode::InvalidParams, "pivot outside the subgraph");
  const VertexMask neighbors = host_.neighbor_mask(x);
  BigInt value = to_big(weights_[x]) * r_recursive(s & ~bit(x));
  visit_simple_paths(host_, x, s, [&](std::span<const Vertex> path, VertexMask on_path) {
    if (path.size() >= 2 && (neighbors & bit(path.back())) != 0) value -= r_recursive(s & ~on_path);
    return true;
  });
  return value;
}

const BigInt& InvariantEngine::r_recursive(VertexMask s) {
  if (auto it = r_recursive_memo_.find(s); it != r_recursive_memo_.end()) return it->second;
  BigInt value;
  if (s == 0) {
    value = 1;
  } else if (const auto parts = components(s); parts.size() > 1) {
    value = 1;
    for (VertexMask part : parts) value *= r_recursive(part);
  } else {
    value = r_expand_at(s, lowest(s));
  }
  return r_recursive_memo_.emplace(s, std::move(value)).first->second;
}

const BigInt& InvariantEngine::r(VertexMask s) {
  return completion_applies_ ? r_completion(s) : r_recursive(s);
}

BigInt InvariantEngine::z_expand_at(VertexMask s, Vertex x) {
  if ((s & bit(x)) == 0) throw Error(ErrorCode::InvalidParams, "pivot outside the subgraph");
  const VertexMask neighbors = host_.neighbor_mask(x);
  const VertexMask rest = s & ~bit(x);
  const BigInt wx = to_big(weights_[x]);
  BigInt value = wx * z_recursive(rest) + wx * wx * r_recursive(rest);
  visit_simple_paths(host_, x, s, [&](std::span<const Vertex> path, VertexMask on_path) {
    if (path.size() >= 2 && (neighbors & bit(path.back())) != 0) value -= z_recursive(s & ~on_path);
    return true;
  });
  // Path pairs from x meeting only at x, with distinct ends.
  visit_simple_paths(host_, x, s, [&](std::span<const Vertex> first, VertexMask first_mask) {
    const BigInt wu = to_big(weights_[first.back()]);
    const bool first_trivial = first.size() == 1;
    visit_simple_paths(host_, x, (s & ~first_mask) | bit(x),
                       [&](std::span<const Vertex> second, VertexMask second_mask) {
                         if (first_trivial && second.size() == 1) return true;
                         value += wu * weights_[second.back()] *
                                  r_recursive(s & ~(first_mask | second_mask));
                         return true;
                       });
    return true;
  });
  return value;
}

const BigInt& InvariantEngine::z_recursive(VertexMask s) {
  if (auto it = z_recursive_memo_.find(s); it != z_recursive_memo_.end()) return it->second;
  BigInt value;
  if (s == 0) {
    value = 0;
  } else if (const auto parts = components(s); parts.size() > 1) {
    value = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      BigInt term = z_recursive(parts[i]);
      for (std::size_t j = 0; j < parts.size(); ++j) {
        if (j != i) term *= r_recursive(parts[j]);
      }
      value += term;
    }
  } else {
    value = z_expand_at(s, lowest(s));
  }
  return z_recursive_memo_.emplace(s, std::move(value)).first->second;
}

const BigInt& InvariantEngine::z_pathsum(VertexMask s) {
  if (auto it = z_pathsum_memo_.find(s); it != z_pathsum_memo_.end()) return it->second;
  BigInt value = 0;
  for (VertexMask rest = s; rest != 0; rest &= rest - 1) {
    const Vertex start = lowest(rest);
    const BigInt ws = to_big(weights_[start]);
    visit_simple_paths(host_, start, s, [&](std::span<const Vertex> path, VertexMask on_path) {
      value += ws * weights_[path.back()] * r(s & ~on_path);
      return true;
    });
  }
  return z_pathsum_memo_.emplace(s, std::move(value)).first->second;
}

BigInt r_invariant(const WeightedGraph& wg, RMethod method, std::size_t cap) {
  if (method == RMethod::Completion) return tau(completion(wg));
  InvariantEngine engine(wg, cap);
  return engine.r_recursive(engine.all());
}

BigInt z_invariant(const WeightedGraph& wg, ZMethod method, std::size_t cap) {
  InvariantEngine engine(wg, cap);
  return method == ZMethod::Recursive ? engine.z_recursive(engine.all())
                                      : engine.z_pathsum(engine.all());
}

bool InvariantSummary::agree() const {
  auto same = [](const std::vector<InvariantValue>& values) {
    for (const auto& v : values) {
      if (v.value != values.front().value) return false;
    }
    return true;
  };
  return same(r) && same(z);
}

InvariantSummary compute_invariants(const WeightedGraph& wg, std::size_t cap) {
  InvariantEngine engine(wg, cap);
  const VertexMask all = engine.all();
  InvariantSummary out;
  out.r.push_back({engine.r_recursive(all), InvariantMethod::Recursive});
  if (engine.completion_applies()) out.r.push_back({tau(completion(wg)), InvariantMethod::Completion});
  out.z.push_back({engine.z_recursive(all), InvariantMethod::Recursive});
  out.z.push_back({engine.z_pathsum(all), InvariantMethod::Pathsum});
  return out;
}

BigInt r_closed_path(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::InvalidParams, "path closed form needs n >= 0");
  return BigInt(static_cast<long>(n + 1));
}

BigInt r_closed_complete(std::int64_t n, std::int64_t m) {
  if (n < 0 || m < 0) throw Error(ErrorCode::InvalidParams, "complete closed form needs n, m >= 0");
  if (n == 0) return 1;
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(m + 1), static_cast<unsigned long>(n - 1));
  return BigInt(static_cast<long>(m - n + 1)) * power;
}

BigInt r_closed_lollipop(std::int64_t m, std::int64_t n, std::int64_t k) {
  if (m < 2 || n < 1 || k < 0) {
    throw Error(ErrorCode::InvalidParams, "lollipop closed form needs m >= 2, n >= 1, k >= 0");
  }
  BigInt clique_power;
  mpz_ui_pow_ui(clique_power.get_mpz_t(), static_cast<unsigned long>(m + k),
                static_cast<unsigned long>(m - 2));
  const BigInt mk(static_cast<long>(m + k));
  const BigInt nn(static_cast<long>(n));
  return (mk * (nn + 1) - nn) * (k + 1) * clique_power - BigInt(static_cast<long>(m - 1)) * clique_power * (nn + 1);
}

BigInt r_closed(ClosedFamily family, std::span<const std::int64_t> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw Error(ErrorCode::InvalidParams, "expected " + std::to_string(count) + " parameters");
    }
  };
  switch (family) {
    case ClosedFamily::Path: need(1); return r_closed_path(params[0]);
    case ClosedFamily::Complete: need(2); return r_closed_complete(params[0], params[1]);
    case ClosedFamily::Lollipop: need(3); return r_closed_lollipop(params[0], params[1], params[2]);
  }
  throw Error(ErrorCode::InvalidParams, "unknown closed family");
}

std::vector<Weight> lollipop_weights(std::size_t m, std::size_t n, Weight k) {
  // x_1..x_{m-1} have degree m-1, x_m has m (it also touches y_1).
  std::vector<Weight> weights;
  for (std::size_t j = 1; j <= m; ++j) {
    const auto degree = static_cast<Weight>(m - 1 + (j == m && n > 0 ? 1 : 0));
    weights.push_back(degree + k);
  }
  weights.insert(weights.end(), n, 2);
  return weights;
}

TreeCountIdentity check_tree_count_identity(const Graph& g, Vertex x, Vertex y, std::size_t cap) {
  require_connected(g);
  require_vertex(g, x);
  require_vertex(g, y);
  if (x == y) throw Error(ErrorCode::InvalidParams, "identity needs x != y");
  InvariantEngine engine(with_degree_weights(g), cap);
  const VertexMask all = engine.all();
  TreeCountIdentity out;
  out.r_without_x = engine.r(all & ~bit(x));
  out.path_sum = 0;
  visit_simple_paths(g, x, all, [&](std::span<const Vertex> path, VertexMask on_path) {
    if (path.back() != y) return true;
    out.path_sum += engine.r(all & ~on_path);
    return false;
  });
  out.tau = tau(g);
  return out;
}

}  // namespace hitlab
