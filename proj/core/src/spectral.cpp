#include "hitlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hitlab/error.hpp"

namespace hitlab {

namespace {

double off_diagonal_norm(const FloatMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

double frobenius_norm(const FloatMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) sum += a(i, j) * a(i, j);
  }
  return std::sqrt(sum);
}

void rotate(FloatMatrix& a, FloatMatrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

SpectralDecomposition eigh(const FloatMatrix& m, const EighOptions& options) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "eigh");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(m(i, j) - m(j, i)) > options.symmetry_tolerance) {
        throw Error(ErrorCode::NotSymmetric,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  FloatMatrix a = m;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (m(i, j) + m(j, i));
  }
  FloatMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  const double scale = std::max(frobenius_norm(a), 1e-300);
  bool converged = off_diagonal_norm(a) <= 1e-15 * scale;
  for (int sweep = 0; sweep < options.max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) > 1e-300) rotate(a, v, p, q);
      }
    }
    converged = off_diagonal_norm(a) <= 1e-15 * scale;
  }
  if (!converged) throw Error(ErrorCode::NoConvergence, "Jacobi sweeps exhausted");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  SpectralDecomposition out;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (std::size_t k : order) {
    out.eigenvalues.push_back(a(k, k));
    std::vector<double> vec(n);
    for (std::size_t i = 0; i < n; ++i) vec[i] = v(i, k);
    auto lead = std::find_if(vec.begin(), vec.end(), [](double x) { return std::abs(x) > 1e-12; });
    if (lead != vec.end() && *lead < 0.0) {
      for (double& x : vec) x = -x;
    }
    out.eigenvectors.push_back(std::move(vec));
  }
  return out;
}

FloatMatrix combinatorial_laplacian(const Graph& g) {
  const std::size_t n = g.vertex_count();
  FloatMatrix l(n, n);
  for (Vertex v = 0; v < n; ++v) {
    l(v, v) = static_cast<double>(g.degree(v));
    for (Vertex u : g.neighbors(v)) l(v, u) = -1.0;
  }
  return l;
}

FloatMatrix normalized_laplacian(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<double> inv_sqrt(n);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) {
      throw Error(ErrorCode::InvalidParams, "isolated vertex " + std::to_string(v));
    }
    inv_sqrt[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
  }
  FloatMatrix l(n, n);
  for (Vertex v = 0; v < n; ++v) {
    l(v, v) = 1.0;
    for (Vertex u : g.neighbors(v)) l(v, u) = -inv_sqrt[v] * inv_sqrt[u];
  }
  return l;
}

}  // namespace hitlab
