#include "hitlab/linalg.hpp"

#include <string>

#include "hitlab/error.hpp"

namespace hitlab {

BigInt determinant_exact(const IntMatrix& input) {
  if (!input.is_square()) {
    throw Error(ErrorCode::NotSquare, std::to_string(input.rows()) + "x" + std::to_string(input.cols()));
  }
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  BigInt previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      m.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
        m(i, j) = std::move(t);
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace detail {

__extension__ typedef __int128 Wide;

std::optional<std::int64_t> determinant_int64(std::vector<std::int64_t> a, std::size_t n) {
  if (n == 0) return 1;
  constexpr Wide kMax = INT64_MAX;
  constexpr Wide kMin = INT64_MIN;
  auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return a[r * n + c]; };
  std::int64_t previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(pivot, c));
      sign = -sign;
    }
    const Wide diag = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Wide lead = at(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        const Wide t = (static_cast<Wide>(at(i, j)) * diag - lead * at(k, j)) / previous;
        if (t > kMax || t < kMin) return std::nullopt;
        at(i, j) = static_cast<std::int64_t>(t);
      }
      at(i, k) = 0;
    }
    previous = at(k, k);
  }
  const std::int64_t last = at(n - 1, n - 1);
  if (sign < 0 && last == INT64_MIN) return std::nullopt;
  return sign * last;
}

BigInt tau_of_multiplicities(std::span<const std::int64_t> multiplicity, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::EmptyGraph, "spanning trees of the empty graph");
  if (n == 1) return 1;
  const std::size_t r = n - 1;
  std::vector<std::int64_t> reduced(r * r, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::int64_t degree = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const std::int64_t mult = multiplicity[i * n + j];
      degree += mult;
      if (j >= 1) reduced[(i - 1) * r + (j - 1)] = -mult;
    }
    reduced[(i - 1) * r + (i - 1)] = degree;
  }
  if (auto fast = determinant_int64(reduced, r)) return BigInt(static_cast<long>(*fast));
  IntMatrix big(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) big(i, j) = static_cast<long>(reduced[i * r + j]);
  }
  return determinant_exact(big);
}

}  // namespace detail

std::vector<BigRational> solve_exact(const RationalMatrix& a, std::span<const BigRational> b) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "solve_exact");
  const std::size_t n = a.rows();
  if (b.size() != n) throw Error(ErrorCode::InvalidParams, "right-hand side has wrong length");
  RationalMatrix m(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n) = b[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::SingularMatrix, "column " + std::to_string(k));
    if (pivot != k) m.swap_rows(k, pivot);
    const BigRational inv = 1 / m(k, k);
    for (std::size_t j = k; j <= n; ++j) m(k, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      const BigRational factor = m(i, k);
      for (std::size_t j = k; j <= n; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  std::vector<BigRational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m(i, n);
  return x;
}

IntMatrix laplacian(const MultiGraph& mg) {
  const std::size_t n = mg.vertex_count();
  IntMatrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) l(i, j) = -static_cast<long>(mg.multiplicity(i, j));
    }
    l(i, i) = static_cast<long>(mg.degree(i));
  }
  return l;
}

IntMatrix laplacian(const Graph& g) { return laplacian(MultiGraph::from_graph(g)); }

BigInt tau(const MultiGraph& mg) {
  const std::size_t n = mg.vertex_count();
  std::vector<std::int64_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = mg.multiplicity(i, j);
  }
  return detail::tau_of_multiplicities(table, n);
}

BigInt tau(const Graph& g) { return tau(MultiGraph::from_graph(g)); }

}  // namespace hitlab
