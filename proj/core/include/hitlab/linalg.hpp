#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hitlab/graph.hpp"
#include "hitlab/rational.hpp"

namespace hitlab {

// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<BigRational>;

// Fraction-free (Bareiss) elimination. det of the 0x0 matrix is 1.
// Throws NotSquare.
BigInt determinant_exact(const IntMatrix& m);

// Exact solution of a x = b. Throws NotSquare, InvalidParams (size
// mismatch) or SingularMatrix.
std::vector<BigRational> solve_exact(const RationalMatrix& a, std::span<const BigRational> b);

IntMatrix laplacian(const MultiGraph& mg);
IntMatrix laplacian(const Graph& g);

// Number of spanning trees: det of the Laplacian with row/column 0 removed.
// 0 for disconnected input, 1 for a single vertex. Throws EmptyGraph.
BigInt tau(const MultiGraph& mg);
BigInt tau(const Graph& g);

namespace detail {

// Bareiss over int64 with 128-bit intermediates; nullopt when any
// intermediate minor leaves the int64 range. `entries` is n x n row-major.
std::optional<std::int64_t> determinant_int64(std::vector<std::int64_t> entries, std::size_t n);

// Reduced-Laplacian determinant of a multigraph given as a dense symmetric
// multiplicity table; shares the fast path with tau().
BigInt tau_of_multiplicities(std::span<const std::int64_t> multiplicity, std::size_t n);

}  // namespace detail

}  // namespace hitlab
