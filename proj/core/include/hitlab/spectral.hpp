#pragma once

#include <cstddef>
#include <vector>

#include "hitlab/graph.hpp"
#include "hitlab/linalg.hpp"

namespace hitlab {

using FloatMatrix = Matrix<double>;

// Eigenpairs sorted by ascending eigenvalue. eigenvectors[k] pairs with
// eigenvalues[k]; each is unit length with its first nonzero component
// positive.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;
};

struct EighOptions {
  double symmetry_tolerance = 1e-12;
  int max_sweeps = 100;
};

// Cyclic Jacobi rotations. Throws NotSquare, NotSymmetric, NoConvergence.
SpectralDecomposition eigh(const FloatMatrix& m, const EighOptions& options = {});

// D^{-1/2} L D^{-1/2}. Throws InvalidParams if some vertex is isolated.
FloatMatrix normalized_laplacian(const Graph& g);

FloatMatrix combinatorial_laplacian(const Graph& g);

}  // namespace hitlab
