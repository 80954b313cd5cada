#ifndef MATCUT_LINALG_HPP
#define MATCUT_LINALG_HPP

#include <vector>

#include "matcut/real_matrix.hpp"

namespace matcut::linalg {

// Eigendecomposition of a symmetric matrix. Eigenvalues are sorted descending
// (ties keep the pre-sort order); eigenvectors are the matching columns of an
// orthonormal matrix Q with A = Q diag(values) Q^T.
struct SpectralData {
  std::vector<double> eigenvalues;
  RealMatrix eigenvectors;

  RealMatrix reconstruct() const;
};

// Thin SVD M = left * diag(singular_values) * right with k = min(rows, cols),
// singular values sorted descending, orthonormal columns in `left` and
// orthonormal rows in `right`.
struct SvdData {
  std::vector<double> singular_values;
  RealMatrix left;
  RealMatrix right;

  RealMatrix reconstruct() const;
};

// Cyclic Jacobi rotations; converges when the off-diagonal Frobenius mass
// drops below 1e-12 * ||A||_F. Input must be square and symmetric within 1e-10.
SpectralData sym_eigen(const RealMatrix& a);

// One-sided Jacobi working on whichever of M / M^T is taller.
SvdData svd(const RealMatrix& m);

// Sum of singular values.
double trace_norm(const RealMatrix& m);
double trace_norm(const SvdData& s);

// Number of singular values above max(rows, cols) * sigma_1 * 1e-12.
int numerical_rank(const SvdData& s, int rows, int cols);

}  // namespace matcut::linalg

#endif
