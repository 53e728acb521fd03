#pragma once
// Self-contained spectral routines for Hermitian matrices up to 64x64:
// cyclic Jacobi on the real-symmetric embedding, SVD via the Gram matrix,
// PSD square root, Cholesky positivity test, small dense linear solves.

#include <vector>

#include "qcorr/complex_matrix.h"

namespace qcorr {

struct EigResult {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // columns, values[k] <-> column k
};

// Eigendecomposition of a Hermitian matrix. Throws if H is not Hermitian
// (tolerance 1e-10 relative). Reconstruction error is kept below
// 1e-9 * ||H||_F.
EigResult hermitian_eig(const CMatrix& h);

// Singular values of an arbitrary complex matrix, descending.
std::vector<double> singular_values(const CMatrix& a);

// Sum of singular values.
double trace_norm(const CMatrix& a);

// Square root of a positive semidefinite Hermitian matrix. Eigenvalues in
// [-1e-9, 0) are clamped to zero; anything below -1e-9 throws.
CMatrix psd_sqrt(const CMatrix& h);

// Cholesky factorization of a Hermitian matrix; returns false unless the
// matrix is strictly positive definite. Used as the PD oracle in the SDP
// line search.
bool cholesky_pd(const CMatrix& h, CMatrix* lower = nullptr);

// Solve A x = b for a dense real system by partially pivoted elimination.
// Returns false on (numerical) singularity. A is row-major n x n, modified
// in place; b is overwritten with the solution.
bool solve_real_linear(std::vector<double>& a, std::vector<double>& b, std::size_t n);

}  // namespace qcorr
