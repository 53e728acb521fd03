#pragma once
// Multipartite tensor operations and the fixed operator sets (Pauli, Gell-Mann,
// computational kets). Qubit 0 is the leftmost tensor factor (most significant
// bit of the basis index).

#include <vector>

#include "qcorr/complex_matrix.h"

namespace qcorr {

CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix kron(const CMatrix& a, const CMatrix& b, const CMatrix& c);

// Trace out every subsystem not listed in `keep` (keep is strictly increasing).
CMatrix partial_trace(const CMatrix& rho, const std::vector<std::size_t>& dims,
                      const std::vector<std::size_t>& keep);

// Transpose the single subsystem `sys` in place of the full transpose.
CMatrix partial_transpose(const CMatrix& rho, const std::vector<std::size_t>& dims,
                          std::size_t sys);

// Bipartite realignment map: R[(i,j),(k,l)] = rho[(i,k),(j,l)], an
// (da^2) x (db^2) matrix whose trace norm witnesses entanglement.
CMatrix realignment(const CMatrix& rho, std::size_t da, std::size_t db);

// Pauli matrices, k = 0..3 for I, x, y, z.
const CMatrix& pauli(int k);
// n-qubit Pauli word from per-qubit axes (each 0..3).
CMatrix pauli_word(const std::vector<int>& axes);
// Gell-Mann matrices, j = 1..8.
const CMatrix& gell_mann(int j);

// |idx> as a dim x 1 column.
CMatrix ket(std::size_t idx, std::size_t dim);
// v v^dag for a column vector (normalization is the caller's business).
CMatrix outer(const CMatrix& v);
// Normalize a column vector to unit 2-norm.
CMatrix normalized(const CMatrix& v);

// op (2x2) acting on one qubit of an n-qubit register.
CMatrix embed_qubit_op(const CMatrix& op, std::size_t qubit, std::size_t n_qubits);

}  // namespace qcorr
