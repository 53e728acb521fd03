#pragma once
// Gate library over the row-major register convention: qubit 0 is the
// leftmost tensor factor (most significant bit of the basis index).

#include <cstddef>
#include <string>

#include "qcorr/complex_matrix.h"

namespace qcorr {

struct Gate {
  CMatrix unitary;     // 2^n x 2^n
  std::size_t arity;   // register size n
  std::string label;
};

// Single-qubit rotation about the equatorial axis at azimuth `phase`
// (0 = x, pi/2 = y) by `angle`:
//   [[cos(a/2), -i e^{-i phase} sin(a/2)], [-i e^{i phase} sin(a/2), cos(a/2)]]
CMatrix rotation2(double phase, double angle);

Gate rotation(double phase, double angle, std::size_t qubit, std::size_t n);
Gate rx(double angle, std::size_t qubit, std::size_t n);
Gate ry(double angle, std::size_t qubit, std::size_t n);
// Implemented as diag(e^{-i a/2}, e^{i a/2}) directly; the pulse composite
// rx(pi/2) ry(a) rx(-pi/2) reproduces it exactly and is kept as a test.
Gate rz(double angle, std::size_t qubit, std::size_t n);
Gate hadamard(std::size_t qubit, std::size_t n);

Gate cnot(std::size_t control, std::size_t target, std::size_t n);
Gate controlled_hadamard(std::size_t control, std::size_t target, std::size_t n);
Gate swap_gate(std::size_t a, std::size_t b, std::size_t n);

// U rho U^dag
CMatrix conjugate_by(const CMatrix& u, const CMatrix& rho);

}  // namespace qcorr
