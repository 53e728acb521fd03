#include "qcorr/gates.h"

#include <cmath>
#include <stdexcept>

#include "qcorr/tensor.h"

namespace qcorr {

namespace {

std::size_t dim_of(std::size_t n) { return std::size_t{1} << n; }

void check_qubit(std::size_t qubit, std::size_t n) {
  if (n < 1) throw std::invalid_argument("empty register");
  if (qubit >= n) throw std::out_of_range("qubit index out of range");
}

// bit of `qubit` inside basis index i (qubit 0 = most significant)
std::size_t bit_at(std::size_t i, std::size_t qubit, std::size_t n) {
  return (i >> (n - 1 - qubit)) & 1u;
}

std::size_t flip_bit(std::size_t i, std::size_t qubit, std::size_t n) {
  return i ^ (std::size_t{1} << (n - 1 - qubit));
}

}  // namespace

CMatrix rotation2(double phase, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  const cplx mi(0.0, -1.0);
  CMatrix r(2, 2);
  r(0, 0) = c;
  r(0, 1) = mi * std::exp(cplx(0.0, -phase)) * s;
  r(1, 0) = mi * std::exp(cplx(0.0, phase)) * s;
  r(1, 1) = c;
  return r;
}

Gate rotation(double phase, double angle, std::size_t qubit, std::size_t n) {
  check_qubit(qubit, n);
  return {embed_qubit_op(rotation2(phase, angle), qubit, n), n,
          "R(" + std::to_string(phase) + "," + std::to_string(angle) + ")q" +
              std::to_string(qubit)};
}

Gate rx(double angle, std::size_t qubit, std::size_t n) {
  return rotation(0.0, angle, qubit, n);
}

Gate ry(double angle, std::size_t qubit, std::size_t n) {
  return rotation(M_PI / 2.0, angle, qubit, n);
}

Gate rz(double angle, std::size_t qubit, std::size_t n) {
  check_qubit(qubit, n);
  CMatrix r(2, 2);
  r(0, 0) = std::exp(cplx(0.0, -angle / 2.0));
  r(1, 1) = std::exp(cplx(0.0, angle / 2.0));
  return {embed_qubit_op(r, qubit, n), n,
          "RZ(" + std::to_string(angle) + ")q" + std::to_string(qubit)};
}

Gate hadamard(std::size_t qubit, std::size_t n) {
  check_qubit(qubit, n);
  const double h = 1.0 / std::sqrt(2.0);
  CMatrix m(2, 2, {h, h, h, -h});
  return {embed_qubit_op(m, qubit, n), n, "H q" + std::to_string(qubit)};
}

Gate cnot(std::size_t control, std::size_t target, std::size_t n) {
  check_qubit(control, n);
  check_qubit(target, n);
  if (control == target) throw std::invalid_argument("control equals target");
  const std::size_t d = dim_of(n);
  CMatrix u(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const std::size_t i = bit_at(j, control, n) ? flip_bit(j, target, n) : j;
    u(i, j) = 1.0;
  }
  return {std::move(u), n,
          "CNOT(" + std::to_string(control) + "," + std::to_string(target) + ")"};
}

Gate controlled_hadamard(std::size_t control, std::size_t target, std::size_t n) {
  check_qubit(control, n);
  check_qubit(target, n);
  if (control == target) throw std::invalid_argument("control equals target");
  const std::size_t d = dim_of(n);
  const double h = 1.0 / std::sqrt(2.0);
  CMatrix u(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    if (!bit_at(j, control, n)) {
      u(j, j) = 1.0;
      continue;
    }
    const std::size_t j0 = bit_at(j, target, n) ? flip_bit(j, target, n) : j;
    const std::size_t j1 = flip_bit(j0, target, n);
    u(j0, j) = h;
    u(j1, j) = bit_at(j, target, n) ? -h : h;
  }
  return {std::move(u), n,
          "CH(" + std::to_string(control) + "," + std::to_string(target) + ")"};
}

Gate swap_gate(std::size_t a, std::size_t b, std::size_t n) {
  check_qubit(a, n);
  check_qubit(b, n);
  if (a == b) throw std::invalid_argument("swap indices equal");
  const std::size_t d = dim_of(n);
  CMatrix u(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    std::size_t i = j;
    if (bit_at(j, a, n) != bit_at(j, b, n)) i = flip_bit(flip_bit(j, a, n), b, n);
    u(i, j) = 1.0;
  }
  return {std::move(u), n,
          "SWAP(" + std::to_string(a) + "," + std::to_string(b) + ")"};
}

CMatrix conjugate_by(const CMatrix& u, const CMatrix& rho) {
  return u * rho * u.dagger();
}

}  // namespace qcorr
