#include "qcorr/states.h"

#include <cmath>
#include <stdexcept>

#include "qcorr/linalg.h"
#include "qcorr/tensor.h"

namespace qcorr {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

PureState make_qubits(std::size_t n, CMatrix amp) {
  return {std::vector<std::size_t>(n, 2), std::move(amp)};
}

}  // namespace

CMatrix PureState::density() const { return outer(amp); }

void validate(const PureState& s) {
  std::size_t d = 1;
  for (const auto x : s.dims) d *= x;
  if (s.amp.rows() != d || s.amp.cols() != 1)
    throw std::invalid_argument("amplitude vector shape mismatch");
  double n2 = 0.0;
  for (std::size_t i = 0; i < d; ++i) n2 += std::norm(s.amp(i, 0));
  if (std::abs(n2 - 1.0) > 1e-12) throw std::invalid_argument("state not normalized");
}

void validate(const DensityMatrix& r) {
  std::size_t d = 1;
  for (const auto x : r.dims) d *= x;
  if (r.mat.rows() != d || r.mat.cols() != d)
    throw std::invalid_argument("density matrix shape mismatch");
  if (!r.mat.is_hermitian(1e-12)) throw std::invalid_argument("not Hermitian");
  if (std::abs(r.mat.trace().real() - 1.0) > 1e-12 ||
      std::abs(r.mat.trace().imag()) > 1e-12)
    throw std::invalid_argument("trace not one");
  if (hermitian_eig(r.mat).values.front() < -1e-9)
    throw std::invalid_argument("negative eigenvalue");
}

PureState bell(int k) {
  CMatrix v(4, 1);
  switch (k) {
    case 1: v(0, 0) = kInvSqrt2; v(3, 0) = kInvSqrt2; break;
    case 2: v(0, 0) = kInvSqrt2; v(3, 0) = -kInvSqrt2; break;
    case 3: v(1, 0) = kInvSqrt2; v(2, 0) = kInvSqrt2; break;
    case 4: v(1, 0) = kInvSqrt2; v(2, 0) = -kInvSqrt2; break;
    default: throw std::invalid_argument("bell index must be 1..4");
  }
  return make_qubits(2, std::move(v));
}

PureState ghz() {
  CMatrix v(8, 1);
  v(0, 0) = kInvSqrt2;
  v(7, 0) = kInvSqrt2;
  return make_qubits(3, std::move(v));
}

PureState w() {
  CMatrix v(8, 1);
  const double a = 1.0 / std::sqrt(3.0);
  v(1, 0) = a;
  v(2, 0) = a;
  v(4, 0) = a;
  return make_qubits(3, std::move(v));
}

PureState w_wbar() {
  CMatrix v(8, 1);
  const double a = 1.0 / std::sqrt(6.0);
  for (const std::size_t i : {1, 2, 4, 3, 5, 6}) v(i, 0) = a;
  return make_qubits(3, std::move(v));
}

PureState bs(int k) {
  CMatrix v(8, 1);
  switch (k) {
    case 1: v(0, 0) = kInvSqrt2; v(3, 0) = kInvSqrt2; break;  // |0>(|00>+|11>)
    case 2: v(0, 0) = kInvSqrt2; v(5, 0) = kInvSqrt2; break;  // (|0.0>+|1.1>)
    case 3: v(0, 0) = kInvSqrt2; v(6, 0) = kInvSqrt2; break;  // (|00.>+|11.>)
    default: throw std::invalid_argument("bs index must be 1..3");
  }
  return make_qubits(3, std::move(v));
}

PureState sep() {
  CMatrix v(8, 1);
  v(0, 0) = 1.0;
  return make_qubits(3, std::move(v));
}

PureState generic(const GenericParams& p) {
  const double n2 =
      p.a0 * p.a0 + p.a1 * p.a1 + p.a2 * p.a2 + p.a3 * p.a3 + p.a4 * p.a4;
  if (std::abs(n2 - 1.0) > 1e-12)
    throw std::invalid_argument("amplitudes must have unit square sum");
  CMatrix v(8, 1);
  v(0, 0) = p.a0;
  v(4, 0) = p.a1 * std::exp(cplx(0.0, p.theta));
  v(5, 0) = p.a2;
  v(6, 0) = p.a3;
  v(7, 0) = p.a4;
  return make_qubits(3, std::move(v));
}

PureState e_theta(double theta) {
  CMatrix v(4, 1);
  v(0, 0) = std::cos(theta / 2.0);
  v(3, 0) = std::sin(theta / 2.0);
  return make_qubits(2, std::move(v));
}

PureState haar_random_pure(std::size_t n_qubits, Rng& rng) {
  const std::size_t d = std::size_t{1} << n_qubits;
  CMatrix v(d, 1);
  double n2 = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    v(i, 0) = cplx(rng.gaussian(), rng.gaussian());
    n2 += std::norm(v(i, 0));
  }
  v *= cplx(1.0 / std::sqrt(n2));
  return make_qubits(n_qubits, std::move(v));
}

DensityMatrix qubit_qutrit(const QubitQutritParams& p) {
  if (p.alpha < 0 || p.alpha > 0.5 || p.gamma < 0 || p.gamma > 1.0)
    throw std::invalid_argument("alpha in [0,1/2], gamma in [0,1]");
  const double beta = p.beta();
  // basis index 3 q + t; pair projectors live on {|00>,|11>} and {|01>,|10>}
  CMatrix m(6, 6);
  m(2, 2) = p.alpha;  // |02>
  m(5, 5) = p.alpha;  // |12>
  auto add_pair = [&m](std::size_t i, std::size_t j, double wplus, double wminus) {
    m(i, i) += (wplus + wminus) / 2.0;
    m(j, j) += (wplus + wminus) / 2.0;
    m(i, j) += (wplus - wminus) / 2.0;
    m(j, i) += (wplus - wminus) / 2.0;
  };
  add_pair(0, 4, beta, beta);      // phi+- on |00>,|11>
  add_pair(1, 3, beta, p.gamma);   // psi+ and psi- on |01>,|10>
  return {{2, 3}, std::move(m)};
}

DensityMatrix horodecki_b(double b) {
  if (b < 0.0 || b > 1.0) throw std::invalid_argument("b must lie in [0,1]");
  const double t = 1.0 / (1.0 + 7.0 * b);
  CMatrix m(8, 8);
  const double diag[8] = {b, b, b, b, (1.0 + b) / 2.0, b, b, (1.0 + b) / 2.0};
  for (std::size_t i = 0; i < 8; ++i) m(i, i) = t * diag[i];
  const std::size_t off[3][2] = {{0, 5}, {1, 6}, {2, 7}};
  for (const auto& ij : off) {
    m(ij[0], ij[1]) = t * b;
    m(ij[1], ij[0]) = t * b;
  }
  const double w = t * std::sqrt(1.0 - b * b) / 2.0;
  m(4, 7) = w;
  m(7, 4) = w;
  return {{2, 4}, std::move(m)};
}

DensityMatrix ncc_sigma() {
  CMatrix m(4, 4);
  m(0, 0) = 0.5;
  // |1+><1+| / 2 occupies the lower block
  m(2, 2) = 0.25;
  m(2, 3) = 0.25;
  m(3, 2) = 0.25;
  m(3, 3) = 0.25;
  return {{2, 2}, std::move(m)};
}

DensityMatrix pseudo_pure(const PureState& psi, double eps) {
  if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("eps must lie in [0,1]");
  const std::size_t d = psi.dim();
  CMatrix m = psi.density();
  m *= cplx(eps);
  CMatrix mix = CMatrix::identity(d);
  mix *= cplx((1.0 - eps) / static_cast<double>(d));
  m += mix;
  return {psi.dims, std::move(m)};
}

DensityMatrix dephase(const DensityMatrix& rho, std::size_t qubit, double lambda) {
  if (lambda < 0.0 || lambda > 1.0) throw std::invalid_argument("lambda in [0,1]");
  if (qubit >= rho.dims.size()) throw std::out_of_range("subsystem index");
  std::size_t stride = 1;
  for (std::size_t s = rho.dims.size(); s-- > qubit + 1;) stride *= rho.dims[s];
  const std::size_t dq = rho.dims[qubit];
  CMatrix m = rho.mat;
  const double keep = 1.0 - lambda;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const std::size_t qi = (i / stride) % dq;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::size_t qj = (j / stride) % dq;
      if (qi != qj) m(i, j) *= keep;
    }
  }
  return {rho.dims, std::move(m)};
}

}  // namespace qcorr
