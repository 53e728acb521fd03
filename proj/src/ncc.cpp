#include "qcorr/ncc.h"

#include <cmath>
#include <stdexcept>

#include "qcorr/gates.h"
#include "qcorr/measures.h"
#include "qcorr/tensor.h"

namespace qcorr {

namespace {

void require_two_qubits(const DensityMatrix& rho) {
  if (rho.dims != std::vector<std::size_t>{2, 2})
    throw std::invalid_argument("two-qubit state expected");
}

}  // namespace

double ncc_a_hat() { return (2.0 + std::sqrt(2.0)) / 4.0; }

double ncc_c_opt() {
  const double a = ncc_a_hat();
  return a * (1.0 + 2.0 * std::sqrt(a * (1.0 - a))) / 8.0;
}

double ncc_map_value(const DensityMatrix& rho) {
  require_two_qubits(rho);
  const double p00 = rho.mat(0, 0).real();
  // |1+><1+| is the uniform block on basis states |10>, |11>
  const double p1p = 0.5 * (rho.mat(2, 2) + rho.mat(2, 3) + rho.mat(3, 2) +
                            rho.mat(3, 3))
                               .real();
  return ncc_c_opt() - p00 * p1p;
}

double ncc_map_from_magnetizations(double z1, double z2, double z2p) {
  return ncc_c_opt() -
         (1.0 + z1 + z2 + z2p) * (1.0 - z1 + z2 - z2p) / 16.0;
}

CircuitMagnetizations circuit_magnetizations(const DensityMatrix& rho) {
  require_two_qubits(rho);
  const CMatrix iz = pauli_word({0, 3});
  const CMatrix after_ch = conjugate_by(controlled_hadamard(0, 1, 2).unitary, rho.mat);
  const CMatrix after_cnot = conjugate_by(cnot(0, 1, 2).unitary, after_ch);
  return {expectation(rho.mat, pauli_word({3, 0})), expectation(after_ch, iz),
          expectation(after_cnot, iz)};
}

std::vector<MvPoint> mv_dynamics(const DensityMatrix& rho0,
                                 const std::vector<double>& lambdas) {
  require_two_qubits(rho0);
  std::vector<MvPoint> series;
  series.reserve(lambdas.size());
  for (const double lam : lambdas) {
    const DensityMatrix rho = dephase(rho0, 1, lam);
    series.push_back({lam, ncc_map_value(rho), discord(rho).discord});
  }
  return series;
}

}  // namespace qcorr
