#pragma once
// State catalog: named pure states, two parametric families, a separable
// nonclassical mixture, pseudo-pure mixing, Haar sampling, and dephasing.

#include <cstddef>
#include <vector>

#include "qcorr/complex_matrix.h"
#include "qcorr/rng.h"

namespace qcorr {

struct PureState {
  std::vector<std::size_t> dims;
  CMatrix amp;  // column vector of length prod(dims)

  std::size_t dim() const { return amp.rows(); }
  CMatrix density() const;
};

struct DensityMatrix {
  std::vector<std::size_t> dims;
  CMatrix mat;
};

// throw std::invalid_argument unless norm = 1 +- 1e-12
void validate(const PureState& s);
// throw unless Hermitian to 1e-12, trace 1 +- 1e-12, min eigenvalue >= -1e-9
void validate(const DensityMatrix& r);

// amplitudes a0|000> + a1 e^{i theta}|100> + a2|101> + a3|110> + a4|111>
struct GenericParams {
  double a0 = 0, a1 = 0, a2 = 0, a3 = 0, a4 = 0;
  double theta = 0;
};

// 6x6 family: alpha weights |02><02| + |12><12|, gamma weights the singlet
// projector, beta = (1 - 2 alpha - gamma)/3 spreads over the other three
// maximally entangled projectors. Entangled iff 2 alpha + 2 gamma > 1.
// The conventional domain is the full rectangle alpha in [0,1/2], gamma in
// [0,1]; points with beta < 0 are trace-one but not PSD, so run validate()
// when a physical state is required.
struct QubitQutritParams {
  double alpha = 0;
  double gamma = 0;
  double beta() const { return (1.0 - 2.0 * alpha - gamma) / 3.0; }
};

PureState bell(int k);  // 1..4: phi+, phi-, psi+, psi-
PureState ghz();
PureState w();
PureState w_wbar();     // (|W> + |Wbar>)/sqrt2
PureState bs(int k);    // 1..3: |0> on party k, phi+ on the other two
PureState sep();        // |000>
PureState generic(const GenericParams& p);
PureState e_theta(double theta);  // cos(t/2)|00> + sin(t/2)|11>
PureState haar_random_pure(std::size_t n_qubits, Rng& rng);

DensityMatrix qubit_qutrit(const QubitQutritParams& p);
// 2x4 bound-entangled family on an 8-dim space, parametrized by b in [0,1];
// PPT across the 2|4 cut for every b.
DensityMatrix horodecki_b(double b);
DensityMatrix ncc_sigma();  // (|00><00| + |1+><1+|)/2
DensityMatrix pseudo_pure(const PureState& psi, double eps);
// scales matrix elements whose `qubit` subsystem indices differ by (1-lambda)
DensityMatrix dephase(const DensityMatrix& rho, std::size_t qubit, double lambda);

}  // namespace qcorr
