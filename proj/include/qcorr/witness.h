#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qcorr/complex_matrix.h"
#include "qcorr/rng.h"
#include "qcorr/states.h"

namespace qcorr {

// Result of one witness search: the optimal decomposable witness
//   W = c0 I + sum_i c_i ops[i],  W = P + Q^{T} (partial transpose on one side),
// with P, Q >= 0 and Tr W = 1, minimizing c^T m over the measured expectations m.
struct WitnessReport {
  double min_ctm = 0.0;          // optimal c^T m (c0 included via Tr W = 1)
  std::vector<double> coeffs;    // c0, c1, ..., ck
  CMatrix witness;               // W at the optimum
  CMatrix p_part;                // P >= 0
  CMatrix q_part;                // Q >= 0, W - Q^{T} = P
  std::vector<CMatrix> ops;      // operators whose expectations were used
  bool detected = false;         // min_ctm < -1e-6
  std::size_t rounds = 0;        // measurement rounds consumed (protocol only)
};

// Minimize c^T m over witnesses W = c0 I + sum c_i ops[i] that are decomposable
// (W = P + Q^{T_sys}, P, Q >= 0) and normalized to Tr W = 1.  `dims` gives the
// bipartition (2x2 or 2x3); `transpose_first` picks which side carries the
// partial transpose (default: first subsystem).
WitnessReport witness_sdp(const std::vector<CMatrix>& ops, const std::vector<double>& m,
                          const std::vector<std::size_t>& dims, bool transpose_first = true);

// Measure one random local product observable per round (Haar-conjugated sigma_z
// on qubits, lambda_3 on qutrits), re-solve the witness SDP on everything seen so
// far, and stop at detection or after max_rounds.  With correlation_first the
// first three rounds use the fixed correlation operators (sigma_i x sigma_i)/2
// resp. (sigma_i x lambda_i)/2 instead of random draws.
WitnessReport random_measurement_protocol(const DensityMatrix& rho, std::uint64_t seed,
                                          std::size_t max_rounds, bool correlation_first = true);

// Bloch-style coefficients of a 6x6 qubit-qutrit observable:
//   O = (1/6)[I + sum_i u_i sigma_i x I + sqrt(3) sum_j v_j I x lambda_j
//             + sum_ij beta_ij sigma_i x lambda_j]
struct QubitQutritDecomposition {
  std::array<double, 3> u{};
  std::array<double, 8> v{};
  std::array<std::array<double, 8>, 3> beta{};
};

QubitQutritDecomposition decompose_qubit_qutrit(const CMatrix& op);
CMatrix reconstruct_qubit_qutrit(const QubitQutritDecomposition& d);

struct QubitQutritWitness {
  CMatrix w;                     // 6x6 witness (entries 0 and 1/2)
  QubitQutritDecomposition d;    // u = 0, v8 and beta_11 = beta_22 = beta_33 nonzero
};

// Canonical qubit-qutrit witness: partial transpose of the maximally entangled
// qubit pair embedded in 2x3, together with its Bloch decomposition.
QubitQutritWitness qubit_qutrit_witness();

// One coefficient subset of the canonical witness, truncated and rescaled so it
// stays nonnegative on the separable corners of the (alpha, gamma) family.
struct SubsetFraction {
  std::string label;             // e.g. "v8+b11"
  bool valid = false;            // goes negative somewhere on the family
  double fraction = 0.0;         // detected / entangled among sampled states
};

// Detection fractions for every size-n_ops subset of the canonical witness
// coefficients {v8, b11, b22, b33}, Monte Carlo over the (alpha, gamma) family.
std::vector<SubsetFraction> detection_fraction_subsets(std::size_t n_ops, std::size_t samples,
                                                       std::uint64_t seed);

// Worst detection fraction among the valid size-n_ops subsets.
double detection_fraction(std::size_t n_ops, std::size_t samples, std::uint64_t seed);

}  // namespace qcorr
