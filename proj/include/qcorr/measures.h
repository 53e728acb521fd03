#pragma once
// Correlation quantifiers: PPT test, negativity, realignment criterion,
// majorization, Uhlmann fidelity, squared concurrences and their Pauli
// polynomial form, the three-tangle, and quantum discord.

#include <cstddef>
#include <utility>

#include "qcorr/complex_matrix.h"
#include "qcorr/states.h"

namespace qcorr {

// von Neumann entropy in bits, 0 log 0 = 0
double entropy_bits(const CMatrix& rho);

struct PptResult {
  bool is_ppt;
  double min_eig;
};

// transpose subsystem `cut`; PPT iff min eigenvalue >= -1e-9
PptResult ppt_check(const DensityMatrix& rho, std::size_t cut);

// (trace_norm(rho^T_cut) - 1)/2; halved convention, so Bell states score 1/2
double negativity(const DensityMatrix& rho, std::size_t cut);

struct CcnrResult {
  double sum_sv;
  bool flags_entangled;  // sum_sv > 1 + 1e-9
};

CcnrResult ccnr(const DensityMatrix& rho);  // bipartite realignment criterion

// true iff the sorted spectrum of rho is cumulatively dominated by the
// spectrum of the marginal kept at `part` (necessary for separability)
bool majorization_check(const DensityMatrix& rho, std::size_t part);

// Uhlmann fidelity (Tr sqrt(sqrt(r1) r2 sqrt(r1)))^2, in [0,1]
double fidelity(const DensityMatrix& r1, const DensityMatrix& r2);

// (1 - Tr rho_l^2)/2 for the l|rest cut of a 3-qubit pure state, l in 1..3
double concurrence_sq(const PureState& psi, int l);

// same quantity as a quadratic polynomial in Pauli expectation values
double g_pauli(const CMatrix& rho, int l);

// modulus of the degree-4 amplitude invariant; 4 a0^2 a4^2 on canonical-form
// states, and <XXX>^2 there as well
double three_tangle(const PureState& psi);

struct DiscordResult {
  double discord = 0;         // bits
  double theta_opt = 0;       // optimal projector parameters
  double phi_opt = 0;
  double mutual_info = 0;
  double classical_corr = 0;
};

// Projective-measurement discord of a 2-qubit state. The measurement acts on
// `measured` (default: second qubit, so the classical-quantum example state
// keeps a strictly positive value); projectors are
// cos(t)|0> + e^{i p} sin(t)|1> and its orthogonal complement, optimized on a
// 64x64 grid refined by Nelder-Mead from the best three cells.
DiscordResult discord(const DensityMatrix& rho, std::size_t measured = 1);

}  // namespace qcorr
