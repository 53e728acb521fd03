#pragma once
// Nonclassicality witness map for two-qubit states. The map
//   MV(rho) = c_opt - Tr(rho |00><00|) * Tr(rho |1+><1+|)
// goes negative only on states with nonclassical correlations; c_opt is the
// largest constant for which every classically correlated state stays
// nonnegative. An equivalent magnetization form evaluates MV from three
// <Z> readouts taken before and after a CH / CNOT circuit, and a dephasing
// sweep tracks MV against quantum discord.

#include <cstddef>
#include <vector>

#include "qcorr/states.h"

namespace qcorr {

// argmax of a [1 + 2 sqrt(a(1-a))] / 8 over [0,1]: (2 + sqrt(2))/4
double ncc_a_hat();

// value of that maximum, about 0.182138
double ncc_c_opt();

double ncc_map_value(const DensityMatrix& rho);

// MV from magnetizations: c_opt - (1/16)(1+z1+z2+z2p)(1-z1+z2-z2p)
double ncc_map_from_magnetizations(double z1, double z2, double z2p);

struct CircuitMagnetizations {
  double z1;   // <Z x I> of rho
  double z2;   // <I x Z> after CH(0,1)
  double z2p;  // <I x Z> after CNOT(0,1) . CH(0,1)
};

// simulate the readout circuit that feeds the magnetization form
CircuitMagnetizations circuit_magnetizations(const DensityMatrix& rho);

struct MvPoint {
  double lambda;
  double mv;
  double discord;
};

// z-dephase the second qubit of rho0 with each strength in lambdas and
// record MV alongside discord (measured on the second qubit)
std::vector<MvPoint> mv_dynamics(const DensityMatrix& rho0,
                                 const std::vector<double>& lambdas);

}  // namespace qcorr
