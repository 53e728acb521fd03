#pragma once
// PPT-entanglement detection for the one-parameter qubit-ququart family
// horodecki_b. Three observables (the ququart is carried as two qubits)
//   B1 = I x sx x sx,  B2 = I x sy x sy,  B3 = sz x sz x sz
// feed a four-inequality test: separable states obey
// |<B1> +- <B2> +- <B3>| <= 1 for every sign choice, while the family
// violates the bound for 0 < b < 1/sqrt(17) despite staying PPT across the
// qubit|ququart cut.

#include <array>

#include "qcorr/states.h"

namespace qcorr {

struct BoundEntReport {
  double b;
  std::array<double, 3> expectations;
  double inequality_value;  // max over the four sign choices
  bool violated;            // inequality_value > 1 + 1e-9
  double ppt_min_eig;       // min eigenvalue of the 2|4 partial transpose
};

// <B1>, <B2>, <B3> for an 8-dimensional state
std::array<double, 3> b_expectations(const DensityMatrix& rho);

// max over signs of |e1 +- e2 +- e3|
double inequality_value(double e1, double e2, double e3);

BoundEntReport detect(double b);

// bisection root of inequality_value = 1 on (0.1, 0.5); equals 1/sqrt(17)
double detection_threshold();

}  // namespace qcorr
