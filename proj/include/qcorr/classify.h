#pragma once
// Three-qubit pure-state classification. Two pipelines:
//  - a four-observable decision table over <XXX>, <XXZ>, <XZX>, <ZXX>,
//    intended for states in the canonical form produced by generic();
//  - a concurrence-based classifier valid for arbitrary pure states, using
//    the squared concurrence of each 1|23-type cut plus the three-tangle to
//    split GHZ-class from W-class.
// A mixedness error estimate bounds how far an observable's expectation on
// a noisy state can sit from its value on the dominant eigenvector.

#include <array>
#include <string>

#include "qcorr/complex_matrix.h"
#include "qcorr/states.h"

namespace qcorr {

enum class StateClass { GHZ, W, BS1, BS2, BS3, Separable };

std::string to_string(StateClass c);

struct ClassificationVerdict {
  StateClass cls;
  // <XXX>, <XXZ>, <XZX>, <ZXX> for the decision table; the concurrence
  // classifier fills obs[0] with <XXX> only
  std::array<double, 4> obs;
  // squared concurrences G_1..G_3 (decision table leaves them 0)
  std::array<double, 3> g;
  double tangle;
  double tol;
};

// decision table: |<XXX>| > tol -> GHZ; else all of |<XXZ>|,|<XZX>|,|<ZXX>|
// nonzero -> W; exactly one nonzero -> BS3/BS2/BS1 respectively; else
// separable
ClassificationVerdict classify_decision_table(const PureState& psi,
                                              double tol = 1e-6);

// concurrence classifier: all G_l <= tol -> separable; exactly one zero ->
// the matching biseparable class; all positive -> genuine, split by the
// three-tangle (equal to <XXX>^2 on canonical-form states)
ClassificationVerdict classify_general(const PureState& psi, double tol = 1e-6);

// fractional error (1 - l1) - sum_{j>=2} l_j o_j / o_1 committed when reading
// an observable's expectation on rho as if rho were its dominant eigenvector;
// o_j are expectations in the eigenbasis, l_j the eigenvalues descending
double mixedness_error(const DensityMatrix& rho, const CMatrix& obs);

}  // namespace qcorr
