#include "qcorr/classify.h"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "qcorr/linalg.h"
#include "qcorr/measures.h"
#include "qcorr/tensor.h"

namespace qcorr {

namespace {

void require_three_qubit_pure(const PureState& psi) {
  if (psi.dims != std::vector<std::size_t>{2, 2, 2})
    throw std::invalid_argument("three-qubit pure state expected");
}

}  // namespace

std::string to_string(StateClass c) {
  switch (c) {
    case StateClass::GHZ: return "GHZ";
    case StateClass::W: return "W";
    case StateClass::BS1: return "BS1";
    case StateClass::BS2: return "BS2";
    case StateClass::BS3: return "BS3";
    case StateClass::Separable: return "Separable";
  }
  return "?";
}

ClassificationVerdict classify_decision_table(const PureState& psi, double tol) {
  require_three_qubit_pure(psi);
  const CMatrix rho = psi.density();
  ClassificationVerdict v{};
  v.tol = tol;
  v.obs = {expectation(rho, pauli_word({1, 1, 1})),
           expectation(rho, pauli_word({1, 1, 3})),
           expectation(rho, pauli_word({1, 3, 1})),
           expectation(rho, pauli_word({3, 1, 1}))};
  v.tangle = three_tangle(psi);
  const bool o1 = std::abs(v.obs[1]) > tol;
  const bool o2 = std::abs(v.obs[2]) > tol;
  const bool o3 = std::abs(v.obs[3]) > tol;
  if (std::abs(v.obs[0]) > tol)
    v.cls = StateClass::GHZ;
  else if (o1 && o2 && o3)
    v.cls = StateClass::W;
  else if (o1 && !o2 && !o3)
    v.cls = StateClass::BS3;
  else if (!o1 && o2 && !o3)
    v.cls = StateClass::BS2;
  else if (!o1 && !o2 && o3)
    v.cls = StateClass::BS1;
  else
    v.cls = StateClass::Separable;
  return v;
}

ClassificationVerdict classify_general(const PureState& psi, double tol) {
  require_three_qubit_pure(psi);
  ClassificationVerdict v{};
  v.tol = tol;
  v.obs[0] = expectation(psi.density(), pauli_word({1, 1, 1}));
  for (int l = 1; l <= 3; ++l) v.g[l - 1] = concurrence_sq(psi, l);
  v.tangle = three_tangle(psi);
  const bool g1 = v.g[0] > tol;
  const bool g2 = v.g[1] > tol;
  const bool g3 = v.g[2] > tol;
  if (!g1 && !g2 && !g3)
    v.cls = StateClass::Separable;
  else if (!g1 && g2 && g3)
    v.cls = StateClass::BS1;
  else if (g1 && !g2 && g3)
    v.cls = StateClass::BS2;
  else if (g1 && g2 && !g3)
    v.cls = StateClass::BS3;
  else if (g1 && g2 && g3)
    v.cls = v.tangle > tol ? StateClass::GHZ : StateClass::W;
  else
    // one concurrence positive with the other two zero cannot happen for a
    // normalized pure state; flag rather than guess
    throw std::logic_error("inconsistent concurrence pattern");
  return v;
}

double mixedness_error(const DensityMatrix& rho, const CMatrix& obs) {
  if (rho.mat.rows() != obs.rows())
    throw std::invalid_argument("observable dimension mismatch");
  const auto eig = hermitian_eig(rho.mat);
  const std::size_t d = rho.mat.rows();
  // eigenvalues ascending; dominant eigenvector is the last column
  const std::size_t top = d - 1;
  double o1 = 0.0;
  std::vector<double> o(d, 0.0);
  for (std::size_t k = 0; k < d; ++k) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        acc += std::conj(eig.vectors(i, k)) * obs(i, j) * eig.vectors(j, k);
    o[k] = acc.real();
  }
  o1 = o[top];
  if (std::abs(o1) < 1e-9)
    throw std::domain_error("dominant eigenvector gives a vanishing expectation");
  double acc = 1.0 - eig.values[top];
  for (std::size_t k = 0; k < top; ++k) acc -= eig.values[k] * o[k] / o1;
  return acc;
}

}  // namespace qcorr
