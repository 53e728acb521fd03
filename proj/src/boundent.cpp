#include "qcorr/boundent.h"

#include <cmath>
#include <stdexcept>

#include "qcorr/measures.h"
#include "qcorr/tensor.h"

namespace qcorr {

std::array<double, 3> b_expectations(const DensityMatrix& rho) {
  if (rho.mat.rows() != 8) throw std::invalid_argument("8-dimensional state expected");
  return {expectation(rho.mat, pauli_word({0, 1, 1})),
          expectation(rho.mat, pauli_word({0, 2, 2})),
          expectation(rho.mat, pauli_word({3, 3, 3}))};
}

double inequality_value(double e1, double e2, double e3) {
  double best = 0.0;
  for (const double s2 : {1.0, -1.0})
    for (const double s3 : {1.0, -1.0})
      best = std::max(best, std::abs(e1 + s2 * e2 + s3 * e3));
  return best;
}

BoundEntReport detect(double b) {
  const DensityMatrix rho = horodecki_b(b);
  const auto e = b_expectations(rho);
  const double value = inequality_value(e[0], e[1], e[2]);
  const auto ppt = ppt_check(rho, 0);
  return {b, e, value, value > 1.0 + 1e-9, ppt.min_eig};
}

double detection_threshold() {
  double lo = 0.1;
  double hi = 0.5;
  double flo = detect(lo).inequality_value - 1.0;
  const double fhi = detect(hi).inequality_value - 1.0;
  if (flo * fhi >= 0.0) throw std::logic_error("no sign change on the bracket");
  for (int it = 0; it < 200; ++it) {
    const double mid = (lo + hi) / 2.0;
    const double fmid = detect(mid).inequality_value - 1.0;
    if (flo * fmid <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fmid;
    }
    if (hi - lo < 1e-12) break;
  }
  return (lo + hi) / 2.0;
}

}  // namespace qcorr
