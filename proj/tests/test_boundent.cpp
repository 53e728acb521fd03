#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qcorr/boundent.h"
#include "qcorr/measures.h"
#include "qcorr/states.h"
#include "qcorr/tensor.h"

using namespace qcorr;

namespace {

// closed form of the inequality maximum on the family
double family_value(double b) {
  const double tau = 1.0 / (1.0 + 7.0 * b);
  return tau * (2.0 * std::sqrt(1.0 - b * b) + 1.0 - b);
}

}  // namespace

TEST_CASE("observable expectations") {
  const DensityMatrix ground{{2, 4}, outer(ket(0, 8))};
  const auto e0 = b_expectations(ground);
  CHECK(std::abs(e0[0]) < 1e-12);
  CHECK(std::abs(e0[1]) < 1e-12);
  CHECK(std::abs(e0[2] - 1.0) < 1e-12);

  // both ququart-local correlators vanish on the GHZ diagonal mixture
  const auto eg = b_expectations({{2, 4}, ghz().density()});
  for (int k = 0; k < 3; ++k) CHECK(std::abs(eg[k]) < 1e-12);

  const double b = 0.3;
  const double tau = 1.0 / (1.0 + 7.0 * b);
  const auto eb = b_expectations(horodecki_b(b));
  CHECK(std::abs(eb[0] - tau * std::sqrt(1.0 - b * b)) < 1e-12);
  CHECK(std::abs(eb[1] + tau * std::sqrt(1.0 - b * b)) < 1e-12);
  CHECK(std::abs(eb[2] - tau * (b - 1.0)) < 1e-12);

  CHECK_THROWS(b_expectations({{2, 2}, CMatrix::identity(4)}));
}

TEST_CASE("sign enumeration") {
  CHECK(inequality_value(0, 0, 0) == 0.0);
  CHECK(std::abs(inequality_value(1, -1, 0) - 2.0) < 1e-15);
  CHECK(std::abs(inequality_value(1, -1, -1) - 3.0) < 1e-15);
  CHECK(std::abs(inequality_value(0.3, 0.2, -0.4) - 0.9) < 1e-15);

  // flipping the signs of e2 or e3, or swapping them, never changes the max
  const double e1 = 0.37, e2 = -0.82, e3 = 0.11;
  const double v = inequality_value(e1, e2, e3);
  CHECK(std::abs(inequality_value(e1, -e2, e3) - v) < 1e-15);
  CHECK(std::abs(inequality_value(e1, e2, -e3) - v) < 1e-15);
  CHECK(std::abs(inequality_value(e1, -e2, -e3) - v) < 1e-15);
  CHECK(std::abs(inequality_value(e1, e3, e2) - v) < 1e-15);
}

TEST_CASE("family sweep values") {
  // closed form: value(b) = (2 sqrt(1-b^2) + 1 - b) / (1 + 7b)
  const double grid[] = {0.04, 0.08, 0.12, 0.16, 0.20};
  const double expected[] = {2.3112494996, 1.8676857225, 1.5573629257,
                             1.3274688815, 1.1498299143};
  for (int k = 0; k < 5; ++k) {
    const auto rep = detect(grid[k]);
    CHECK(std::abs(rep.inequality_value - family_value(grid[k])) < 1e-12);
    CHECK(std::abs(rep.inequality_value - expected[k]) < 1e-7);
    CHECK(rep.violated);
    CHECK(rep.ppt_min_eig >= -1e-9);
  }

  // strictly decreasing across the sampled range
  double prev = detect(0.04).inequality_value;
  for (double b = 0.08; b < 0.501; b += 0.04) {
    const double cur = detect(b).inequality_value;
    CHECK(cur < prev);
    prev = cur;
  }

  const auto rep5 = detect(0.5);
  CHECK_FALSE(rep5.violated);
  CHECK(std::abs(rep5.inequality_value - 0.49601128) < 1e-7);

  // b = 0 saturates the algebraic maximum but the state is a 2|4 product
  const auto rep0 = detect(0.0);
  CHECK(std::abs(rep0.inequality_value - 3.0) < 1e-12);
  CHECK(negativity(horodecki_b(0.0), 0) < 1e-9);
}

TEST_CASE("ppt holds while the inequality detects") {
  for (int k = 0; k < 200; ++k) {
    const double b = k / 199.0;
    const auto rep = detect(b);
    CHECK(rep.ppt_min_eig >= -1e-9);
    CHECK(negativity(horodecki_b(b), 0) < 1e-9);
    if (b < 1.0 / std::sqrt(17.0) - 1e-3) CHECK(rep.violated);
  }
}

TEST_CASE("detection threshold") {
  const double t = detection_threshold();
  CHECK(std::abs(t - 1.0 / std::sqrt(17.0)) < 1e-9);
  CHECK(std::abs(t - 0.2425) < 1e-3);
  CHECK(detect(t - 1e-3).inequality_value > 1.0);
  CHECK(detect(t + 1e-3).inequality_value < 1.0);
}
