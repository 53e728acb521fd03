#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qcorr/measures.h"
#include "qcorr/ncc.h"
#include "qcorr/rng.h"
#include "qcorr/states.h"
#include "qcorr/tensor.h"

using namespace qcorr;

namespace {

CMatrix random_density(std::size_t d, Rng& rng) {
  CMatrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = cplx(rng.gaussian(), rng.gaussian());
  CMatrix m = g * g.dagger();
  m *= cplx(1.0 / m.trace().real());
  return m;
}

double map_bound(double a) { return a * (1.0 + 2.0 * std::sqrt(a * (1.0 - a))) / 8.0; }

}  // namespace

TEST_CASE("map constant and its maximizer") {
  CHECK(std::abs(ncc_a_hat() - (2.0 + std::sqrt(2.0)) / 4.0) < 1e-15);
  CHECK(std::abs(ncc_c_opt() - 0.182138) < 1e-6);
  CHECK(std::abs(ncc_c_opt() - map_bound(ncc_a_hat())) < 1e-15);

  // brute-force maximization over the defining one-parameter family
  double best = 0.0;
  double arg = 0.0;
  const int n = 1000000;
  for (int i = 0; i <= n; ++i) {
    const double a = static_cast<double>(i) / n;
    const double f = map_bound(a);
    if (f > best) {
      best = f;
      arg = a;
    }
  }
  CHECK(std::abs(best - ncc_c_opt()) < 1e-8);
  CHECK(std::abs(arg - ncc_a_hat()) < 1e-4);
}

TEST_CASE("map value on catalog states") {
  CHECK(std::abs(ncc_map_value(ncc_sigma()) + 0.067862) < 1e-6);
  CHECK(std::abs(ncc_map_value(ncc_sigma()) - (ncc_c_opt() - 0.25)) < 1e-12);

  // product-eigenbasis classical mixtures stay nonnegative
  CMatrix cc(4, 4);
  cc(0, 0) = 0.5;
  cc(3, 3) = 0.5;
  CHECK(ncc_map_value({{2, 2}, cc}) >= 0.0);
  CMatrix cc2(4, 4);
  cc2(0, 0) = 0.25;
  cc2(1, 1) = 0.25;
  cc2(2, 2) = 0.25;
  cc2(3, 3) = 0.25;
  CHECK(ncc_map_value({{2, 2}, cc2}) >= 0.0);
  CHECK_THROWS(ncc_map_value({{2}, CMatrix::identity(2)}));
}

TEST_CASE("magnetization form") {
  CHECK(std::abs(ncc_map_from_magnetizations(0, 1, 0) + 0.067862) < 1e-6);
  CHECK(std::abs(ncc_map_from_magnetizations(1, 1, 1) - ncc_c_opt()) < 1e-15);

  const auto mags = circuit_magnetizations(ncc_sigma());
  CHECK(std::abs(mags.z1 - 0.0) < 1e-12);
  CHECK(std::abs(mags.z2 - 1.0) < 1e-12);
  CHECK(std::abs(mags.z2p - 0.0) < 1e-12);

  // circuit route agrees with the direct overlap product on arbitrary states
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const DensityMatrix rho{{2, 2}, random_density(4, rng)};
    const auto m = circuit_magnetizations(rho);
    CHECK(std::abs(ncc_map_from_magnetizations(m.z1, m.z2, m.z2p) -
                   ncc_map_value(rho)) < 1e-9);
  }
}

TEST_CASE("dephasing sweep against discord") {
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(i / 10.0);
  const auto series = mv_dynamics(ncc_sigma(), grid);
  REQUIRE(series.size() == 11);

  // closed form on this state: MV(lambda) = c_opt - (2 - lambda)/8
  for (const auto& pt : series)
    CHECK(std::abs(pt.mv - (ncc_c_opt() - (2.0 - pt.lambda) / 8.0)) < 1e-12);

  CHECK(series.front().mv < 0.0);
  CHECK(std::abs(series.back().mv - (ncc_c_opt() - 0.125)) < 1e-12);
  CHECK(std::abs(series.back().mv - 0.057138) < 1e-6);
  for (std::size_t i = 1; i < series.size(); ++i)
    CHECK(series[i].mv > series[i - 1].mv);

  // the witness crosses zero strictly inside the sweep
  const double lam_star = 2.0 - 8.0 * ncc_c_opt();
  CHECK(lam_star > 0.0);
  CHECK(lam_star < 1.0);
  CHECK(std::abs(lam_star - 0.542893) < 1e-6);

  // at the first grid point past the crossing the map has already lost the
  // state while discord is still far from zero
  std::size_t first_pos = 0;
  while (first_pos < series.size() && series[first_pos].mv <= 0.0) ++first_pos;
  REQUIRE(first_pos < series.size());
  CHECK(series[first_pos].lambda > lam_star);
  CHECK(series[first_pos].discord > 1e-3);

  // fully dephased endpoint is classical on both sides
  CHECK(series.back().discord < 1e-6);
  CHECK(series.front().discord > 0.1);
}
