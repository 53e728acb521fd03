#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qcorr/linalg.h"
#include "qcorr/measures.h"
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

// independent discord oracle: inclusive 129-point grid per angle, projectors
// written in Bloch form (I +- n.sigma)/2
double discord_grid_oracle(const CMatrix& rho, std::size_t measured) {
  const std::size_t other = 1 - measured;
  double best = 1e300;
  const int n = 129;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double t = i * M_PI / (n - 1);
      const double p = j * 2.0 * M_PI / (n - 1);
      const double nx = std::sin(2.0 * t) * std::cos(p);
      const double ny = std::sin(2.0 * t) * std::sin(p);
      const double nz = std::cos(2.0 * t);
      double acc = 0.0;
      for (const double s : {1.0, -1.0}) {
        CMatrix pr(2, 2);
        pr(0, 0) = (1.0 + s * nz) / 2.0;
        pr(1, 1) = (1.0 - s * nz) / 2.0;
        pr(0, 1) = s * cplx(nx, -ny) / 2.0;
        pr(1, 0) = s * cplx(nx, ny) / 2.0;
        const CMatrix full = embed_qubit_op(pr, measured, 2);
        const CMatrix picked = full * rho * full;
        const double pj = picked.trace().real();
        if (pj < 1e-14) continue;
        CMatrix cond = partial_trace(picked, {2, 2}, {other});
        cond *= cplx(1.0 / pj);
        acc += pj * entropy_bits(cond);
      }
      best = std::min(best, acc);
    }
  const double s_ab = entropy_bits(rho);
  const double s_m = entropy_bits(partial_trace(rho, {2, 2}, {measured}));
  return s_m - s_ab + best;
}

CMatrix random_local_unitary(Rng& rng) {
  CMatrix v(2, 1);
  v(0, 0) = cplx(rng.gaussian(), rng.gaussian());
  v(1, 0) = cplx(rng.gaussian(), rng.gaussian());
  double nrm = std::sqrt(std::norm(v(0, 0)) + std::norm(v(1, 0)));
  v *= cplx(1.0 / nrm);
  const double ph = rng.uniform(0.0, 2.0 * M_PI);
  CMatrix u(2, 2);
  u(0, 0) = v(0, 0);
  u(1, 0) = v(1, 0);
  u(0, 1) = -std::exp(cplx(0.0, ph)) * std::conj(v(1, 0));
  u(1, 1) = std::exp(cplx(0.0, ph)) * std::conj(v(0, 0));
  return u;
}

}  // namespace

TEST_CASE("entropy in bits") {
  CHECK(std::abs(entropy_bits(bell(1).density())) < 1e-12);
  CMatrix half = CMatrix::identity(2);
  half *= cplx(0.5);
  CHECK(std::abs(entropy_bits(half) - 1.0) < 1e-12);
  CMatrix quarter = CMatrix::identity(4);
  quarter *= cplx(0.25);
  CHECK(std::abs(entropy_bits(quarter) - 2.0) < 1e-12);
}

TEST_CASE("ppt check") {
  Rng rng(3);
  const CMatrix prod = kron(random_density(2, rng), random_density(2, rng));
  const auto r1 = ppt_check({{2, 2}, prod}, 0);
  CHECK(r1.is_ppt);
  CHECK(r1.min_eig >= -1e-12);

  const auto r2 = ppt_check({{2, 2}, bell(2).density()}, 0);
  CHECK_FALSE(r2.is_ppt);
  CHECK(std::abs(r2.min_eig + 0.5) < 1e-12);

  CHECK(ppt_check(horodecki_b(0.1), 0).is_ppt);
}

TEST_CASE("negativity values") {
  for (int k = 1; k <= 4; ++k)
    CHECK(std::abs(negativity({{2, 2}, bell(k).density()}, 0) - 0.5) < 1e-12);
  CHECK(negativity({{2, 2}, outer(ket(0, 4))}, 0) < 1e-12);
  const double th = 3.0 * M_PI / 30.0;
  CHECK(std::abs(negativity({{2, 2}, e_theta(th).density()}, 0) - std::sin(th) / 2.0) <
        1e-12);
  CHECK(std::abs(negativity({{2, 2}, e_theta(th).density()}, 0) - 0.155) < 5e-4);

  // explicit convex mixtures of products stay at zero
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    CMatrix mix(4, 4);
    double wsum = 0.0;
    const int terms = 2 + static_cast<int>(rng.uniform() * 4);
    std::vector<double> ws(terms);
    for (auto& w : ws) {
      w = rng.uniform() + 0.05;
      wsum += w;
    }
    for (const double w : ws) {
      CMatrix term = kron(random_density(2, rng), random_density(2, rng));
      term *= cplx(w / wsum);
      mix += term;
    }
    CHECK(negativity({{2, 2}, mix}, 0) < 1e-9);
  }
}

TEST_CASE("realignment criterion") {
  Rng rng(9);
  CMatrix v(2, 1);
  v(0, 0) = 0.6;
  v(1, 0) = cplx(0, 0.8);
  const CMatrix pureprod = kron(outer(ket(1, 2)), outer(v));
  const auto r1 = ccnr({{2, 2}, pureprod});
  CHECK(std::abs(r1.sum_sv - 1.0) < 1e-9);
  CHECK_FALSE(r1.flags_entangled);

  const auto r2 = ccnr({{2, 2}, bell(1).density()});
  CHECK(std::abs(r2.sum_sv - 2.0) < 1e-9);
  CHECK(r2.flags_entangled);

  CMatrix mixed = CMatrix::identity(4);
  mixed *= cplx(0.25);
  // realignment of I/4 is vec(I)vec(I)^T/4, a single singular value 1/2
  const auto r3 = ccnr({{2, 2}, mixed});
  CHECK(std::abs(r3.sum_sv - 0.5) < 1e-9);
  CHECK_FALSE(r3.flags_entangled);
}

TEST_CASE("majorization criterion") {
  Rng rng(21);
  CMatrix sepmix(4, 4);
  for (const double w : {0.3, 0.45, 0.25}) {
    CMatrix term = kron(random_density(2, rng), random_density(2, rng));
    term *= cplx(w);
    sepmix += term;
  }
  CHECK(majorization_check({{2, 2}, sepmix}, 0));
  CHECK(majorization_check({{2, 2}, sepmix}, 1));
  CHECK_FALSE(majorization_check({{2, 2}, bell(1).density()}, 0));
  CMatrix mixed = CMatrix::identity(4);
  mixed *= cplx(0.25);
  CHECK(majorization_check({{2, 2}, mixed}, 0));
}

TEST_CASE("fidelity") {
  Rng rng(33);
  const DensityMatrix r1{{2, 2}, random_density(4, rng)};
  CHECK(std::abs(fidelity(r1, r1) - 1.0) < 1e-9);

  const DensityMatrix k0{{2}, outer(ket(0, 2))};
  const DensityMatrix k1{{2}, outer(ket(1, 2))};
  CHECK(fidelity(k0, k1) < 1e-12);
  CMatrix half = CMatrix::identity(2);
  half *= cplx(0.5);
  CHECK(std::abs(fidelity(k0, {{2}, half}) - 0.5) < 1e-12);

  const DensityMatrix r2{{2, 2}, random_density(4, rng)};
  CHECK(std::abs(fidelity(r1, r2) - fidelity(r2, r1)) < 1e-9);

  // pure-pure fidelity is the squared overlap
  Rng prng(8);
  for (int t = 0; t < 10; ++t) {
    const auto p1 = haar_random_pure(2, prng);
    const auto p2 = haar_random_pure(2, prng);
    cplx ov = 0.0;
    for (std::size_t i = 0; i < 4; ++i) ov += std::conj(p1.amp(i, 0)) * p2.amp(i, 0);
    const double f = fidelity({{2, 2}, p1.density()}, {{2, 2}, p2.density()});
    CHECK(std::abs(f - std::norm(ov)) < 1e-9);
  }
}

TEST_CASE("squared concurrences of the catalog") {
  for (int l = 1; l <= 3; ++l) {
    CHECK(std::abs(concurrence_sq(ghz(), l) - 0.25) < 1e-12);
    CHECK(std::abs(concurrence_sq(w(), l) - 2.0 / 9.0) < 1e-12);
  }
  CHECK(concurrence_sq(bs(1), 1) < 1e-12);
  CHECK(std::abs(concurrence_sq(bs(1), 2) - 0.25) < 1e-12);
  CHECK(std::abs(concurrence_sq(bs(1), 3) - 0.25) < 1e-12);
  for (int l = 1; l <= 3; ++l) CHECK(concurrence_sq(sep(), l) < 1e-12);
  CHECK_THROWS(concurrence_sq(ghz(), 4));
}

TEST_CASE("pauli polynomial matches the marginal-purity form") {
  CHECK(std::abs(g_pauli(ghz().density(), 1) - 0.25) < 1e-12);
  CHECK(std::abs(g_pauli(w().density(), 2) - 2.0 / 9.0) < 1e-12);
  CHECK(g_pauli(sep().density(), 3) < 1e-12);
  CHECK(std::abs(g_pauli(w_wbar().density(), 1) - 5.0 / 36.0) < 1e-12);

  Rng rng(123);
  for (int t = 0; t < 1000; ++t) {
    const auto psi = haar_random_pure(3, rng);
    const CMatrix rho = psi.density();
    for (int l = 1; l <= 3; ++l)
      CHECK(std::abs(g_pauli(rho, l) - concurrence_sq(psi, l)) < 1e-9);
  }
}

TEST_CASE("three-tangle") {
  CHECK(std::abs(three_tangle(ghz()) - 1.0) < 1e-12);
  CHECK(three_tangle(w()) < 1e-12);
  CHECK(std::abs(three_tangle(w_wbar()) - 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(three_tangle(generic({0.6, 0, 0, 0, 0.8, 0})) -
                 4.0 * 0.36 * 0.64) < 1e-12);

  // on canonical-form states the tangle equals <XXX>^2
  Rng rng(55);
  for (int t = 0; t < 50; ++t) {
    double a[5];
    double n2 = 0.0;
    for (auto& x : a) {
      x = rng.uniform();
      n2 += x * x;
    }
    for (auto& x : a) x /= std::sqrt(n2);
    const auto psi = generic({a[0], a[1], a[2], a[3], a[4], rng.uniform(0.0, M_PI)});
    const double xxx = expectation(psi.density(), pauli_word({1, 1, 1}));
    CHECK(std::abs(three_tangle(psi) - xxx * xxx) < 1e-9);
  }
}

TEST_CASE("discord of catalog states") {
  Rng rng(91);
  const CMatrix prod = kron(random_density(2, rng), random_density(2, rng));
  CHECK(std::abs(discord({{2, 2}, prod}).discord) < 1e-6);

  CHECK(std::abs(discord({{2, 2}, bell(1).density()}).discord - 1.0) < 1e-3);

  const auto sig = ncc_sigma();
  const auto d = discord(sig);
  CHECK(d.discord > 0.05);
  CHECK(std::abs(d.discord - 0.20176) < 1e-3);
  // measured side B minimum sits at the marginal eigenbasis: D = 2 S(B) - 1
  const double sb = entropy_bits(partial_trace(sig.mat, {2, 2}, {1}));
  CHECK(std::abs(d.discord - (2.0 * sb - 1.0)) < 1e-5);
  // the state is classical on side A
  CHECK(std::abs(discord(sig, 0).discord) < 1e-6);

  // independent oracle comparison
  const double oracle = discord_grid_oracle(sig.mat, 1);
  CHECK(std::abs(d.discord - oracle) < 1e-3);
  CHECK(d.discord <= oracle + 1e-9);
}

TEST_CASE("discord invariants") {
  Rng rng(77);
  // sandwiched between zero and the mutual information
  for (int t = 0; t < 10; ++t) {
    const auto d = discord({{2, 2}, random_density(4, rng)});
    CHECK(d.discord >= -1e-9);
    CHECK(d.discord <= d.mutual_info + 1e-9);
    CHECK(std::abs(d.discord + d.classical_corr - d.mutual_info) < 1e-12);
  }

  // invariance under local unitaries
  CMatrix werner = bell(1).density();
  werner *= cplx(0.7);
  CMatrix mixed = CMatrix::identity(4);
  mixed *= cplx(0.3 / 4.0);
  werner += mixed;
  const CMatrix five[] = {ncc_sigma().mat, werner, random_density(4, rng),
                          kron(random_density(2, rng), random_density(2, rng)),
                          dephase({{2, 2}, bell(1).density()}, 0, 0.5).mat};
  for (const auto& rho : five) {
    const double base = discord({{2, 2}, rho}).discord;
    for (int k = 0; k < 10; ++k) {
      const CMatrix u = kron(random_local_unitary(rng), random_local_unitary(rng));
      const double moved = discord({{2, 2}, u * rho * u.dagger()}).discord;
      CHECK(std::abs(moved - base) < 1e-6);
    }
  }
}
