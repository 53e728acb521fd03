#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qcorr/linalg.h"
#include "qcorr/states.h"
#include "qcorr/tensor.h"

using namespace qcorr;

namespace {

double pauli_expect(const PureState& s, int a, int b, int c) {
  return expectation(s.density(), pauli_word({a, b, c}));
}

double min_pt_eig(const DensityMatrix& r, std::size_t sys) {
  return hermitian_eig(partial_transpose(r.mat, r.dims, sys)).values.front();
}

}  // namespace

TEST_CASE("catalog states satisfy their invariants") {
  for (int k = 1; k <= 4; ++k) validate(bell(k));
  validate(ghz());
  validate(w());
  validate(w_wbar());
  for (int k = 1; k <= 3; ++k) validate(bs(k));
  validate(sep());
  validate(e_theta(0.7));
  validate(ncc_sigma());
  validate(qubit_qutrit({0.2, 0.3}));
  validate(horodecki_b(0.3));
  validate(pseudo_pure(ghz(), 0.9));
  Rng rng(11);
  validate(haar_random_pure(3, rng));
}

TEST_CASE("bell states are the orthonormal magic basis") {
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      cplx ov = 0.0;
      for (std::size_t r = 0; r < 4; ++r)
        ov += std::conj(bell(i).amp(r, 0)) * bell(j).amp(r, 0);
      CHECK(std::abs(ov - (i == j ? 1.0 : 0.0)) < 1e-14);
    }
  const auto pm = bell(2);
  CHECK(std::abs(pm.amp(0, 0) - 1.0 / std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(pm.amp(3, 0) + 1.0 / std::sqrt(2.0)) < 1e-14);
  CHECK_THROWS(bell(0));
  CHECK_THROWS(bell(5));
}

TEST_CASE("three-qubit catalog expectation patterns") {
  CHECK(std::abs(pauli_expect(ghz(), 1, 1, 1) - 1.0) < 1e-12);
  CHECK(std::abs(pauli_expect(w(), 1, 1, 3) - 2.0 / 3.0) < 1e-12);
  CHECK(std::abs(pauli_expect(w(), 1, 3, 1) - 2.0 / 3.0) < 1e-12);
  CHECK(std::abs(pauli_expect(w(), 3, 1, 1) - 2.0 / 3.0) < 1e-12);
  CHECK(std::abs(pauli_expect(w(), 1, 1, 1)) < 1e-12);
  CHECK(std::abs(pauli_expect(w_wbar(), 1, 1, 1) - 1.0) < 1e-12);
  CHECK(std::abs(pauli_expect(bs(1), 3, 1, 1) - 1.0) < 1e-12);
  CHECK(std::abs(pauli_expect(bs(2), 1, 3, 1) - 1.0) < 1e-12);
  CHECK(std::abs(pauli_expect(bs(3), 1, 1, 3) - 1.0) < 1e-12);
  for (const int a : {1, 3})
    CHECK(std::abs(pauli_expect(sep(), a, a == 1 ? 1 : 3, 1)) < 1e-12);
}

TEST_CASE("generic canonical form places amplitudes and phase") {
  const double r = 1.0 / std::sqrt(2.0);
  const auto g = generic({r, 0, 0, 0, r, 0});
  CHECK(max_abs_diff(g.amp, ghz().amp) < 1e-14);

  const auto z = generic({1, 0, 0, 0, 0, 0});
  CHECK(std::abs(z.amp(0, 0) - 1.0) < 1e-14);

  const auto ph = generic({0.6, 0.8, 0, 0, 0, 0.5});
  CHECK(std::abs(ph.amp(4, 0) - 0.8 * std::exp(cplx(0, 0.5))) < 1e-14);

  // a1 = a2 factors completely: |1>|0>|+>, every marginal pure
  const auto f = generic({0, r, r, 0, 0, 0});
  for (const std::size_t q : {0, 1, 2}) {
    const CMatrix marg = partial_trace(f.density(), {2, 2, 2}, {q});
    const double purity = hs_inner(marg, marg).real();
    CHECK(std::abs(purity - 1.0) < 1e-12);
  }
  CHECK_THROWS(generic({1, 1, 0, 0, 0, 0}));
}

TEST_CASE("e_theta negativity is sin(theta)/2 exactly") {
  for (const int n : {0, 1, 5, 15, 29}) {
    const double th = n * M_PI / 30.0;
    const auto s = e_theta(th);
    const CMatrix pt = partial_transpose(s.density(), {2, 2}, 0);
    const double neg = (trace_norm(pt) - 1.0) / 2.0;
    CHECK(std::abs(neg - std::sin(th) / 2.0) < 1e-12);
  }
}

TEST_CASE("qubit-qutrit family structure") {
  SUBCASE("gamma = 1 is the singlet projector") {
    const auto r = qubit_qutrit({0.0, 1.0});
    CMatrix expect(6, 6);
    expect(1, 1) = 0.5;
    expect(3, 3) = 0.5;
    expect(1, 3) = -0.5;
    expect(3, 1) = -0.5;
    CHECK(max_abs_diff(r.mat, expect) < 1e-14);
    CHECK(min_pt_eig(r, 0) < -0.4);
  }
  SUBCASE("separability boundary is PPT") {
    CHECK(min_pt_eig(qubit_qutrit({0.5, 0.0}), 0) > -1e-12);
  }
  SUBCASE("minimum partial-transpose eigenvalue follows the closed form") {
    const auto r = qubit_qutrit({0.3, 0.5});
    CHECK(std::abs(min_pt_eig(r, 0) - (1.0 - 2.0 * 0.3 - 2.0 * 0.5) / 2.0) < 1e-12);
  }
  SUBCASE("entangled exactly when 2 alpha + 2 gamma > 1") {
    CHECK(min_pt_eig(qubit_qutrit({0.1, 0.35}), 0) > 1e-6);
    CHECK(min_pt_eig(qubit_qutrit({0.1, 0.55}), 0) < -1e-6);
    CHECK(min_pt_eig(qubit_qutrit({0.4, 0.3}), 0) < -1e-6);
  }
  CHECK_THROWS(qubit_qutrit({0.6, 0.5}));
  CHECK_THROWS(qubit_qutrit({0.2, 1.2}));
}

TEST_CASE("bound-entangled family entries and PPT precondition") {
  const double b = 0.3;
  const auto r = horodecki_b(b);
  const double t = 1.0 / (1.0 + 7.0 * b);
  CHECK(std::abs(r.mat(0, 0).real() - t * b) < 1e-15);
  CHECK(std::abs(r.mat(4, 4).real() - t * (1.0 + b) / 2.0) < 1e-15);
  CHECK(std::abs(r.mat(2, 7).real() - t * b) < 1e-15);
  CHECK(std::abs(r.mat(4, 7).real() - t * std::sqrt(1.0 - b * b) / 2.0) < 1e-15);
  CHECK(std::abs(r.mat.trace().real() - 1.0) < 1e-14);

  for (int i = 0; i <= 200; ++i) {
    const auto rho = horodecki_b(i / 200.0);
    CHECK(min_pt_eig(rho, 0) >= -1e-9);
  }

  SUBCASE("b = 0 collapses to a pure product over the 2|4 cut") {
    const auto r0 = horodecki_b(0.0);
    const double purity = hs_inner(r0.mat, r0.mat).real();
    CHECK(std::abs(purity - 1.0) < 1e-14);
    const CMatrix qubit_marg = partial_trace(r0.mat, {2, 4}, {0});
    CHECK(std::abs(hs_inner(qubit_marg, qubit_marg).real() - 1.0) < 1e-14);
  }
  SUBCASE("b = 1 is diagonal-plus-flip, manifestly PSD") {
    const auto r1 = horodecki_b(1.0);
    CHECK(hermitian_eig(r1.mat).values.front() >= -1e-15);
    CHECK(std::abs(r1.mat(4, 7).real()) < 1e-15);
  }
  CHECK_THROWS(horodecki_b(-0.1));
  CHECK_THROWS(horodecki_b(1.1));
}

TEST_CASE("ncc sigma overlaps and separability") {
  const auto s = ncc_sigma();
  const auto p00 = outer(ket(0, 4));
  CMatrix plus1(4, 1);
  plus1(2, 0) = 1.0 / std::sqrt(2.0);
  plus1(3, 0) = 1.0 / std::sqrt(2.0);
  const double o1 = expectation(s.mat, p00);
  const double o2 = expectation(s.mat, outer(plus1));
  CHECK(std::abs(o1 * o2 - 0.25) < 1e-14);
  CHECK(min_pt_eig(s, 0) > -1e-12);
}

TEST_CASE("pseudo-pure mixing") {
  const auto psi = ghz();
  CHECK(max_abs_diff(pseudo_pure(psi, 1.0).mat, psi.density()) < 1e-15);
  CMatrix mixed = CMatrix::identity(8);
  mixed *= cplx(1.0 / 8.0);
  CHECK(max_abs_diff(pseudo_pure(psi, 0.0).mat, mixed) < 1e-15);
  // traceless observables scale linearly in eps
  const CMatrix ob = pauli_word({1, 1, 1});
  const double full = expectation(psi.density(), ob);
  for (const double eps : {1e-5, 0.3, 0.77})
    CHECK(std::abs(expectation(pseudo_pure(psi, eps).mat, ob) - eps * full) < 1e-12);
}

TEST_CASE("haar sampling is deterministic per seed and Haar-uniform") {
  Rng a(42), b(42), c(43);
  const auto s1 = haar_random_pure(2, a);
  const auto s2 = haar_random_pure(2, b);
  const auto s3 = haar_random_pure(2, c);
  CHECK(max_abs_diff(s1.amp, s2.amp) == 0.0);
  CHECK(max_abs_diff(s1.amp, s3.amp) > 1e-3);

  // marginal purity averages to (dA+dB)/(dA dB + 1) = 0.8 for two qubits
  Rng rng(2024);
  double acc = 0.0, overlap0 = 0.0, overlap_rot = 0.0;
  const int n = 10000;
  const double r = 1.0 / std::sqrt(2.0);
  const CMatrix had(2, 2, {r, r, r, -r});
  const CMatrix rot = kron(had, had);
  for (int i = 0; i < n; ++i) {
    const auto s = haar_random_pure(2, rng);
    const CMatrix marg = partial_trace(s.density(), {2, 2}, {0});
    acc += hs_inner(marg, marg).real();
    overlap0 += std::norm(s.amp(0, 0));
    const CMatrix rotated = rot * s.amp;
    overlap_rot += std::norm(rotated(0, 0));
  }
  CHECK(std::abs(acc / n - 0.8) < 0.01);
  // unitary invariance: overlap with any fixed state averages 1/d
  CHECK(std::abs(overlap0 / n - 0.25) < 0.01);
  CHECK(std::abs(overlap_rot / n - 0.25) < 0.01);
}

TEST_CASE("dephasing channel") {
  const DensityMatrix rho{{2, 2}, bell(1).density()};
  CHECK(max_abs_diff(dephase(rho, 0, 0.0).mat, rho.mat) < 1e-15);

  const auto both = dephase(dephase(rho, 0, 1.0), 1, 1.0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) CHECK(std::abs(both.mat(i, j)) < 1e-15);
  CHECK(hermitian_eig(both.mat).values.front() >= -1e-15);

  // partial dephasing scales the target coherences by 1 - lambda
  const auto half = dephase(rho, 0, 0.4);
  CHECK(std::abs(half.mat(0, 3) - cplx(0.6 * 0.5)) < 1e-15);
  CHECK(std::abs(half.mat(0, 0) - cplx(0.5)) < 1e-15);

  // trace and positivity preserved on random mixed inputs
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    CMatrix g(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) g(i, j) = cplx(rng.gaussian(), rng.gaussian());
    CMatrix m = g * g.dagger();
    m *= cplx(1.0 / m.trace().real());
    const auto out = dephase({{2, 2}, m}, trial % 2, 0.3 + 0.02 * trial);
    CHECK(std::abs(out.mat.trace().real() - 1.0) < 1e-12);
    CHECK(hermitian_eig(out.mat).values.front() > -1e-12);
  }
}
