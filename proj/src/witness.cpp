#include "qcorr/witness.h"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qcorr/linalg.h"
#include "qcorr/parallel.h"
#include "qcorr/sdp.h"
#include "qcorr/tensor.h"

namespace qcorr {

namespace {

// Basis of d x d Hermitian matrices: diagonal units, then symmetric and
// antisymmetric pair combinations.
std::vector<CMatrix> hermitian_basis(std::size_t d) {
  std::vector<CMatrix> basis;
  basis.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    CMatrix e(d, d);
    e(i, i) = 1.0;
    basis.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      CMatrix s(d, d);
      s(i, j) = 1.0;
      s(j, i) = 1.0;
      basis.push_back(std::move(s));
      CMatrix a(d, d);
      a(i, j) = cplx(0.0, 1.0);
      a(j, i) = cplx(0.0, -1.0);
      basis.push_back(std::move(a));
    }
  }
  return basis;
}

double hs_norm(const CMatrix& a) { return std::sqrt(std::abs(hs_inner(a, a))); }

// Greedy Gram-Schmidt filter: indices of a maximal linearly independent subset.
std::vector<std::size_t> independent_subset(const std::vector<CMatrix>& mats) {
  std::vector<std::size_t> kept;
  std::vector<CMatrix> ortho;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    CMatrix r = mats[i];
    const double scale = std::max(1.0, hs_norm(r));
    for (const CMatrix& q : ortho) r -= q * hs_inner(q, r);
    const double res = hs_norm(r);
    if (res > 1e-9 * scale) {
      r *= 1.0 / res;
      ortho.push_back(std::move(r));
      kept.push_back(i);
    }
  }
  return kept;
}

CMatrix haar_unitary(std::size_t d, Rng& rng) {
  // Ginibre columns orthonormalized with positive pivots give Haar measure.
  CMatrix u(d, d);
  for (std::size_t col = 0; col < d; ++col) {
    std::vector<cplx> v(d);
    for (std::size_t r = 0; r < d; ++r) v[r] = cplx(rng.gaussian(), rng.gaussian());
    for (std::size_t prev = 0; prev < col; ++prev) {
      cplx proj = 0.0;
      for (std::size_t r = 0; r < d; ++r) proj += std::conj(u(r, prev)) * v[r];
      for (std::size_t r = 0; r < d; ++r) v[r] -= proj * u(r, prev);
    }
    double nrm = 0.0;
    for (std::size_t r = 0; r < d; ++r) nrm += std::norm(v[r]);
    nrm = std::sqrt(nrm);
    for (std::size_t r = 0; r < d; ++r) u(r, col) = v[r] / nrm;
  }
  return u;
}

CMatrix pauli(std::size_t i) { return pauli_word({static_cast<int>(i)}); }

// Family state on the (alpha, gamma) rectangle, as a plain matrix.
CMatrix family_state(double alpha, double gamma) {
  return qubit_qutrit({alpha, gamma}).mat;
}

}  // namespace

WitnessReport witness_sdp(const std::vector<CMatrix>& ops, const std::vector<double>& m,
                          const std::vector<std::size_t>& dims, bool transpose_first) {
  if (ops.size() != m.size()) throw std::invalid_argument("witness_sdp: |ops| != |m|");
  if (ops.empty()) throw std::invalid_argument("witness_sdp: no operators");
  if (dims.size() != 2) throw std::invalid_argument("witness_sdp: need a bipartition");
  const std::size_t d = dims[0] * dims[1];
  for (const CMatrix& op : ops) {
    if (op.rows() != d || op.cols() != d) throw std::invalid_argument("witness_sdp: op dimension");
    if (!op.is_hermitian(1e-10)) throw std::invalid_argument("witness_sdp: op not Hermitian");
  }

  // Work with the traceless parts; the identity coefficient c0 is fixed by Tr W = 1.
  const double dd = static_cast<double>(d);
  const CMatrix eye_over_d = CMatrix::identity(d) * cplx(1.0 / dd);
  std::vector<double> tr(ops.size());
  std::vector<CMatrix> tilde;
  tilde.reserve(ops.size());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    tr[i] = std::real(ops[i].trace());
    tilde.push_back(ops[i] - CMatrix::identity(d) * cplx(tr[i] / dd));
  }

  // Operators that repeat earlier directions cannot change the optimum; drop
  // them so the solver sees a well-posed problem and report their c_i as 0.
  const std::vector<std::size_t> kept = independent_subset(tilde);
  const std::size_t nc = kept.size();
  const std::vector<CMatrix> basis = hermitian_basis(d);
  const std::size_t nq = basis.size();
  const std::size_t sys = transpose_first ? 0 : 1;

  LMIProblem prob(nc + nq);
  std::vector<double> obj(nc + nq, 0.0);
  for (std::size_t i = 0; i < nc; ++i) obj[i] = m[kept[i]] - tr[kept[i]] / dd;
  prob.set_objective(obj, 1.0 / dd);

  // P block: W(c) - Q(q)^{T} >= 0.
  std::vector<CMatrix> pblock;
  pblock.reserve(1 + nc + nq);
  pblock.push_back(eye_over_d);
  for (std::size_t i = 0; i < nc; ++i) pblock.push_back(tilde[kept[i]]);
  for (std::size_t a = 0; a < nq; ++a)
    pblock.push_back(partial_transpose(basis[a], dims, sys) * cplx(-1.0));
  prob.add_block(pblock);

  // Q block: Q(q) >= 0.
  std::vector<CMatrix> qblock;
  qblock.reserve(1 + nc + nq);
  qblock.push_back(CMatrix(d, d));
  for (std::size_t i = 0; i < nc; ++i) qblock.push_back(CMatrix(d, d));
  for (std::size_t a = 0; a < nq; ++a) qblock.push_back(basis[a]);
  prob.add_block(qblock);

  const SDPSolution sol = sdp_solve(prob);
  if (sol.status == SDPStatus::iteration_limit)
    throw std::runtime_error("witness_sdp: solver hit its iteration limit");

  WitnessReport rep;
  rep.ops = ops;
  rep.min_ctm = sol.objective;
  rep.detected = rep.min_ctm < -1e-6;

  CMatrix q(d, d);
  for (std::size_t a = 0; a < nq; ++a) q += basis[a] * cplx(sol.x[nc + a]);
  CMatrix w = eye_over_d;
  double ct = 0.0;
  rep.coeffs.assign(ops.size() + 1, 0.0);
  for (std::size_t i = 0; i < nc; ++i) {
    const double ci = sol.x[i];
    rep.coeffs[1 + kept[i]] = ci;
    ct += ci * tr[kept[i]];
    w += tilde[kept[i]] * cplx(ci);
  }
  rep.coeffs[0] = (1.0 - ct) / dd;
  rep.p_part = w - partial_transpose(q, dims, sys);
  rep.witness = std::move(w);
  rep.q_part = std::move(q);
  return rep;
}

WitnessReport random_measurement_protocol(const DensityMatrix& rho, std::uint64_t seed,
                                          std::size_t max_rounds, bool correlation_first) {
  validate(rho);
  if (rho.dims.size() != 2 || rho.dims[0] != 2 || (rho.dims[1] != 2 && rho.dims[1] != 3))
    throw std::invalid_argument("random_measurement_protocol: need a 2x2 or 2x3 state");
  if (max_rounds == 0) throw std::invalid_argument("random_measurement_protocol: max_rounds == 0");

  const std::size_t db = rho.dims[1];
  const CMatrix zb = (db == 2) ? pauli(3) : gell_mann(3);
  Rng rng(seed);

  std::vector<CMatrix> ops;
  std::vector<double> m;
  WitnessReport rep;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    CMatrix obs(0, 0);
    if (correlation_first && round < 3) {
      const CMatrix right = (db == 2) ? pauli(round + 1) : gell_mann(static_cast<int>(round) + 1);
      obs = kron(pauli(round + 1), right);
    } else {
      const CMatrix ua = haar_unitary(2, rng);
      const CMatrix ub = haar_unitary(db, rng);
      obs = kron(ua * pauli(3) * ua.dagger(), ub * zb * ub.dagger());
    }
    obs *= 0.5;
    ops.push_back(std::move(obs));
    m.push_back(expectation(rho.mat, ops.back()));
    rep = witness_sdp(ops, m, rho.dims);
    rep.rounds = round + 1;
    if (rep.detected) return rep;
  }
  return rep;
}

QubitQutritDecomposition decompose_qubit_qutrit(const CMatrix& op) {
  if (op.rows() != 6 || op.cols() != 6)
    throw std::invalid_argument("decompose_qubit_qutrit: need a 6x6 operator");
  const CMatrix eye3 = CMatrix::identity(3);
  const CMatrix eye2 = CMatrix::identity(2);
  const double s3 = std::sqrt(3.0);
  QubitQutritDecomposition d;
  for (std::size_t i = 0; i < 3; ++i)
    d.u[i] = std::real(hs_inner(kron(pauli(i + 1), eye3), op));
  for (std::size_t j = 0; j < 8; ++j)
    d.v[j] = 0.5 * s3 * std::real(hs_inner(kron(eye2, gell_mann(static_cast<int>(j) + 1)), op));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      d.beta[i][j] = 1.5 * std::real(hs_inner(kron(pauli(i + 1), gell_mann(static_cast<int>(j) + 1)), op));
  return d;
}

CMatrix reconstruct_qubit_qutrit(const QubitQutritDecomposition& d) {
  const CMatrix eye3 = CMatrix::identity(3);
  const CMatrix eye2 = CMatrix::identity(2);
  const double s3 = std::sqrt(3.0);
  CMatrix w = CMatrix::identity(6);
  for (std::size_t i = 0; i < 3; ++i) w += kron(pauli(i + 1), eye3) * cplx(d.u[i]);
  for (std::size_t j = 0; j < 8; ++j) w += kron(eye2, gell_mann(static_cast<int>(j) + 1)) * cplx(s3 * d.v[j]);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      w += kron(pauli(i + 1), gell_mann(static_cast<int>(j) + 1)) * cplx(d.beta[i][j]);
  w *= 1.0 / 6.0;
  return w;
}

QubitQutritWitness qubit_qutrit_witness() {
  // Maximally entangled qubit pair embedded in 2x3, partially transposed.
  CMatrix psi(6, 1);
  psi(0, 0) = 1.0 / std::sqrt(2.0);
  psi(4, 0) = 1.0 / std::sqrt(2.0);
  const CMatrix proj = outer(psi);
  QubitQutritWitness qw;
  qw.w = partial_transpose(proj, {2, 3}, 0);
  qw.d = decompose_qubit_qutrit(qw.w);
  return qw;
}

namespace {

// Subsets are bitmasks over the canonical coefficients, bit 0 = v8, bits 1..3 =
// beta_11, beta_22, beta_33.
std::string subset_label(unsigned mask) {
  static const char* names[4] = {"v8", "b11", "b22", "b33"};
  std::string label;
  for (unsigned b = 0; b < 4; ++b) {
    if (!(mask >> b & 1u)) continue;
    if (!label.empty()) label += '+';
    label += names[b];
  }
  return label;
}

CMatrix subset_witness(unsigned mask) {
  // Traceless part of the canonical witness restricted to the chosen
  // coefficients, rescaled if needed so the separable corners of the family
  // stay nonnegative.
  const double s3 = std::sqrt(3.0);
  CMatrix t(6, 6);
  if (mask & 1u) t += kron(CMatrix::identity(2), gell_mann(8)) * cplx(s3 * 0.5);
  for (unsigned i = 1; i <= 3; ++i)
    if (mask >> i & 1u) t += kron(pauli(i), gell_mann(static_cast<int>(i))) * cplx(1.5);

  const CMatrix base = CMatrix::identity(6) * cplx(1.0 / 6.0);
  CMatrix w = base + t * cplx(1.0 / 6.0);

  const double sep_corners[3][2] = {{0.0, 0.0}, {0.5, 0.0}, {0.0, 0.5}};
  double gmin = 0.0;
  for (const auto& c : sep_corners) {
    const double g = 6.0 * expectation(family_state(c[0], c[1]), w) - 1.0;
    gmin = std::min(gmin, g);
  }
  if (gmin < -1.0) w = base + t * cplx(-1.0 / gmin / 6.0);
  return w;
}

bool subset_valid(const CMatrix& w) {
  // Tr(W rho(alpha, gamma)) is affine in (alpha, gamma), so a witness detects
  // something on the family iff it is negative at a rectangle corner.
  const double corners[4][2] = {{0.0, 0.0}, {0.5, 0.0}, {0.0, 1.0}, {0.5, 1.0}};
  for (const auto& c : corners)
    if (expectation(family_state(c[0], c[1]), w) < -1e-12) return true;
  return false;
}

}  // namespace

std::vector<SubsetFraction> detection_fraction_subsets(std::size_t n_ops, std::size_t samples,
                                                       std::uint64_t seed) {
  if (n_ops < 1 || n_ops > 4)
    throw std::invalid_argument("detection_fraction_subsets: n_ops must be 1..4");
  if (samples == 0) throw std::invalid_argument("detection_fraction_subsets: no samples");

  std::vector<unsigned> masks;
  for (unsigned mask = 1; mask < 16; ++mask)
    if (static_cast<std::size_t>(__builtin_popcount(mask)) == n_ops) masks.push_back(mask);

  std::vector<CMatrix> witnesses;
  std::vector<SubsetFraction> out(masks.size());
  for (std::size_t s = 0; s < masks.size(); ++s) {
    witnesses.push_back(subset_witness(masks[s]));
    out[s].label = subset_label(masks[s]);
    out[s].valid = subset_valid(witnesses[s]);
  }

  // Fixed chunk layout keeps the result independent of the thread count.
  const std::size_t chunks = 64;
  std::vector<std::size_t> entangled(chunks, 0);
  std::vector<std::vector<std::size_t>> detected(chunks,
                                                 std::vector<std::size_t>(masks.size(), 0));
  parallel_for(chunks, [&](std::size_t chunk) {
    Rng rng(seed + 0x9e3779b97f4a7c15ull * (chunk + 1));
    const std::size_t lo = samples * chunk / chunks;
    const std::size_t hi = samples * (chunk + 1) / chunks;
    for (std::size_t n = lo; n < hi; ++n) {
      const double alpha = rng.uniform(0.0, 0.5);
      const double gamma = rng.uniform(0.0, 1.0);
      if (2.0 * (alpha + gamma) <= 1.0) continue;
      ++entangled[chunk];
      const CMatrix rho = family_state(alpha, gamma);
      for (std::size_t s = 0; s < masks.size(); ++s)
        if (expectation(rho, witnesses[s]) < -1e-12) ++detected[chunk][s];
    }
  });

  std::size_t ent_total = 0;
  for (std::size_t c = 0; c < chunks; ++c) ent_total += entangled[c];
  for (std::size_t s = 0; s < masks.size(); ++s) {
    std::size_t det = 0;
    for (std::size_t c = 0; c < chunks; ++c) det += detected[c][s];
    out[s].fraction = ent_total ? static_cast<double>(det) / static_cast<double>(ent_total) : 0.0;
  }
  return out;
}

double detection_fraction(std::size_t n_ops, std::size_t samples, std::uint64_t seed) {
  const std::vector<SubsetFraction> subsets = detection_fraction_subsets(n_ops, samples, seed);
  double worst = 2.0;
  for (const SubsetFraction& s : subsets)
    if (s.valid) worst = std::min(worst, s.fraction);
  if (worst > 1.5) throw std::logic_error("detection_fraction: no valid subset");
  return worst;
}

}  // namespace qcorr
