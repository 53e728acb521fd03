#include "qcorr/measures.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qcorr/linalg.h"
#include "qcorr/tensor.h"

namespace qcorr {

namespace {

double xlog2x(double p) { return p > 1e-15 ? p * std::log2(p) : 0.0; }

std::vector<double> descending_spectrum(const CMatrix& h) {
  auto v = hermitian_eig(h).values;
  std::sort(v.begin(), v.end(), std::greater<double>());
  return v;
}

void require_bipartite(const DensityMatrix& rho) {
  if (rho.dims.size() != 2) throw std::invalid_argument("bipartite state expected");
}

void require_three_qubits(const std::vector<std::size_t>& dims) {
  if (dims != std::vector<std::size_t>{2, 2, 2})
    throw std::invalid_argument("three-qubit state expected");
}

cplx amp_at(const PureState& psi, int b1, int b2, int b3) {
  return psi.amp(static_cast<std::size_t>(4 * b1 + 2 * b2 + b3), 0);
}

// conditional entropy of the unmeasured qubit after the (t, p) projective
// measurement on `measured`
double conditional_entropy(const CMatrix& rho, std::size_t measured, double t,
                           double p) {
  const std::size_t other = 1 - measured;
  CMatrix v0(2, 1), v1(2, 1);
  v0(0, 0) = std::cos(t);
  v0(1, 0) = std::exp(cplx(0.0, p)) * std::sin(t);
  v1(0, 0) = std::exp(cplx(0.0, -p)) * std::sin(t);
  v1(1, 0) = -std::cos(t);
  double acc = 0.0;
  for (const auto& v : {v0, v1}) {
    const CMatrix proj = embed_qubit_op(outer(v), measured, 2);
    const CMatrix picked = proj * rho * proj;
    const double pj = picked.trace().real();
    if (pj < 1e-14) continue;
    CMatrix cond = partial_trace(picked, {2, 2}, {other});
    cond *= cplx(1.0 / pj);
    acc += pj * entropy_bits(cond);
  }
  return acc;
}

struct NmPoint {
  double t, p, f;
};

// 2-d Nelder-Mead on the conditional entropy surface
NmPoint nelder_mead(const CMatrix& rho, std::size_t measured, double t0, double p0,
                    double h) {
  auto eval = [&](double t, double p) {
    return conditional_entropy(rho, measured, t, p);
  };
  NmPoint s[3] = {{t0, p0, eval(t0, p0)},
                  {t0 + h, p0, eval(t0 + h, p0)},
                  {t0, p0 + h, eval(t0, p0 + h)}};
  for (int it = 0; it < 200; ++it) {
    std::sort(s, s + 3, [](const NmPoint& a, const NmPoint& b) { return a.f < b.f; });
    if (s[2].f - s[0].f < 1e-13) break;
    const double ct = (s[0].t + s[1].t) / 2.0, cp = (s[0].p + s[1].p) / 2.0;
    NmPoint r{ct + (ct - s[2].t), cp + (cp - s[2].p), 0.0};
    r.f = eval(r.t, r.p);
    if (r.f < s[0].f) {
      NmPoint e{ct + 2.0 * (ct - s[2].t), cp + 2.0 * (cp - s[2].p), 0.0};
      e.f = eval(e.t, e.p);
      s[2] = e.f < r.f ? e : r;
    } else if (r.f < s[1].f) {
      s[2] = r;
    } else {
      NmPoint c{ct + 0.5 * (s[2].t - ct), cp + 0.5 * (s[2].p - cp), 0.0};
      c.f = eval(c.t, c.p);
      if (c.f < s[2].f) {
        s[2] = c;
      } else {
        for (int i = 1; i < 3; ++i) {
          s[i].t = s[0].t + 0.5 * (s[i].t - s[0].t);
          s[i].p = s[0].p + 0.5 * (s[i].p - s[0].p);
          s[i].f = eval(s[i].t, s[i].p);
        }
      }
    }
  }
  std::sort(s, s + 3, [](const NmPoint& a, const NmPoint& b) { return a.f < b.f; });
  return s[0];
}

}  // namespace

double entropy_bits(const CMatrix& rho) {
  double acc = 0.0;
  for (const double lam : hermitian_eig(rho).values) acc -= xlog2x(lam);
  return acc;
}

PptResult ppt_check(const DensityMatrix& rho, std::size_t cut) {
  const CMatrix pt = partial_transpose(rho.mat, rho.dims, cut);
  const double lo = hermitian_eig(pt).values.front();
  return {lo >= -1e-9, lo};
}

double negativity(const DensityMatrix& rho, std::size_t cut) {
  return (trace_norm(partial_transpose(rho.mat, rho.dims, cut)) - 1.0) / 2.0;
}

CcnrResult ccnr(const DensityMatrix& rho) {
  require_bipartite(rho);
  const CMatrix r = realignment(rho.mat, rho.dims[0], rho.dims[1]);
  double sum = 0.0;
  for (const double sv : singular_values(r)) sum += sv;
  return {sum, sum > 1.0 + 1e-9};
}

bool majorization_check(const DensityMatrix& rho, std::size_t part) {
  const auto whole = descending_spectrum(rho.mat);
  const auto marg = descending_spectrum(partial_trace(rho.mat, rho.dims, {part}));
  double cw = 0.0, cm = 0.0;
  for (std::size_t k = 0; k < whole.size(); ++k) {
    cw += whole[k];
    cm += k < marg.size() ? marg[k] : 0.0;
    if (cw > cm + 1e-9) return false;
  }
  return true;
}

double fidelity(const DensityMatrix& r1, const DensityMatrix& r2) {
  if (r1.dims != r2.dims) throw std::invalid_argument("dimension mismatch");
  const CMatrix s = psd_sqrt(r1.mat);
  const CMatrix inner = s * r2.mat * s;
  const auto eig = hermitian_eig(inner);
  double lmax = 0.0;
  for (const double lam : eig.values) lmax = std::max(lmax, lam);
  // eigenvalues at the noise floor of the two preceding factorizations would
  // contribute sqrt(noise) each; drop them
  const double cutoff = lmax * 1e-12;
  double acc = 0.0;
  for (const double lam : eig.values)
    if (lam > cutoff) acc += std::sqrt(lam);
  return acc * acc;
}

double concurrence_sq(const PureState& psi, int l) {
  require_three_qubits(psi.dims);
  if (l < 1 || l > 3) throw std::invalid_argument("cut index must be 1..3");
  const CMatrix marg =
      partial_trace(psi.density(), psi.dims, {static_cast<std::size_t>(l - 1)});
  return (1.0 - hs_inner(marg, marg).real()) / 2.0;
}

double g_pauli(const CMatrix& rho, int l) {
  if (rho.rows() != 8) throw std::invalid_argument("three-qubit state expected");
  if (l < 1 || l > 3) throw std::invalid_argument("cut index must be 1..3");
  const int a = l - 1;
  const int b = a == 0 ? 1 : 0;
  const int c = a == 2 ? 1 : 2;
  auto ex = [&rho](std::initializer_list<std::pair<int, int>> factors) {
    std::vector<int> axes(3, 0);
    for (const auto& [q, axis] : factors) axes[q] = axis;
    const double e = expectation(rho, pauli_word(axes));
    return e * e;
  };
  double g = 3.0;
  g -= ex({{b, 3}}) + ex({{c, 3}}) + 3.0 * ex({{a, 3}});
  g += ex({{a, 3}, {b, 3}}) + ex({{a, 3}, {c, 3}}) - ex({{b, 3}, {c, 3}});
  g += ex({{a, 3}, {b, 3}, {c, 3}});
  for (const int p : {1, 2}) {
    g -= 3.0 * ex({{a, p}});
    g += ex({{a, p}, {b, 3}}) + ex({{a, p}, {c, 3}}) + ex({{a, p}, {b, 3}, {c, 3}});
  }
  return g / 16.0;
}

double three_tangle(const PureState& psi) {
  require_three_qubits(psi.dims);
  auto a = [&psi](int i, int j, int k) { return amp_at(psi, i, j, k); };
  const cplx d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
                  a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                  a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
                  a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  const cplx d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
                  a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                  a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
                  a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                  a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
                  a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
  const cplx d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                  a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

DiscordResult discord(const DensityMatrix& rho, std::size_t measured) {
  require_bipartite(rho);
  if (rho.dims != std::vector<std::size_t>{2, 2})
    throw std::invalid_argument("two-qubit state expected");
  if (measured > 1) throw std::out_of_range("measured side must be 0 or 1");
  const std::size_t other = 1 - measured;
  const double s_ab = entropy_bits(rho.mat);
  const double s_m = entropy_bits(partial_trace(rho.mat, rho.dims, {measured}));
  const double s_o = entropy_bits(partial_trace(rho.mat, rho.dims, {other}));

  const int n = 64;
  struct Cell {
    double t, p, f;
  };
  std::vector<Cell> cells;
  cells.reserve(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double t = (i + 0.5) * M_PI / n;
      const double p = (j + 0.5) * 2.0 * M_PI / n;
      cells.push_back({t, p, conditional_entropy(rho.mat, measured, t, p)});
    }
  std::partial_sort(cells.begin(), cells.begin() + 3, cells.end(),
                    [](const Cell& a, const Cell& b) { return a.f < b.f; });
  NmPoint best{cells[0].t, cells[0].p, cells[0].f};
  for (int k = 0; k < 3; ++k) {
    const NmPoint r =
        nelder_mead(rho.mat, measured, cells[k].t, cells[k].p, M_PI / 128.0);
    if (r.f < best.f) best = r;
  }

  DiscordResult out;
  out.theta_opt = best.t;
  out.phi_opt = best.p;
  out.mutual_info = s_m + s_o - s_ab;
  out.classical_corr = s_o - best.f;
  out.discord = s_m - s_ab + best.f;
  return out;
}

}  // namespace qcorr
