#include "qcorr/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qcorr {

namespace {

// Cyclic Jacobi for a dense real symmetric matrix. Eigenvectors accumulate in
// v (columns); s is overwritten. Sweeps until the off-diagonal Frobenius mass
// falls below tol_rel * ||S||_F.
void jacobi_real_sym(std::vector<double>& s, std::vector<double>& v, std::size_t n,
                     double tol_rel) {
  auto at = [&](std::vector<double>& m, std::size_t i, std::size_t j) -> double& {
    return m[i * n + j];
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v[i * n + j] = (i == j) ? 1.0 : 0.0;

  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) total += s[i * n + j] * s[i * n + j];
  const double fro = std::sqrt(total);
  if (fro == 0.0) return;
  const double stop = tol_rel * fro;

  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * at(s, i, j) * at(s, i, j);
    if (std::sqrt(off) <= stop) return;

    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(s, p, q);
        if (std::abs(apq) <= stop / n) continue;
        const double app = at(s, p, p), aqq = at(s, q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double skp = at(s, k, p), skq = at(s, k, q);
          at(s, k, p) = c * skp - sn * skq;
          at(s, k, q) = sn * skp + c * skq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double spk = at(s, p, k), sqk = at(s, q, k);
          at(s, p, k) = c * spk - sn * sqk;
          at(s, q, k) = sn * spk + c * sqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = c * vkp - sn * vkq;
          v[k * n + q] = sn * vkp + c * vkq;
        }
      }
  }
}

}  // namespace

EigResult hermitian_eig(const CMatrix& h) {
  h.require_square();
  const std::size_t n = h.rows();
  const double scale = std::max(1.0, h.max_abs());
  if (!h.is_hermitian(1e-10 * scale))
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");

  // Embed H = A + iB as the 2n x 2n real symmetric [[A, -B], [B, A]]; each
  // eigenvalue of H appears twice, with real eigenvector pairs (x;y), (-y;x).
  const std::size_t m = 2 * n;
  std::vector<double> s(m * m, 0.0), v(m * m, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double re = h(i, j).real(), im = h(i, j).imag();
      s[i * m + j] = re;
      s[(i + n) * m + (j + n)] = re;
      s[i * m + (j + n)] = -im;
      s[(i + n) * m + j] = im;
    }
  jacobi_real_sym(s, v, m, 1e-13);

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return s[a * m + a] < s[b * m + b]; });

  // Collapse the doubled spectrum: walk candidates in ascending order, form
  // the complex vector z = x + iy, Gram-Schmidt against accepted vectors of
  // (numerically) equal eigenvalue, and keep the n independent survivors.
  EigResult out;
  out.vectors = CMatrix(n, n);
  const double gtol = 1e-7 * std::max(1.0, std::abs(s[order.back() * m + order.back()]));
  std::size_t accepted = 0;
  for (std::size_t c = 0; c < m && accepted < n; ++c) {
    const std::size_t col = order[c];
    const double lam = s[col * m + col];
    std::vector<cplx> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = cplx(v[i * m + col], v[(i + n) * m + col]);

    for (std::size_t a = 0; a < accepted; ++a) {
      if (std::abs(out.values[a] - lam) > gtol) continue;
      cplx ip = 0.0;
      for (std::size_t i = 0; i < n; ++i) ip += std::conj(out.vectors(i, a)) * z[i];
      for (std::size_t i = 0; i < n; ++i) z[i] -= ip * out.vectors(i, a);
    }
    double nz = 0.0;
    for (const auto& zi : z) nz += std::norm(zi);
    nz = std::sqrt(nz);
    if (nz < 0.1) continue;
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, accepted) = z[i] / nz;
    out.values.push_back(lam);
    ++accepted;
  }
  if (accepted != n) throw std::runtime_error("hermitian_eig: eigenvector selection failed");
  return out;
}

std::vector<double> singular_values(const CMatrix& a) {
  const CMatrix gram = a.dagger() * a;
  EigResult e = hermitian_eig(gram);
  // Gram eigenvalues at the eigensolver's noise floor would turn into
  // sqrt(noise)-sized singular values; zero them instead.
  double gmax = 0.0;
  for (double lam : e.values) gmax = std::max(gmax, lam);
  const double cutoff = gmax * 1e-12;
  std::vector<double> sv;
  sv.reserve(e.values.size());
  for (auto it = e.values.rbegin(); it != e.values.rend(); ++it)
    sv.push_back(*it > cutoff ? std::sqrt(*it) : 0.0);
  return sv;
}

double trace_norm(const CMatrix& a) {
  const auto sv = singular_values(a);
  double t = 0.0;
  for (double s : sv) t += s;
  return t;
}

CMatrix psd_sqrt(const CMatrix& h) {
  EigResult e = hermitian_eig(h);
  const std::size_t n = h.rows();
  std::vector<double> r(n);
  for (std::size_t k = 0; k < n; ++k) {
    double lam = e.values[k];
    if (lam < -1e-9) throw std::invalid_argument("psd_sqrt: matrix is not PSD");
    if (lam < 0.0) lam = 0.0;
    r[k] = std::sqrt(lam);
  }
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        s += e.vectors(i, k) * r[k] * std::conj(e.vectors(j, k));
      out(i, j) = s;
    }
  return out;
}

bool cholesky_pd(const CMatrix& h, CMatrix* lower) {
  h.require_square();
  const std::size_t n = h.rows();
  CMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    cplx diag = h(j, j);
    for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * std::conj(l(j, k));
    const double d = diag.real();
    if (d <= 0.0 || std::abs(diag.imag()) > 1e-9 * std::max(1.0, std::abs(d))) return false;
    const double rd = std::sqrt(d);
    l(j, j) = rd;
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx s = h(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / rd;
    }
  }
  if (lower) *lower = l;
  return true;
}

bool solve_real_linear(std::vector<double>& a, std::vector<double>& b, std::size_t n) {
  if (a.size() != n * n || b.size() != n)
    throw std::invalid_argument("solve_real_linear: bad sizes");
  std::vector<std::size_t> piv(n);
  std::iota(piv.begin(), piv.end(), 0);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    double bestv = std::abs(a[piv[col] * n + col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(a[piv[r] * n + col]);
      if (v > bestv) {
        best = r;
        bestv = v;
      }
    }
    if (bestv < 1e-300) return false;
    std::swap(piv[col], piv[best]);
    const double pivval = a[piv[col] * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[piv[r] * n + col] / pivval;
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[piv[r] * n + c] -= f * a[piv[col] * n + c];
      b[piv[r]] -= f * b[piv[col]];
    }
  }
  std::vector<double> x(n);
  for (std::size_t r = n; r-- > 0;) {
    double s = b[piv[r]];
    for (std::size_t c = r + 1; c < n; ++c) s -= a[piv[r] * n + c] * x[c];
    x[r] = s / a[piv[r] * n + r];
  }
  b = x;
  return true;
}

}  // namespace qcorr
