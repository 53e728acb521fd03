#pragma once
// Dense row-major complex matrix, sized for small quantum-information workloads
// (dimensions up to 64). No external linear-algebra dependency.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace qcorr {

using cplx = std::complex<double>;

class CMatrix {
public:
  CMatrix() = default;
  CMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}
  CMatrix(std::size_t r, std::size_t c, std::initializer_list<cplx> vals)
      : rows_(r), cols_(c), a_(vals) {
    if (a_.size() != r * c) throw std::invalid_argument("CMatrix: bad init size");
  }

  static CMatrix zero(std::size_t r, std::size_t c) { return CMatrix(r, c); }
  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
  static CMatrix diag(const std::vector<double>& d) {
    CMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  const std::vector<cplx>& data() const { return a_; }

  CMatrix& operator+=(const CMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  CMatrix& operator-=(const CMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  CMatrix& operator*=(cplx s) {
    for (auto& v : a_) v *= s;
    return *this;
  }

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
  friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("CMatrix: shape mismatch in product");
    CMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx(0.0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  CMatrix dagger() const {
    CMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
  }
  CMatrix transpose() const {
    CMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  cplx trace() const {
    require_square();
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  bool is_hermitian(double tol = 1e-12) const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i; j < cols_; ++j)
        if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
  }

  void require_square() const {
    if (rows_ != cols_) throw std::invalid_argument("CMatrix: square matrix required");
  }

private:
  void check_same(const CMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("CMatrix: shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> a_;
};

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  CMatrix d = a;
  d -= b;
  return d.max_abs();
}

// Hilbert-Schmidt pairing Tr(A^dag B), the workhorse for expectations.
inline cplx hs_inner(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("hs_inner: shape mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::conj(a(i, j)) * b(i, j);
  return s;
}

// Real expectation value Tr(rho O) for Hermitian O against a density matrix.
inline double expectation(const CMatrix& rho, const CMatrix& op) {
  if (rho.rows() != op.cols() || rho.cols() != op.rows())
    throw std::invalid_argument("expectation: shape mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < rho.rows(); ++i)
    for (std::size_t j = 0; j < rho.cols(); ++j) s += rho(i, j) * op(j, i);
  return s.real();
}

}  // namespace qcorr
