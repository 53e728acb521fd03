#include "qcorr/tensor.h"

#include <stdexcept>

namespace qcorr {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return c;
}

CMatrix kron(const CMatrix& a, const CMatrix& b, const CMatrix& c) {
  return kron(kron(a, b), c);
}

namespace {

std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) s[k - 1] = s[k] * dims[k];
  return s;
}

}  // namespace

CMatrix partial_trace(const CMatrix& rho, const std::vector<std::size_t>& dims,
                      const std::vector<std::size_t>& keep) {
  rho.require_square();
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  if (total != rho.rows()) throw std::invalid_argument("partial_trace: dims mismatch");
  for (std::size_t k = 1; k < keep.size(); ++k)
    if (keep[k] <= keep[k - 1]) throw std::invalid_argument("partial_trace: keep not increasing");

  std::vector<std::size_t> traced;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    bool kept = false;
    for (auto kk : keep) kept = kept || (kk == k);
    if (!kept) traced.push_back(k);
  }
  const auto stride = strides_of(dims);

  std::size_t dkeep = 1, dtr = 1;
  for (auto k : keep) dkeep *= dims[k];
  for (auto k : traced) dtr *= dims[k];

  auto unpack = [&](std::size_t flat, const std::vector<std::size_t>& subs) {
    // flat index over the listed subsystems -> contribution to the full index
    std::size_t full = 0;
    for (std::size_t k = subs.size(); k-- > 0;) {
      const std::size_t d = dims[subs[k]];
      full += (flat % d) * stride[subs[k]];
      flat /= d;
    }
    return full;
  };

  CMatrix out(dkeep, dkeep);
  for (std::size_t i = 0; i < dkeep; ++i)
    for (std::size_t j = 0; j < dkeep; ++j) {
      const std::size_t ri = unpack(i, keep), rj = unpack(j, keep);
      cplx s = 0.0;
      for (std::size_t t = 0; t < dtr; ++t) {
        const std::size_t rt = unpack(t, traced);
        s += rho(ri + rt, rj + rt);
      }
      out(i, j) = s;
    }
  return out;
}

CMatrix partial_transpose(const CMatrix& rho, const std::vector<std::size_t>& dims,
                          std::size_t sys) {
  rho.require_square();
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  if (total != rho.rows()) throw std::invalid_argument("partial_transpose: dims mismatch");
  if (sys >= dims.size()) throw std::invalid_argument("partial_transpose: bad subsystem");

  const auto stride = strides_of(dims);
  const std::size_t ds = dims[sys], ss = stride[sys];

  CMatrix out(total, total);
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t is = (i / ss) % ds;
    const std::size_t ibase = i - is * ss;
    for (std::size_t j = 0; j < total; ++j) {
      const std::size_t js = (j / ss) % ds;
      const std::size_t jbase = j - js * ss;
      out(ibase + js * ss, jbase + is * ss) = rho(i, j);
    }
  }
  return out;
}

CMatrix realignment(const CMatrix& rho, std::size_t da, std::size_t db) {
  rho.require_square();
  if (da * db != rho.rows()) throw std::invalid_argument("realignment: dims mismatch");
  CMatrix r(da * da, db * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l)
          r(i * da + j, k * db + l) = rho(i * db + k, j * db + l);
  return r;
}

const CMatrix& pauli(int k) {
  static const CMatrix p[4] = {
      CMatrix(2, 2, {1, 0, 0, 1}),
      CMatrix(2, 2, {0, 1, 1, 0}),
      CMatrix(2, 2, {0, cplx(0, -1), cplx(0, 1), 0}),
      CMatrix(2, 2, {1, 0, 0, -1}),
  };
  if (k < 0 || k > 3) throw std::invalid_argument("pauli: index 0..3");
  return p[k];
}

CMatrix pauli_word(const std::vector<int>& axes) {
  if (axes.empty()) throw std::invalid_argument("pauli_word: empty");
  CMatrix w = pauli(axes[0]);
  for (std::size_t k = 1; k < axes.size(); ++k) w = kron(w, pauli(axes[k]));
  return w;
}

const CMatrix& gell_mann(int j) {
  static const double r3 = std::sqrt(3.0);
  static const CMatrix g[8] = {
      CMatrix(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 0}),
      CMatrix(3, 3, {0, cplx(0, -1), 0, cplx(0, 1), 0, 0, 0, 0, 0}),
      CMatrix(3, 3, {1, 0, 0, 0, -1, 0, 0, 0, 0}),
      CMatrix(3, 3, {0, 0, 1, 0, 0, 0, 1, 0, 0}),
      CMatrix(3, 3, {0, 0, cplx(0, -1), 0, 0, 0, cplx(0, 1), 0, 0}),
      CMatrix(3, 3, {0, 0, 0, 0, 0, 1, 0, 1, 0}),
      CMatrix(3, 3, {0, 0, 0, 0, 0, cplx(0, -1), 0, cplx(0, 1), 0}),
      CMatrix(3, 3, {1.0 / r3, 0, 0, 0, 1.0 / r3, 0, 0, 0, -2.0 / r3}),
  };
  if (j < 1 || j > 8) throw std::invalid_argument("gell_mann: index 1..8");
  return g[j - 1];
}

CMatrix ket(std::size_t idx, std::size_t dim) {
  if (idx >= dim) throw std::invalid_argument("ket: index out of range");
  CMatrix v(dim, 1);
  v(idx, 0) = 1.0;
  return v;
}

CMatrix outer(const CMatrix& v) {
  if (v.cols() != 1) throw std::invalid_argument("outer: column vector required");
  CMatrix m(v.rows(), v.rows());
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t j = 0; j < v.rows(); ++j) m(i, j) = v(i, 0) * std::conj(v(j, 0));
  return m;
}

CMatrix normalized(const CMatrix& v) {
  if (v.cols() != 1) throw std::invalid_argument("normalized: column vector required");
  const double n = v.frobenius_norm();
  if (n == 0.0) throw std::invalid_argument("normalized: zero vector");
  CMatrix out = v;
  out *= cplx(1.0 / n);
  return out;
}

CMatrix embed_qubit_op(const CMatrix& op, std::size_t qubit, std::size_t n_qubits) {
  if (op.rows() != 2 || op.cols() != 2) throw std::invalid_argument("embed_qubit_op: 2x2 required");
  if (qubit >= n_qubits) throw std::invalid_argument("embed_qubit_op: bad qubit");
  CMatrix out = (qubit == 0) ? op : CMatrix::identity(2);
  for (std::size_t q = 1; q < n_qubits; ++q)
    out = kron(out, (q == qubit) ? op : CMatrix::identity(2));
  return out;
}

}  // namespace qcorr
