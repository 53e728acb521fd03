#pragma once
// JSON round trip for matrices: {"rows", "cols", "re": [...], "im": [...]}
// in row-major order; a density matrix adds "dims". Malformed or
// inconsistent input throws std::invalid_argument.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "qcorr/complex_matrix.h"
#include "qcorr/states.h"

namespace qcorr {

inline nlohmann::json matrix_json(const CMatrix& m) {
  std::vector<double> re, im;
  re.reserve(m.rows() * m.cols());
  im.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      re.push_back(std::real(m(i, j)));
      im.push_back(std::imag(m(i, j)));
    }
  return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

inline CMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("re") ||
      !j.contains("im"))
    throw std::invalid_argument("matrix_from_json: need rows, cols, re, im");
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (re.size() != rows * cols || im.size() != rows * cols)
    throw std::invalid_argument("matrix_from_json: re/im length mismatch");
  CMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k)
      m(i, k) = cplx(re[i * cols + k], im[i * cols + k]);
  return m;
}

inline nlohmann::json density_json(const DensityMatrix& rho) {
  nlohmann::json j = matrix_json(rho.mat);
  j["dims"] = rho.dims;
  return j;
}

inline DensityMatrix density_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dims"))
    throw std::invalid_argument("density_from_json: need dims");
  DensityMatrix rho{j.at("dims").get<std::vector<std::size_t>>(), matrix_from_json(j)};
  std::size_t d = 1;
  for (std::size_t x : rho.dims) d *= x;
  if (rho.mat.rows() != rho.mat.cols() || rho.mat.rows() != d)
    throw std::invalid_argument("density_from_json: dims do not match matrix size");
  return rho;
}

}  // namespace qcorr
