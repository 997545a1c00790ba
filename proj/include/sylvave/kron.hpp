#pragma once

#include <cstddef>
#include <string>

#include "sylvave/matrix.hpp"

namespace sylvave {

/// Default cap on the number of entries a Kronecker product may allocate.
inline constexpr std::size_t kKronEntryCap = std::size_t{1} << 24;

/// Kronecker product: block (i,j) of the result is a(i,j) * b.
inline Matrix kron(const Matrix& a, const Matrix& b,
                   std::size_t entry_cap = kKronEntryCap) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows == 0 || cols == 0 || rows > entry_cap / cols) {
    throw SizeCapError("kron: result " + std::to_string(a.rows() * b.rows()) + "x" +
                       std::to_string(a.cols() * b.cols()) + " exceeds entry cap " +
                       std::to_string(entry_cap));
  }
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double s = a(i, j);
      if (s == 0.0) continue;
      for (std::size_t bi = 0; bi < b.rows(); ++bi)
        for (std::size_t bj = 0; bj < b.cols(); ++bj)
          out(i * b.rows() + bi, j * b.cols() + bj) = s * b(bi, bj);
    }
  }
  return out;
}

/// Column-stacking vec operator: columns of m concatenated top to bottom.
inline Matrix vec(const Matrix& m) {
  Matrix out(m.rows() * m.cols(), 1);
  std::size_t idx = 0;
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out(idx++, 0) = m(i, j);
  return out;
}

/// Inverse of vec: reshapes a column vector back into rows x cols.
inline Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
  if (v.cols() != 1 || v.rows() != rows * cols) {
    throw DimensionError("unvec: vector of length " + std::to_string(v.rows()) +
                         " (cols " + std::to_string(v.cols()) +
                         ") cannot fill " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
  Matrix out(rows, cols);
  std::size_t idx = 0;
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = v(idx++, 0);
  return out;
}

}  // namespace sylvave
