#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "sylvave/errors.hpp"

namespace sylvave {

/// Dense real matrix with row-major storage. Entries are validated to be
/// finite at construction; any NaN or infinity is rejected.
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
    require_positive(rows, cols);
  }

  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    require_positive(rows, cols);
    if (data_.size() != rows_ * cols_) {
      throw DimensionError("matrix entry count " + std::to_string(data_.size()) +
                           " does not match " + std::to_string(rows_) + "x" +
                           std::to_string(cols_));
    }
    for (double v : data_) {
      if (!std::isfinite(v)) {
        throw ContractViolationError("matrix entries must be finite");
      }
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<double> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw DimensionError("ragged row list");
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(entries));
  }

  /// Column vector from a flat list.
  static Matrix column(std::vector<double> entries) {
    std::size_t n = entries.size();
    return Matrix(n, 1, std::move(entries));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool is_square() const { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  double frobenius_norm() const {
    double acc = 0.0;
    for (double v : data_) acc += v * v;
    return std::sqrt(acc);
  }

  double max_abs() const {
    double acc = 0.0;
    for (double v : data_) acc = std::max(acc, std::abs(v));
    return acc;
  }

 private:
  void require_positive(std::size_t rows, std::size_t cols) const {
    if (rows == 0 || cols == 0) {
      throw DimensionError("matrix dimensions must be positive");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

inline void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shapes " + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                         " differ");
  }
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "matrix addition");
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.data()[i] + b.data()[i];
  return Matrix(a.rows(), a.cols(), std::move(out));
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "matrix subtraction");
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.data()[i] - b.data()[i];
  return Matrix(a.rows(), a.cols(), std::move(out));
}

inline Matrix operator-(const Matrix& a) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -a.data()[i];
  return Matrix(a.rows(), a.cols(), std::move(out));
}

inline Matrix operator*(double s, const Matrix& a) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * a.data()[i];
  return Matrix(a.rows(), a.cols(), std::move(out));
}

inline Matrix operator*(const Matrix& a, double s) { return s * a; }

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product: inner dimensions " +
                         std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + " differ");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  for (double v : out.data()) {
    if (!std::isfinite(v)) {
      throw ContractViolationError("matrix product overflowed to non-finite values");
    }
  }
  return out;
}

/// Entrywise absolute value |m|.
inline Matrix entrywise_abs(const Matrix& m) {
  std::vector<double> out(m.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::abs(m.data()[i]);
  return Matrix(m.rows(), m.cols(), std::move(out));
}

}  // namespace sylvave
