#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "sylvave/matrix.hpp"

namespace sylvave {

/// Pivots with magnitude below kPivotTol times the largest absolute entry of
/// the input are treated as singular.
inline constexpr double kPivotTol = 1e-13;

/// Determinants whose magnitude falls below kDetBandTol times the product of
/// row max-norms are "singular within tolerance": no sign is claimed for them.
inline constexpr double kDetBandTol = 1e-12;

/// Partial-pivoting LU factorization, P*A = L*U, packed into one matrix
/// (unit lower triangle below the diagonal, U on and above it).
struct LuFactorization {
  Matrix factors;
  std::vector<std::size_t> perm;  // row i of P*A is row perm[i] of A
  int sign = 1;                   // permutation parity
  bool singular = false;          // some pivot below kPivotTol * scale
  bool exact_zero_pivot = false;  // some pivot exactly zero
  std::size_t first_bad_pivot = 0;
  double scale = 0.0;             // largest absolute entry of the input
};

inline LuFactorization lu_factor(const Matrix& m) {
  if (!m.is_square()) {
    throw DimensionError("lu_factor: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
  }
  const std::size_t n = m.rows();
  LuFactorization lu{m, std::vector<std::size_t>(n), 1, false, false, 0, m.max_abs()};
  std::iota(lu.perm.begin(), lu.perm.end(), std::size_t{0});
  Matrix& a = lu.factors;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot_row = col;
    double pivot_abs = std::abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(a(r, col));
      if (v > pivot_abs) {
        pivot_abs = v;
        pivot_row = r;
      }
    }
    if (lu.scale == 0.0 || pivot_abs < kPivotTol * lu.scale) {
      lu.singular = true;
      lu.exact_zero_pivot = pivot_abs == 0.0;
      lu.first_bad_pivot = col;
      return lu;
    }
    if (pivot_row != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot_row, j));
      std::swap(lu.perm[col], lu.perm[pivot_row]);
      lu.sign = -lu.sign;
    }
    const double inv_pivot = 1.0 / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double l = a(r, col) * inv_pivot;
      a(r, col) = l;
      if (l == 0.0) continue;
      for (std::size_t j = col + 1; j < n; ++j) a(r, j) -= l * a(col, j);
    }
  }
  return lu;
}

/// Determinant from a factorization: product of pivots times permutation sign,
/// exactly 0.0 when the factorization is singular.
inline double det(const LuFactorization& lu) {
  if (lu.singular) return 0.0;
  double d = static_cast<double>(lu.sign);
  for (std::size_t i = 0; i < lu.factors.rows(); ++i) d *= lu.factors(i, i);
  return d;
}

inline double det(const Matrix& m) { return det(lu_factor(m)); }

/// Determinant with a confidence class. CONFIDENT carries a trustworthy sign;
/// ZERO means an exactly singular matrix was detected; AMBIGUOUS means the
/// value sits in the singular-within-tolerance band and its sign is not
/// claimed.
struct ClassifiedDet {
  enum class Confidence { CONFIDENT, AMBIGUOUS, ZERO };
  double value = 0.0;
  Confidence confidence = Confidence::ZERO;

  bool confident_sign() const { return confidence == Confidence::CONFIDENT; }
};

inline double row_max_norm_product(const Matrix& m) {
  double prod = 1.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double row_max = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      row_max = std::max(row_max, std::abs(m(i, j)));
    prod *= row_max;
  }
  return prod;
}

inline ClassifiedDet det_classified(const Matrix& m) {
  const LuFactorization lu = lu_factor(m);
  ClassifiedDet out;
  out.value = det(lu);
  if (lu.singular) {
    out.confidence = lu.exact_zero_pivot ? ClassifiedDet::Confidence::ZERO
                                         : ClassifiedDet::Confidence::AMBIGUOUS;
    return out;
  }
  const double band = kDetBandTol * row_max_norm_product(m);
  out.confidence = std::abs(out.value) <= band ? ClassifiedDet::Confidence::AMBIGUOUS
                                               : ClassifiedDet::Confidence::CONFIDENT;
  return out;
}

/// Solves m*Z = rhs column by column using a precomputed factorization.
inline Matrix solve(const LuFactorization& lu, const Matrix& rhs) {
  const std::size_t n = lu.factors.rows();
  if (rhs.rows() != n) {
    throw DimensionError("solve: rhs has " + std::to_string(rhs.rows()) +
                         " rows, expected " + std::to_string(n));
  }
  if (lu.singular) {
    throw SingularMatrixError(
        "solve: matrix is singular at pivot " + std::to_string(lu.first_bad_pivot),
        lu.first_bad_pivot);
  }
  Matrix z(n, rhs.cols());
  for (std::size_t c = 0; c < rhs.cols(); ++c) {
    // forward substitution on the permuted right-hand side
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      double acc = rhs(lu.perm[i], c);
      for (std::size_t j = 0; j < i; ++j) acc -= lu.factors(i, j) * y[j];
      y[i] = acc;
    }
    for (std::size_t ii = n; ii-- > 0;) {
      double acc = y[ii];
      for (std::size_t j = ii + 1; j < n; ++j) acc -= lu.factors(ii, j) * z(j, c);
      z(ii, c) = acc / lu.factors(ii, ii);
    }
  }
  return z;
}

inline Matrix solve(const Matrix& m, const Matrix& rhs) {
  return solve(lu_factor(m), rhs);
}

/// Principal submatrix on the given (sorted, distinct) index set.
inline Matrix principal_submatrix(const Matrix& m, const std::vector<std::size_t>& idx) {
  Matrix out(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = m(idx[i], idx[j]);
  return out;
}

}  // namespace sylvave
