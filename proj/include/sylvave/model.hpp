#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "sylvave/kron.hpp"
#include "sylvave/matrix.hpp"

namespace sylvave {

/// The matrix equation A*X*B - |C*X*D| = F with A,C of shape m x n,
/// B,D of shape p x q, F of shape m x q and unknown X of shape n x p.
struct SylvesterAveInstance {
  Matrix A, C;  // m x n
  Matrix B, D;  // p x q
  Matrix F;     // m x q

  SylvesterAveInstance(Matrix a, Matrix c, Matrix b, Matrix d, Matrix f)
      : A(std::move(a)), C(std::move(c)), B(std::move(b)), D(std::move(d)),
        F(std::move(f)) {
    require_same_shape(A, C, "instance: A and C");
    require_same_shape(B, D, "instance: B and D");
    if (F.rows() != A.rows() || F.cols() != B.cols()) {
      throw DimensionError("instance: F is " + std::to_string(F.rows()) + "x" +
                           std::to_string(F.cols()) + ", expected " +
                           std::to_string(A.rows()) + "x" + std::to_string(B.cols()));
    }
  }

  std::size_t m() const { return A.rows(); }
  std::size_t n() const { return A.cols(); }
  std::size_t p() const { return B.rows(); }
  std::size_t q() const { return B.cols(); }

  /// Rows (m*q) and columns (n*p) of the flattened system.
  std::size_t flattened_rows() const { return m() * q(); }
  std::size_t flattened_cols() const { return n() * p(); }
  bool square_flattened() const { return flattened_rows() == flattened_cols(); }
};

/// The flattened system S*x - |T*x| = f with S = B^T (x) A, T = D^T (x) C and
/// f = vec(F). square_flag records whether m*q equals n*p; only then can the
/// exact oracle run.
struct NgaveForm {
  Matrix S;
  Matrix T;
  Matrix f;  // column vector of length m*q
  bool square_flag = false;
};

/// Default cap on entries per flattened matrix produced by reformulate.
inline constexpr std::size_t kReformulateEntryCap = 65536;

inline NgaveForm reformulate(const SylvesterAveInstance& inst,
                             std::size_t entry_cap = kReformulateEntryCap) {
  const std::size_t rows = inst.flattened_rows();
  const std::size_t cols = inst.flattened_cols();
  if (rows > entry_cap / cols) {
    throw SizeCapError(
        "reformulate: flattened matrix would hold " + std::to_string(rows) + "x" +
        std::to_string(cols) + " entries, over the cap of " +
        std::to_string(entry_cap) + "; use the matrix-form operations instead");
  }
  NgaveForm form{kron(inst.B.transpose(), inst.A, entry_cap),
                 kron(inst.D.transpose(), inst.C, entry_cap), vec(inst.F),
                 rows == cols};
  return form;
}

/// Frobenius norm of A*X*B - |C*X*D| - F. Never materializes the flattened
/// matrices.
inline double residual(const SylvesterAveInstance& inst, const Matrix& X) {
  if (X.rows() != inst.n() || X.cols() != inst.p()) {
    throw DimensionError("residual: X is " + std::to_string(X.rows()) + "x" +
                         std::to_string(X.cols()) + ", expected " +
                         std::to_string(inst.n()) + "x" + std::to_string(inst.p()));
  }
  const Matrix r = inst.A * X * inst.B - entrywise_abs(inst.C * X * inst.D) - inst.F;
  return r.frobenius_norm();
}

/// Euclidean norm of S*x - |T*x| - f.
inline double ngave_residual(const NgaveForm& form, const Matrix& x) {
  if (x.cols() != 1 || x.rows() != form.S.cols()) {
    throw DimensionError("ngave_residual: x has length " + std::to_string(x.rows()) +
                         ", expected " + std::to_string(form.S.cols()));
  }
  const Matrix r = form.S * x - entrywise_abs(form.T * x) - form.f;
  return r.frobenius_norm();
}

}  // namespace sylvave
