#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "sylvave/matrix.hpp"

namespace sylvave {

/// Largest and smallest of the min(rows, cols) singular values.
struct SingularExtremes {
  double sigma_max = 0.0;
  double sigma_min = 0.0;
};

/// All singular values in descending order, computed by one-sided Jacobi
/// (Hestenes) rotations on the tall orientation of m. Column inner products
/// are annihilated pairwise until a full sweep changes nothing; the singular
/// values are then the column norms. Accurate to near machine precision,
/// including for small singular values.
inline std::vector<double> singular_values(const Matrix& m) {
  const Matrix w = m.rows() >= m.cols() ? m : m.transpose();
  const std::size_t rows = w.rows();
  const std::size_t n = w.cols();

  // column-major working copy
  std::vector<double> a(rows * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < rows; ++i) a[j * rows + i] = w(i, j);

  const double off_tol = 1e-15;
  const int max_sweeps = 60;
  bool rotated = true;
  for (int sweep = 0; sweep < max_sweeps && rotated; ++sweep) {
    rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double* cp = &a[p * rows];
        double* cq = &a[q * rows];
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
          alpha += cp[i] * cp[i];
          beta += cq[i] * cq[i];
          gamma += cp[i] * cq[i];
        }
        const double denom = std::sqrt(alpha * beta);
        if (denom == 0.0 || std::abs(gamma) <= off_tol * denom) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        for (std::size_t i = 0; i < rows; ++i) {
          const double vp = cp[i];
          const double vq = cq[i];
          cp[i] = cs * vp - sn * vq;
          cq[i] = sn * vp + cs * vq;
        }
      }
    }
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rows; ++i) acc += a[j * rows + i] * a[j * rows + i];
    sigma[j] = std::sqrt(acc);
  }
  std::sort(sigma.begin(), sigma.end(), std::greater<double>());
  return sigma;
}

inline SingularExtremes singular_extremes(const Matrix& m) {
  const std::vector<double> sigma = singular_values(m);
  return SingularExtremes{sigma.front(), sigma.back()};
}

}  // namespace sylvave
