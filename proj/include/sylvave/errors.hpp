#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sylvave {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shapes do not conform (non-square where square is required, mismatched
/// multiplication, wrong vector length, ...).
struct DimensionError : Error {
  using Error::Error;
};

/// A linear solve met a pivot below tolerance; carries the pivot index.
struct SingularMatrixError : Error {
  std::size_t pivot_index;
  SingularMatrixError(const std::string& what, std::size_t pivot)
      : Error(what), pivot_index(pivot) {}
};

/// A configured size cap (Kronecker result, flattening, enumeration) was
/// exceeded.
struct SizeCapError : Error {
  using Error::Error;
};

/// An iterative estimate failed to converge; carries the last estimate.
struct ConvergenceError : Error {
  double last_estimate;
  ConvergenceError(const std::string& what, double estimate)
      : Error(what), last_estimate(estimate) {}
};

/// An input violates a documented operation contract.
struct ContractViolationError : Error {
  using Error::Error;
};

/// Random instance generation could not satisfy the requested constraints.
struct GenerationError : Error {
  using Error::Error;
};

/// File or JSON level problem while reading or writing instances.
struct IoError : Error {
  using Error::Error;
};

}  // namespace sylvave
