#pragma once

#include <stdexcept>
#include <string>

namespace hankelscope {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied input outside the documented domain (bad coefficients,
/// non-positive t0, non-finite samples, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested order/size exceeds what the numerics are validated for.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A discretization could not be assembled consistently (asymmetry above
/// threshold, rank-deficient constraints, non-finite matrix entries).
class DiscretizationError : public Error {
 public:
  using Error::Error;
};

/// Eigensolver or iterative procedure failed to converge, or produced
/// output that violates its acceptance checks.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace hankelscope
