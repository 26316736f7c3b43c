// Copyright (c) annulus-toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace annulus {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix required to be hermitian was not, beyond tolerance.
class NotHermitianError : public Error {
 public:
  using Error::Error;
};

/// A hermitian form required to be positive semidefinite had a negative
/// eigenvalue below the clipping window.
class NotPsdError : public Error {
 public:
  NotPsdError(const std::string& msg, double min_eigenvalue)
      : Error(msg), min_eigenvalue(min_eigenvalue) {}
  double min_eigenvalue = 0.0;
};

/// An iterative computation failed to reach its tolerance.
class NoConvergenceError : public Error {
 public:
  NoConvergenceError(const std::string& msg, int iterations, double residual)
      : Error(msg), iterations(iterations), residual(residual) {}
  int iterations = 0;
  double residual = 0.0;
};

/// A matrix that must be inverted is singular or too ill-conditioned.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// Operands have incompatible dimensions.
class DimMismatchError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or JSON document.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace annulus
