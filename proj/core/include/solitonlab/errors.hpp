// Copyright (c) the soliton-lab developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef SOLITONLAB_ERRORS_HPP
#define SOLITONLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace soliton {

// Base class for all library failures.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched grids or vector sizes in a binary operation.
struct DimensionError : Error {
  using Error::Error;
};

// A model rejected by validation (bad nonlinearity/potential, empty
// admissible interval, non-finite evaluation).
struct InvalidModelError : Error {
  using Error::Error;
};

// Iterative solver did not reach its tolerance.
struct NoConvergenceError : Error {
  NoConvergenceError(const std::string& what, double last_residual)
      : Error(what), last_residual(last_residual) {}
  double last_residual = 0.0;
};

// Linear system hit an eigenvalue of the operator.
struct SingularSystemError : Error {
  SingularSystemError(const std::string& what, double nearest_eigenvalue)
      : Error(what), nearest_eigenvalue(nearest_eigenvalue) {}
  double nearest_eigenvalue = 0.0;
};

// epsilon*(N+1) sits on the threshold lambda within tolerance.
struct DegenerateThresholdError : Error {
  using Error::Error;
};

// Biorthogonal pairing too close to singular to build a projection.
struct ConditioningError : Error {
  using Error::Error;
};

// Field left the trust region of the soliton manifold.
struct DecompositionLostError : Error {
  using Error::Error;
};

// sup|psi| exceeded the blow-up guard during evolution.
struct BlowUpError : Error {
  BlowUpError(const std::string& what, double time) : Error(what), time(time) {}
  double time = 0.0;
};

// File or serialization failure.
struct IoError : Error {
  using Error::Error;
};

}  // namespace soliton

#endif  // SOLITONLAB_ERRORS_HPP
