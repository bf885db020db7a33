#pragma once

#include <stdexcept>
#include <string>

namespace fracplap {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters or configuration, rejected before any computation.
class ConfigError : public Error {
public:
  using Error::Error;
};

/// A theorem hypothesis fails at the requested point (e.g. degenerate
/// gradient in the small-p regime). Evaluators refuse rather than guess.
class HypothesisError : public Error {
public:
  using Error::Error;
};

/// Quadrature or extrapolation did not reach the requested tolerance.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

/// The integral is genuinely divergent (non-integrable singularity,
/// or discrete weights with delta = 0 and sp >= 2).
class DivergenceError : public Error {
public:
  using Error::Error;
};

} // namespace fracplap
