#pragma once

#include <stdexcept>
#include <string>

namespace ergodyn {

// Invalid user input: configuration fields, occupations, partitions.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Truncated Hilbert space larger than the configured dimension cap.
class SizingError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Eigensolver failure, degenerate spectrum, integrator drift, bad grids.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateSpectrumError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Two exact evaluation routes disagree beyond tolerance.
class EngineDisagreement : public std::runtime_error {
 public:
  EngineDisagreement(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace ergodyn
