#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adiawalk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments or malformed configuration.
class InputError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& what, double residual)
      : NumericalError(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class TrackingAmbiguityError : public NumericalError {
 public:
  TrackingAmbiguityError(const std::string& what, std::size_t step)
      : NumericalError(what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

class GapCollapseError : public NumericalError {
 public:
  GapCollapseError(const std::string& what, std::size_t step)
      : NumericalError(what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

// Raised when a step-size rule is asked for on a Hamiltonian with no gap.
class GaplessError : public Error {
 public:
  using Error::Error;
};

}  // namespace adiawalk
