#ifndef RAINBOWDKP_ERRORS_HPP
#define RAINBOWDKP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rdkp {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of an operation
// (rainbow-function pole, negative radicand, coordinate singularity).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Parameter outside its admissible range (alpha, mass, indices, ...).
class RangeError : public Error {
 public:
  using Error::Error;
};

// Iterative evaluation failed to converge within its budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Root bracketing found no sign change.
class NoSignChangeError : public Error {
 public:
  using Error::Error;
};

// Requested state is not physical (negative radicand, beyond cutoff, ...).
class UnphysicalError : public Error {
 public:
  using Error::Error;
};

// Grid resolution insufficient for the requested accuracy.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

// Sweep/figure configuration is invalid.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// File I/O failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace rdkp

#endif
