#pragma once

#include <stdexcept>
#include <string>

namespace esfp {

/// Base class for every failure raised by the solver.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

class DegenerateEnsemble : public Error {
 public:
  using Error::Error;
};

class InvalidSpectrum : public Error {
 public:
  using Error::Error;
};

class StabilityViolation : public Error {
 public:
  using Error::Error;
};

class DegenerateFit : public Error {
 public:
  using Error::Error;
};

/// The log-deviation of a tracked quantity changed sign inside a fit window.
class SignChange : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace esfp
