#pragma once

#include <stdexcept>
#include <string>

namespace esdg {

/// Base class of every error raised by the solver library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A velocity with |u| >= 1 was supplied.
class SuperluminalError : public Error {
 public:
  using Error::Error;
};

/// A state lies outside the admissible set (nonpositive density or pressure,
/// or E <= sqrt(D^2 + |m|^2)).
class InadmissibleStateError : public Error {
 public:
  using Error::Error;
};

/// An iterative solve did not converge within its iteration cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument: out-of-range index, unsupported degree, size mismatch.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Configuration text could not be parsed or failed validation.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace esdg
