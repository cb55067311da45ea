#pragma once

#include <stdexcept>
#include <string>

namespace poisson {

/// Base error for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated precondition (bad argument, invalid perturbation, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A functional, process or integrand produced a NaN or infinity.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

}  // namespace poisson
