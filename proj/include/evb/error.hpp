#pragma once

#include <stdexcept>
#include <string>

namespace evb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in spaces of different dimension.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be invertible is not.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid input data (bad filtration, non-primitive ray, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace evb
