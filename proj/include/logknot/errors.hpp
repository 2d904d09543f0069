#pragma once

#include <stdexcept>
#include <string>

namespace logknot {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument values (p < 2, s out of range, ...).
struct InvalidParameter : Error {
  using Error::Error;
};

// Division by an exact zero / numerically singular solve.
struct DivisionByZero : Error {
  using Error::Error;
};

// Braid word or cyclotomic-literal syntax errors.
struct ParseError : Error {
  using Error::Error;
};

// Tensor-space size above the configured bound.
struct CapExceeded : Error {
  using Error::Error;
};

// Braid closure has more than one component.
struct MultiComponent : Error {
  using Error::Error;
};

// Operands built over different roots of unity / scalar backends.
struct FieldMismatch : Error {
  using Error::Error;
};

}  // namespace logknot
