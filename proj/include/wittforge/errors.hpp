#pragma once

#include <stdexcept>
#include <string>

namespace wittforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (ring descriptors, elements, index-set specs).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a structural invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different rings or over different index sets.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// An exact division that does not divide.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

/// The operation is not implemented for this ring form.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search would exceed the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace wittforge
