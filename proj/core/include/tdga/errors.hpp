#pragma once

#include <stdexcept>
#include <string>

namespace tdga {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different parameters (modulus, n, lambda) were combined.
class ParameterMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in F_q") {}
};

/// An operand lies outside the subspace an operation is defined on.
class SupportViolation : public Error {
 public:
  using Error::Error;
};

class SingularCirculant : public Error {
 public:
  SingularCirculant() : Error("circulant matrix is singular") {}
};

/// The observed public key fails the necessary consistency identity, so it
/// cannot have been produced by the protocol from the given public element.
class InconsistentInstance : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace tdga
