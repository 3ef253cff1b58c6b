#pragma once

#include <stdexcept>
#include <string>

namespace monocodes {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates an operation's precondition (bad field, zero divisor,
/// repeated factors, dimension mismatch, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A brute-force routine refused to run because its search space is too big.
class ResourceGuardError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed. Seeing one of these means a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace monocodes
