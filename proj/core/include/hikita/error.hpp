#pragma once

#include <stdexcept>
#include <string>

namespace hikita {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (bad size, out-of-range
/// index, malformed text, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Two values from different polynomial rings were combined.
class ContextMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Division by zero and friends.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// A matrix had the wrong rank for the requested operation.
class RankError : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

/// A configurable resource budget was exhausted. This is a reported
/// outcome, not a bug.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check between two routes disagreed.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace hikita
