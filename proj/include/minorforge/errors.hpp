#pragma once

#include <stdexcept>
#include <string>

namespace minorforge {

/// Bad arguments, malformed input, or a violated precondition. CLI exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two values or polynomials over different rings were combined.
class RingMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// The requested procedure is not available over this ring (e.g. hyperdeterminant
/// criterion over F3).
class UnsupportedRing : public InputError {
 public:
  using InputError::InputError;
};

/// The coefficient of x1...xn vanished after a group action.
class DegenerateOrbitPoint : public InputError {
 public:
  using InputError::InputError;
};

/// A membership decider was handed a vector with a_empty != 1.
class NotNormalized : public InputError {
 public:
  using InputError::InputError;
};

/// The input polynomial has no determinantal representation. CLI exit code 1.
class NoRepresentation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
/// A step that must succeed on valid input did not. This is an
/// A step that the underlying theorems guarantee to succeed did not. This is an
/// implementation bug or a forged certificate, never a user error. CLI exit code 3.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace minorforge
