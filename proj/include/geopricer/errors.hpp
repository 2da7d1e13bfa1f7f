#ifndef GEOPRICER_ERRORS_HPP
#define GEOPRICER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace geopricer {

/// Base class of every error raised by the library. The CLI maps the
/// subclasses onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON, mismatched dimensions, indices out of range.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// An enumeration or state space exceeded its configured cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Exact arithmetic overflowed its 64-bit representation.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

}  // namespace geopricer

#endif  // GEOPRICER_ERRORS_HPP
