#pragma once

#include <stdexcept>
#include <string>

namespace racg {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or mismatched input: bad generator index, mixed systems, parse failures.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined for this kind of system (reducible, finite, too small).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numerical or structural hypothesis of the computation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree did not.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace racg
