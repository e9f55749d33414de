#pragma once

#include <stdexcept>
#include <string>

namespace sgb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (n = 0, element out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Checked integer arithmetic would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (group order, brute-force order, dense matrix dimension) was exceeded.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A closed-form catalog operation was asked about a group outside its families.
class UnsupportedFamilyError : public Error {
 public:
  using Error::Error;
};

}  // namespace sgb
