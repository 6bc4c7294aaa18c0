#pragma once

#include <stdexcept>
#include <string>

namespace beireg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input; the message names the line or byte offset.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input is outside the supported size envelope of an operation.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A resource budget was exceeded. Carries the measured count.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::size_t measured, std::size_t limit)
      : Error(what + " (measured " + std::to_string(measured) + ", limit " +
              std::to_string(limit) + ")"),
        measured_(measured),
        limit_(limit) {}

  std::size_t measured() const { return measured_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t measured_;
  std::size_t limit_;
};

}  // namespace beireg
