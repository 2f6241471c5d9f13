#ifndef SUPERKRULL_ERRORS_H_
#define SUPERKRULL_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superkrull {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition: field or arity mismatch, inhomogeneous input,
// zero polynomial where a nonzero one is required, and so on.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// The input is valid but lies outside the class of presentations an
// operation can decide (for example a nonzero even reduction J̄).
class ScopeError : public Error {
 public:
  using Error::Error;
};

// 1 lies in the defining super-ideal, so the presented superalgebra is zero.
class ZeroAlgebraError : public ScopeError {
 public:
  ZeroAlgebraError()
      : ScopeError("zero superalgebra: 1 lies in the defining super-ideal") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// An internal consistency check failed. Seeing one is a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace superkrull

#endif  // SUPERKRULL_ERRORS_H_
