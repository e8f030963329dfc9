#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxplus {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the domain of the operation (NaN payload,
/// negative scale factor, coefficient vector of zeros, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operand shapes do not line up.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A combination of infinities that the extended arithmetic leaves undefined.
class UndefinedExtOp : public Error {
 public:
  using Error::Error;
};

/// The objective function is identically -inf (every matrix row is -inf).
class EmptyObjective : public Error {
 public:
  using Error::Error;
};

/// Problem-file syntax error, with a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t col)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) +
              ": " + what),
        line_(line),
        col_(col) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

}  // namespace maxplus
