#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spectracert {

// Base class for every error this library raises on bad input.
// Internal invariant violations use standard logic errors instead.
class SpectraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public SpectraError {
 public:
  using SpectraError::SpectraError;
};

class ZeroVectorError : public SpectraError {
 public:
  ZeroVectorError() : SpectraError("zero vector") {}
};

class SingularMatrix : public SpectraError {
 public:
  SingularMatrix() : SpectraError("matrix is singular") {}
};

class InvalidPrecision : public SpectraError {
 public:
  InvalidPrecision() : SpectraError("precision must be a positive rational") {}
};

class InvalidInterval : public SpectraError {
 public:
  using SpectraError::SpectraError;
};

class SizeLimitExceeded : public SpectraError {
 public:
  SizeLimitExceeded(std::size_t n, std::size_t limit)
      : SpectraError("matrix dimension " + std::to_string(n) +
                     " exceeds oracle size limit " + std::to_string(limit)) {}
};

// Carries the 1-based position of the offending token when known.
class ParseError : public SpectraError {
 public:
  explicit ParseError(const std::string& reason, std::size_t line = 0,
                      std::size_t column = 0)
      : SpectraError(locate(reason, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string locate(const std::string& reason, std::size_t line,
                            std::size_t column) {
    if (line == 0) return reason;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) +
           ": " + reason;
  }

  std::size_t line_;
  std::size_t column_;
};

// 1-based indices of the entry pair that breaks (conjugate) symmetry.
class SymmetryError : public SpectraError {
 public:
  SymmetryError(std::size_t i, std::size_t j)
      : SpectraError("entries (" + std::to_string(i) + "," + std::to_string(j) +
                     ") and (" + std::to_string(j) + "," + std::to_string(i) +
                     ") violate symmetry"),
        i_(i),
        j_(j) {}

  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }

 private:
  std::size_t i_;
  std::size_t j_;
};

}  // namespace spectracert
