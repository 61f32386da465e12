#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxalg {

// Base for every error raised by the library. Negative mathematical answers
// (no scaling exists, star diverges) are not errors; see Solvable<>.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ModeMismatch : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class UndefinedDivision : public Error {
 public:
  UndefinedDivision(std::size_t row, std::size_t col)
      : Error("undefined division at (" + std::to_string(row + 1) + "," +
              std::to_string(col + 1) + "): positive over zero"),
        row_(row),
        col_(col) {}
  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

class NoConstraint : public Error {
 public:
  using Error::Error;
};

// Raised when exact arithmetic cannot represent a result (irrational cycle
// mean, irrational logarithm). Switching to float mode resolves it.
class ExactnessError : public Error {
 public:
  using Error::Error;
};

class NotIrreducible : public Error {
 public:
  using Error::Error;
};

class NotNormalized : public Error {
 public:
  using Error::Error;
};

class AcyclicMatrix : public Error {
 public:
  using Error::Error;
};

class NotAnFpScaling : public Error {
 public:
  using Error::Error;
};

class ZeroDiagonal : public Error {
 public:
  explicit ZeroDiagonal(std::size_t index)
      : Error("zero diagonal entry at index " + std::to_string(index + 1)), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class PatternViolation : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class SizeLimit : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotCommuting : public Error {
 public:
  using Error::Error;
};

class WitnessNotFound : public Error {
 public:
  using Error::Error;
};

// Internal consistency guard: a computed object failed its own certificate.
class CertificationFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace maxalg
