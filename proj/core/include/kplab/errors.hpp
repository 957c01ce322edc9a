#pragma once

#include <stdexcept>
#include <string>

namespace kplab {

/// Argument outside the mathematically defined domain (negative factorial,
/// superfactorial below -1, parameters outside the validated family domain).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A cost guard refused the computation (e.g. cofactor expansion past the
/// order limit).
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An exactness assertion failed. Indicates a bug, never bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

/// The rewrite system reached a fixpoint with factorial-type factors (or
/// symbolic exponents) still present, so reduction to a polynomial identity
/// did not complete.
struct StallError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace kplab
