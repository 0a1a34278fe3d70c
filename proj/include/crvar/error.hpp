#pragma once

#include <stdexcept>
#include <string>

namespace crvar {

/// Raised when an operation's precondition is violated (dimension mismatch,
/// non-real input where a real function is required, malformed text, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse failure carrying a 1-based line/column position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace crvar
