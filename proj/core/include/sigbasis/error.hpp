#ifndef SIGBASIS_ERROR_HPP
#define SIGBASIS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sigbasis {

/// Mismatched widths, ranks, fields or spaces; exponent overflow.
class StructuralError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A documented precondition of an operation was violated.
class ContractError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Requested combination is valid in principle but not implemented.
class UnsupportedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(format(message, line, column)),
        detail_(message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  /// The message without the position prefix.
  const std::string& detail() const { return detail_; }

private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }

  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

} // namespace sigbasis

#endif
