#pragma once

#include <stdexcept>
#include <string>

namespace autgroup {

enum class ErrorKind {
  Parse,             // malformed input text
  Validation,        // well-formed but inconsistent input
  NotInvertible,
  NotBounded,
  Unsupported,       // automaton differs from its circuit part
  EmptyPostCritical,
  Domain,            // argument outside the operation's domain
  CapExceeded,       // brute-force level above the configured cap
  Internal,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace autgroup
