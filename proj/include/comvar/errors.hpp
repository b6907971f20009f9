#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace comvar {

// Operands live in different rings.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A builder or operation needs a characteristic it was not given
// (e.g. characteristic 2 for anything built from sl2).
class CharacteristicError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Gröbner computation hit its pair or wall-clock cap. This is never a
// "false" answer: callers must surface it as an abort.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)),
        message_(what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + what;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// Two independently seeded oracle runs returned different ranks.
class OracleDisagreement : public std::runtime_error {
 public:
  OracleDisagreement(std::size_t first, std::size_t second)
      : std::runtime_error("oracle seeds disagree: " + std::to_string(first) + " vs " +
                           std::to_string(second)),
        first_(first),
        second_(second) {}

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

}  // namespace comvar
