#ifndef NOMRW_ERRORS_HPP
#define NOMRW_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nomrw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A position path leaves the term.
class InvalidPosition : public Error {
 public:
  using Error::Error;
};

/// An operation restricted to ground terms received a term with unknowns.
class OpenTermError : public Error {
 public:
  using Error::Error;
};

/// Unknown symbol, arity mismatch or a malformed signature declaration.
class SignatureError : public Error {
 public:
  using Error::Error;
};

/// Bounded C-class enumeration exceeded its cap.
class ClassTooLarge : public Error {
 public:
  using Error::Error;
};

/// Enumeration guard (e.g. more than seven atoms for permutations).
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Precedence/status configuration does not cover the system, or is cyclic.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace nomrw

#endif  // NOMRW_ERRORS_HPP
