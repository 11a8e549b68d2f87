#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dd2 {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  /// The message without the "line N: " prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

/// An operation precondition was violated by the caller.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search was asked to run beyond its configured size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace dd2
