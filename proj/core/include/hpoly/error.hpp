#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hpoly {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (wrong rank, not bipartite, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A structure that should be a polytope failed validation.
class NotPolytopalError : public Error {
 public:
  using Error::Error;
};

/// Configured size limit exceeded (flags, vertices, cosets).
class LimitError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hpoly
