#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace autrel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position` is a 0-based byte offset into the text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands live in rings with different variable counts, or an index is out of range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the mathematical content of an argument does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace autrel
