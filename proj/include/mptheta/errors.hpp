#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mptheta {

/// Input violates a documented precondition. Maps to CLI exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text could not be parsed; carries the 0-based byte offset.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t position, const std::string& message)
      : ValidationError("at " + std::to_string(position) + ": " + message), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An internal consistency check failed. Maps to CLI exit code 2.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

inline void ensure(bool ok, const std::string& message) {
  if (!ok) throw InvariantError(message);
}

}  // namespace mptheta
