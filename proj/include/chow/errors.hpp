#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chow {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position()` is the 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands built over different variable contexts.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// Input lies outside the setting a back-end can compute exactly
/// (non-monomial data in the coordinate setting, irrational plane points, ...).
class UnsupportedSetting : public Error {
 public:
  using Error::Error;
};

/// Mathematically invalid argument: zero where nonzero is required,
/// an element lying in the prime it is supposed to avoid, etc.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A verification routine was called outside its hypotheses.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace chow
