#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regmap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller supplied a parameter outside an operation's domain
/// (composite modulus, odd n, wrong congruence class, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A root of unity was requested that does not live in F_{p^2}.
class UnsupportedExtension : public Error {
 public:
  using Error::Error;
};

/// An operation needed to enumerate a group larger than the configured limit.
class OrderLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Two elements from different group families were combined.
class FamilyMismatch : public Error {
 public:
  using Error::Error;
};

/// Rejection of a candidate map or quotient.
class ValidationError : public Error {
 public:
  enum class Reason {
    NotInGroup,
    NotInvolution,
    NotCommuting,
    NotGenerating,
    NotSubgroup,
    NotNormal,
    DegenerateQuotient,
  };

  ValidationError(Reason reason, const std::string& what) : Error(what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// An internal invariant failed. Always a bug or a violated mathematical
/// assumption, never bad user input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Malformed family spec or CLI parameter string. `column` is 0-based.
class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& what, std::size_t column, std::size_t length)
      : InvalidArgument(what), column_(column), length_(length) {}

  std::size_t column() const noexcept { return column_; }
  std::size_t length() const noexcept { return length_; }

 private:
  std::size_t column_;
  std::size_t length_;
};

}  // namespace regmap
