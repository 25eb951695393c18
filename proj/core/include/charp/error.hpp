#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial expression. `position` is a 0-based byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariable : public SyntaxError {
 public:
  UnknownVariable(const std::string& name, std::size_t position)
      : SyntaxError("unknown variable '" + name + "'", position), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// An exponent left the supported range (each exponent must stay <= 2^20).
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different polynomial rings.
class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different polynomial rings") {}
};

/// A documented precondition of an operation does not hold for the given input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The operation needs data the caller did not supply (for example minimal primes).
class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant failed. Always indicates a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace charp
