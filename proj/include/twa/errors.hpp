#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twa {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands carry incompatible or unsupported semiring tags.
class SemiringError : public Error {
 public:
  using Error::Error;
};

/// Unknown symbol, or two automata over different alphabets.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed `.twa` text or weight literal. `line()` is 0 when the error
/// is not tied to a line (e.g. a bare literal).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The matrix has a circuit of positive weight, so its star diverges.
class PositiveCycleError : public Error {
 public:
  using Error::Error;
};

/// Errors that carry a counterexample word.
class WitnessError : public Error {
 public:
  WitnessError(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// The series takes a positive value on `witness()`.
class NotNonpositiveError : public WitnessError {
 public:
  using WitnessError::WitnessError;
};

/// Two series differ on `witness()`.
class NotEqualError : public WitnessError {
 public:
  using WitnessError::WitnessError;
};

/// A configurable resource cap (monoid size, subset count) was hit.
class CapExceededError : public Error {
 public:
  CapExceededError(const std::string& what, std::size_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Brute-force enumeration would exceed its guard.
class BoundExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace twa
