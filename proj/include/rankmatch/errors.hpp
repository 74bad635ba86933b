#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rankmatch {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic between elements of different prime fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// Invalid arguments: bad shapes, non-prime modulus, out-of-range parameters.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An exhaustive computation would exceed its configured cap.
class TooLarge : public Error {
 public:
  using Error::Error;
};

// Malformed text input. line() is 1-based, 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Input violates a structural hypothesis (e.g. a span that leaves the weakly
// symmetric matrices). detail() carries a serialized witness when available.
class HypothesisViolation : public Error {
 public:
  HypothesisViolation(const std::string& what, std::string detail = {})
      : Error(what), detail_(std::move(detail)) {}

  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
};

}  // namespace rankmatch
