#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toricfol {

// Base of every domain error raised by the library. The CLI maps these to
// exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Binary polynomial operation on operands with different variable tables.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

// Malformed polynomial or model text. Carries the 1-based line when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A ToricModel (or model spec) violates a named invariant.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& invariant, const std::string& detail)
      : Error("invariant '" + invariant + "' violated: " + detail), invariant_(invariant) {}
  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

// The model lacks the data an operation needs (no divisor classes, no
// Chern route, no radial data).
class UnsupportedModel : public Error {
 public:
  using Error::Error;
};

// Inputs outside an operation's domain: index out of range, wrong arity,
// formula not applicable.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The Macaulay dimension count did not stabilize below the degree cap.
class NonIsolatedZero : public Error {
 public:
  using Error::Error;
};

}  // namespace toricfol
