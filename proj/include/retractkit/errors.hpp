#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace retractkit {

// Base of every error raised by the library. Verdicts (not a member, not an
// automorphism, nothing found within a bound) are returned as values, never
// thrown.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeOfZero : public Error {
 public:
  DegreeOfZero() : Error("degree of the zero polynomial is undefined") {}
};

class DivisorZero : public Error {
 public:
  DivisorZero() : Error("division by the zero polynomial") {}
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidDegree : public Error {
 public:
  using Error::Error;
};

class ConstantGenerator : public Error {
 public:
  ConstantGenerator() : Error("generator must be nonconstant") {}
};

// A hypothesis of the operation does not hold for the given input.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// A bounded search ran out of budget before reaching a verdict.
class NotFoundWithinBound : public Error {
 public:
  using Error::Error;
};

// An intermediate polynomial exceeded the configured support-size cap.
class TermLimitExceeded : public NotFoundWithinBound {
 public:
  TermLimitExceeded(std::size_t terms, std::size_t limit)
      : NotFoundWithinBound("intermediate polynomial has " + std::to_string(terms) +
                            " terms, above the cap of " + std::to_string(limit) +
                            " (RETRACTKIT_MAX_TERMS)") {}
};

// A proven inequality or structural result failed on concrete data. Either
// the implementation is wrong or the input broke an unchecked assumption;
// callers surface it distinctly from user error.
class TheoremInconsistency : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& reason)
      : Error("parse error at position " + std::to_string(position) + ": " + reason),
        position_(position),
        reason_(reason) {}

  std::size_t position() const { return position_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

}  // namespace retractkit
