#pragma once

#include <stdexcept>
#include <string>

namespace jetcalc {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (expression grammar, system/covering files).
// `position` is a byte offset into the offending text, or -1 when the
// error is not tied to a location.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, long position = -1)
      : Error(position >= 0 ? what + " (at position " + std::to_string(position) + ")"
                            : what),
        position_(position) {}
  long position() const { return position_; }

 private:
  long position_;
};

// A mathematically invalid request: zero denominator, shape mismatch,
// invalid system, index out of range.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Raised by formal integration when the integrand has no
// differential-polynomial antiderivative.
class NotExactError : public DomainError {
 public:
  explicit NotExactError(const std::string& what) : DomainError(what) {}
};

}  // namespace jetcalc
