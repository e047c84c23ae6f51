#pragma once

#include <stdexcept>
#include <string>

namespace klein11 {

// Base class for every failure raised by the library.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public MathError {
 public:
  DivisionByZero() : MathError("division by zero") {}
  explicit DivisionByZero(const std::string& what) : MathError(what) {}
};

class ParseError : public MathError {
 public:
  using MathError::MathError;
};

// A series coefficient was requested at or beyond the known truncation order.
class TruncationError : public MathError {
 public:
  TruncationError(const std::string& what, long achievable)
      : MathError(what), achievable_(achievable) {}
  long achievable() const noexcept { return achievable_; }

 private:
  long achievable_;
};

// Mixed-weight arithmetic on modular series.
class WeightMismatch : public MathError {
 public:
  using MathError::MathError;
};

// A certified identity failed; carries the first offending exponent.
class VerificationFailure : public MathError {
 public:
  VerificationFailure(const std::string& what, long exponent)
      : MathError(what), exponent_(exponent) {}
  long exponent() const noexcept { return exponent_; }

 private:
  long exponent_;
};

}  // namespace klein11
