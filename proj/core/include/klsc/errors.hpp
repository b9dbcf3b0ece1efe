#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace klsc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text; carries the byte offset of the failure.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Identifier other than z, log, exp, atan, abs, pi.
class UnknownIdentifier : public Error {
 public:
  UnknownIdentifier(const std::string& name, std::size_t offset)
      : Error("unknown identifier '" + name + "' (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Evaluation left the real domain (log of non-positive values, division by
/// zero, even root of a negative value, point outside the annulus, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Adaptive refinement detected non-integrable endpoint behavior.
class DivergentIntegral : public Error {
 public:
  using Error::Error;
};

/// A numerical routine exhausted its refinement budget.
class ToleranceNotMet : public Error {
 public:
  using Error::Error;
};

class NotKahler : public Error {
 public:
  using Error::Error;
};

class DegenerateMetric : public Error {
 public:
  using Error::Error;
};

class NonPositiveConformalFactor : public Error {
 public:
  using Error::Error;
};

/// The conformal factor vanished more than once on one annulus.
class MultipleZeros : public Error {
 public:
  using Error::Error;
};

class NotAdmissible : public Error {
 public:
  using Error::Error;
};

class NotSmoothAtZero : public Error {
 public:
  using Error::Error;
};

class AllCoefficientsZero : public Error {
 public:
  using Error::Error;
};

class TruncationInsufficient : public Error {
 public:
  using Error::Error;
};

/// A quantity is not representable in exact rational arithmetic.
class ExactArithmeticError : public Error {
 public:
  using Error::Error;
};

}  // namespace klsc
