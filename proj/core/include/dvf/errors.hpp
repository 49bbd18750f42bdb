#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dvf {

/// Contract violated by a mathematical operation. Argument validation
/// (non-prime p, malformed descriptors) uses std::invalid_argument instead.
enum class ErrorKind {
  UndefinedPower,
  ZeroInversion,
  DivisionByZero,
  NotAUniformizer,
  NotInUnitBall,
  NotInMaximalIdeal,
  ContextMismatch,
  ZeroIndistinguishable,
  InsufficientPrecision,
  Undecidable,
  NotIntegral,
  NoCertificate,
  NonMonic,
  EmptySample,
  DegreeTooLarge,
};

std::string_view to_string(ErrorKind kind);

class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dvf
