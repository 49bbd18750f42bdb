#include "dvf/errors.hpp"

namespace dvf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UndefinedPower: return "undefined power";
    case ErrorKind::ZeroInversion: return "inversion of zero";
    case ErrorKind::DivisionByZero: return "division by zero";
    case ErrorKind::NotAUniformizer: return "not a uniformizer";
    case ErrorKind::NotInUnitBall: return "not in unit ball";
    case ErrorKind::NotInMaximalIdeal: return "not in maximal ideal";
    case ErrorKind::ContextMismatch: return "context mismatch";
    case ErrorKind::ZeroIndistinguishable: return "zero-indistinguishable";
    case ErrorKind::InsufficientPrecision: return "insufficient precision";
    case ErrorKind::Undecidable: return "undecidable at this precision";
    case ErrorKind::NotIntegral: return "not integral";
    case ErrorKind::NoCertificate: return "no certificate";
    case ErrorKind::NonMonic: return "non-monic modulus";
    case ErrorKind::EmptySample: return "empty sample";
    case ErrorKind::DegreeTooLarge: return "degree too large";
  }
  return "unknown";
}

MathError::MathError(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace dvf
