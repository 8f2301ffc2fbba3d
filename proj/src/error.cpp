#include "bschur/error.hpp"

namespace bschur {

const char* errorKindName(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PoleAtSpecialization: return "PoleAtSpecialization";
    case ErrorKind::InvalidSpecialization: return "InvalidSpecialization";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::UnclassifiedEigenvalue: return "UnclassifiedEigenvalue";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidShape: return "InvalidShape";
    case ErrorKind::InvalidPosition: return "InvalidPosition";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::SymmetrizerValidationFailed: return "SymmetrizerValidationFailed";
    case ErrorKind::IncompatibleSpaces: return "IncompatibleSpaces";
    case ErrorKind::InvalidIndex: return "InvalidIndex";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::InadmissibleIndex: return "InadmissibleIndex";
    case ErrorKind::FdVanishes: return "FdVanishes";
    case ErrorKind::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(errorKindName(kind)) + ": " + what), kind_(kind) {}

}  // namespace bschur
