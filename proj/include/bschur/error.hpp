#pragma once

#include <stdexcept>
#include <string>

namespace bschur {

enum class ErrorKind {
  DivisionByZero,
  PoleAtSpecialization,
  InvalidSpecialization,
  ShapeMismatch,
  UnclassifiedEigenvalue,
  SizeMismatch,
  OutOfRange,
  InvalidShape,
  InvalidPosition,
  DegreeMismatch,
  SymmetrizerValidationFailed,
  IncompatibleSpaces,
  InvalidIndex,
  ParityMismatch,
  InadmissibleIndex,
  FdVanishes,
  ConsistencyFailure,
  BudgetExceeded,
  ParseError,
};

const char* errorKindName(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bschur
