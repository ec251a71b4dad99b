#include "fibcat/errors.hpp"

namespace fibcat {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSchema: return "SchemaError";
    case ErrorKind::kLawViolation: return "LawViolation";
    case ErrorKind::kUnknownObject: return "UnknownObject";
    case ErrorKind::kUnknownMorphism: return "UnknownMorphism";
    case ErrorKind::kTargetMismatch: return "TargetMismatch";
    case ErrorKind::kFunctorialityViolation: return "FunctorialityViolation";
    case ErrorKind::kMissingLimit: return "MissingLimit";
    case ErrorKind::kMissingPullback: return "MissingPullback";
    case ErrorKind::kMissingPushouts: return "MissingPushouts";
    case ErrorKind::kMissingLift: return "MissingLift";
    case ErrorKind::kNotCocartesian: return "NotCocartesian";
    case ErrorKind::kNotCartesian: return "NotCartesian";
    case ErrorKind::kNoFactorization: return "NoFactorization";
    case ErrorKind::kNotFibered: return "NotFibered";
    case ErrorKind::kNotBicartesian: return "NotBicartesian";
    case ErrorKind::kNotPreMoens: return "NotPreMoens";
    case ErrorKind::kNotBC: return "NotBC";
    case ErrorKind::kNotMoens: return "NotMoens";
    case ErrorKind::kNotGenMoens: return "NotGenMoens";
    case ErrorKind::kNotLex: return "NotLex";
    case ErrorKind::kNotTerminalPreserving: return "NotTerminalPreserving";
    case ErrorKind::kNoTerminal: return "NoTerminal";
    case ErrorKind::kSizeGuard: return "SizeGuardExceeded";
  }
  return "Error";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSchema:
    case ErrorKind::kUnknownObject:
    case ErrorKind::kUnknownMorphism:
      return 1;
    case ErrorKind::kLawViolation:
    case ErrorKind::kTargetMismatch:
    case ErrorKind::kFunctorialityViolation:
      return 2;
    case ErrorKind::kSizeGuard:
      return 5;
    default:
      return 4;
  }
}

}  // namespace fibcat
