#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fibcat {

enum class ErrorKind {
  kSchema,
  kLawViolation,
  kUnknownObject,
  kUnknownMorphism,
  kTargetMismatch,
  kFunctorialityViolation,
  kMissingLimit,
  kMissingPullback,
  kMissingPushouts,
  kMissingLift,
  kNotCocartesian,
  kNotCartesian,
  kNoFactorization,
  kNotFibered,
  kNotBicartesian,
  kNotPreMoens,
  kNotBC,
  kNotMoens,
  kNotGenMoens,
  kNotLex,
  kNotTerminalPreserving,
  kNoTerminal,
  kSizeGuard,
};

std::string_view error_kind_name(ErrorKind kind);

// Process exit code used by the command line tool for an error of this kind.
int exit_code_for(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace fibcat
