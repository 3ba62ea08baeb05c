#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weyl {

enum class ErrorCode {
  EmptyGenerators,
  NondegenerateViolation,
  DimensionMismatch,
  NotMember,
  SingularBasis,
  SingularMatrix,
  NotInA,
  NotInFD,
  SignatureMismatch,
  BlockShapeViolation,
  LatticeNotMapped,
  HomomorphismCounterexample,
  Sigma1NotSupported,
  NotAnAutomorphism,
  ZeroElement,
  SyntaxError,
  DimensionError,
  InvalidArgument,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace weyl
