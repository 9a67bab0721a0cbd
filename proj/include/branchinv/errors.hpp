#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace branchinv {

enum class ErrorKind {
  Parse,
  TagMismatch,
  NotAUnit,
  ConstantTermNotOne,
  InvalidParameterChange,
  NotPrimitive,
  NotTransversal,
  PrecisionExhausted,
  NonPolynomialInput,
  NonRationalCoefficient,
  NotWeierstrass,
  BranchesEqual,
  ThetaOutOfRange,
  NotRealizable,
  NotRemovable,
  DegenerateMove,
  WrongEquisingularityClass,
  CrossCheckFailed,
  HypothesisNotMet,
  NonIntegralResult,
  NotMonic,
  WitnessMismatch,
  ZeroLeadingC,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the CLI in particular) can dispatch on it.
class BranchError : public std::runtime_error {
 public:
  BranchError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace branchinv
