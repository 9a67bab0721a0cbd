#include "branchinv/errors.hpp"

namespace branchinv {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::TagMismatch: return "TagMismatch";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::ConstantTermNotOne: return "ConstantTermNotOne";
    case ErrorKind::InvalidParameterChange: return "InvalidParameterChange";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::NotTransversal: return "NotTransversal";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NonPolynomialInput: return "NonPolynomialInput";
    case ErrorKind::NonRationalCoefficient: return "NonRationalCoefficient";
    case ErrorKind::NotWeierstrass: return "NotWeierstrass";
    case ErrorKind::BranchesEqual: return "BranchesEqual";
    case ErrorKind::ThetaOutOfRange: return "ThetaOutOfRange";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::NotRemovable: return "NotRemovable";
    case ErrorKind::DegenerateMove: return "DegenerateMove";
    case ErrorKind::WrongEquisingularityClass: return "WrongEquisingularityClass";
    case ErrorKind::CrossCheckFailed: return "CrossCheckFailed";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::NonIntegralResult: return "NonIntegralResult";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::WitnessMismatch: return "WitnessMismatch";
    case ErrorKind::ZeroLeadingC: return "ZeroLeadingC";
  }
  return "UnknownError";
}

}  // namespace branchinv
