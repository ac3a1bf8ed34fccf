#include "cubicmcm/error.hpp"

namespace cubicmcm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroCharge: return "ZeroCharge";
    case ErrorKind::InvalidBundle: return "InvalidBundle";
    case ErrorKind::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorKind::VariantMismatch: return "VariantMismatch";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::SingularCubic: return "SingularCubic";
    case ErrorKind::NotOnCurve: return "NotOnCurve";
    case ErrorKind::OrderThreePoint: return "OrderThreePoint";
    case ErrorKind::InflectionPoint: return "InflectionPoint";
    case ErrorKind::DegeneratePoint: return "DegeneratePoint";
    case ErrorKind::InhomogeneousInput: return "InhomogeneousInput";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

}  // namespace cubicmcm
