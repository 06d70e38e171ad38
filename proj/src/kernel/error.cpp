#include "ratlines/kernel/error.hpp"

namespace ratlines {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NoEliminationVariable: return "NoEliminationVariable";
    case ErrorCode::UnluckyEvaluations: return "UnluckyEvaluations";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::IdenticallyZeroDenominator: return "IdenticallyZeroDenominator";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::PlaneInput: return "PlaneInput";
    case ErrorCode::DegenerateBranchMismatch: return "DegenerateBranchMismatch";
    case ErrorCode::RetryBudgetExhausted: return "RetryBudgetExhausted";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::DegenerateSample: return "DegenerateSample";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Timeout: return "Timeout";
  }
  return "Unknown";
}

}  // namespace ratlines
