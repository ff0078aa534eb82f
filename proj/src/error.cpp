#include "upho/error.hpp"

namespace upho {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NoMinimum: return "NoMinimum";
    case ErrorCode::NoJoin: return "NoJoin";
    case ErrorCode::NoMeet: return "NoMeet";
    case ErrorCode::JoinOfAtomsMissing: return "JoinOfAtomsMissing";
    case ErrorCode::ChainNotModular: return "ChainNotModular";
    case ErrorCode::ChainNotMaximal: return "ChainNotMaximal";
    case ErrorCode::DualNotGraded: return "DualNotGraded";
    case ErrorCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::UnsupportedFieldOrder: return "UnsupportedFieldOrder";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InhomogeneousRelation: return "InhomogeneousRelation";
    case ErrorCode::DepthExceedsTruncation: return "DepthExceedsTruncation";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

}  // namespace upho
