#include "pivotkit/error.hpp"

namespace pivotkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::PivotOnZero: return "PivotOnZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::OrbitBudgetExceeded: return "OrbitBudgetExceeded";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::GroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::ElementNotFound: return "ElementNotFound";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotASpanningTree: return "NotASpanningTree";
    case ErrorCode::TreeTooSmall: return "TreeTooSmall";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::PartitionInvalid: return "PartitionInvalid";
    case ErrorCode::UnknownCampaign: return "UnknownCampaign";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace pivotkit
