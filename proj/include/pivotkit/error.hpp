#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pivotkit {

enum class ErrorCode {
  PivotOnZero,
  DimensionMismatch,
  NotAnEdge,
  OrbitBudgetExceeded,
  SearchBudgetExceeded,
  GroundSetTooLarge,
  ElementNotFound,
  NotConnected,
  NotASpanningTree,
  TreeTooSmall,
  NotATree,
  PartitionInvalid,
  UnknownCampaign,
  CapExceeded,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// True for the outcomes that mean "ran out of budget", i.e. the answer is unknown.
constexpr bool is_budget_error(ErrorCode code) {
  return code == ErrorCode::OrbitBudgetExceeded || code == ErrorCode::SearchBudgetExceeded ||
         code == ErrorCode::GroundSetTooLarge || code == ErrorCode::CapExceeded;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pivotkit
