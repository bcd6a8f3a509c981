#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dualflow {

enum class ErrorCode {
  SyntaxError,
  ValidationError,
  DimensionMismatch,
  InfeasiblePoint,
  InfeasibleTree,
  InstanceTooLarge,
  NotApplicable,
  UnboundedDirection,
  StaleStep,
  NotAVertex,
  IdenticalPoints,
  DepthCapExceeded,
  FrontierTooLarge,
  EdgeMissing,
  FaceEmpty,
  NegativeSelfLoop,
  InfeasibleLift,
  NoBackwardEdge,
  DegenerateInstance,
  InvalidPartition,
  PathConflict,
  InfeasibleInstance,
};

std::string_view to_string(ErrorCode code);

/// All domain failures are reported through this exception; `code()` is the
/// machine-readable reason that the CLI puts into its reports.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dualflow
