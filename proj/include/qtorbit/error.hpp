#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qtorbit {

enum class ErrorCode {
  DuplicateVertex,
  FacetOutsideGround,
  ApexCollision,
  VertexNotInGround,
  FullSimplexInput,
  GhostVertexInput,
  BadDimension,
  ImproperSubset,
  NonIncreasingB,
  NotInHyperplane,
  NotPrimitive,
  DimensionMismatch,
  StarConditionViolated,
  HypothesisFailed,
  ParseError,
  TooLarge,
};

std::string_view to_string(ErrorCode code);

// Every contract violation in the library surfaces as this exception.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qtorbit
