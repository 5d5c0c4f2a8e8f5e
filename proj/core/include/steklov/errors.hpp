#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace steklov {

enum class ErrorCode {
  NonPositiveSample,
  AliasingRisk,
  DegenerateMap,
  EigensolveFailure,
  PoleAtOne,
  ComplexityLimit,
  MeanNotZero,
  QuadratureBudget,
  PositivityLost,
  StepCollapse,
  InvalidArgument,
  ParseError,
};

std::string_view toString(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(toString(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace steklov
