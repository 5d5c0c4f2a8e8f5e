#include "steklov/diagnostics.hpp"

#include <iostream>
#include <mutex>

#include "steklov/errors.hpp"

namespace steklov {

namespace {

std::mutex& handlerMutex() {
  static std::mutex m;
  return m;
}

WarningHandler& handlerSlot() {
  static WarningHandler handler = [](std::string_view msg) { std::clog << "steklov warning: " << msg << '\n'; };
  return handler;
}

}  // namespace

std::string_view toString(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveSample: return "NonPositiveSample";
    case ErrorCode::AliasingRisk: return "AliasingRisk";
    case ErrorCode::DegenerateMap: return "DegenerateMap";
    case ErrorCode::EigensolveFailure: return "EigensolveFailure";
    case ErrorCode::PoleAtOne: return "PoleAtOne";
    case ErrorCode::ComplexityLimit: return "ComplexityLimit";
    case ErrorCode::MeanNotZero: return "MeanNotZero";
    case ErrorCode::QuadratureBudget: return "QuadratureBudget";
    case ErrorCode::PositivityLost: return "PositivityLost";
    case ErrorCode::StepCollapse: return "StepCollapse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

WarningHandler setWarningHandler(WarningHandler handler) {
  std::lock_guard lock(handlerMutex());
  auto previous = std::move(handlerSlot());
  handlerSlot() = std::move(handler);
  return previous;
}

void warn(std::string_view message) {
  std::lock_guard lock(handlerMutex());
  if (handlerSlot()) handlerSlot()(message);
}

}  // namespace steklov
