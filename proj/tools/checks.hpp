#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "steklov/dtn.hpp"

namespace steklov::cli {

struct CheckContext {
  std::uint64_t seed = 20251018;
  int truncation = 64;
  // Source of the bare Λ matrix; tests swap it to inject faults.
  std::function<TruncatedOperator(int)> lambda = lambdaMatrix;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;      // worst observed residual or violation
  double tolerance = 0.0;
  std::string detail;
};

struct CheckSpec {
  std::string name;
  std::string description;
  std::function<CheckResult(const CheckContext&)> run;
};

const std::vector<CheckSpec>& checkRegistry();
std::vector<CheckResult> runChecks(const CheckContext& context);

// Λ with one diagonal entry perturbed.
CheckContext withCorruptedLambda(CheckContext context);

}  // namespace steklov::cli
