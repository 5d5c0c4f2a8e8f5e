#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "steklov/dtn.hpp"
#include "steklov/flow.hpp"
#include "steklov/spectrum.hpp"
#include "steklov/trig_polynomial.hpp"
#include "steklov/zeta.hpp"

namespace steklov::io {

// Accepts {"degree": N, "coefficients": [[re, im], ...]} (k = 0..N, im_0 = 0)
// or {"samples": [v_0, ..., v_{M-1}]} at θ_j = 2πj/M. Throws ParseError.
TrigPolynomial parseFunctionJson(std::string_view text);
std::string functionToJson(const TrigPolynomial& f);

std::string operatorToJson(const TruncatedOperator& op);
std::string snapshotToJson(const CompactSetSnapshot& snapshot);

// Deterministic shortest round-trip formatting of a double.
std::string formatNumber(double value);

// Columns tau, hat_a0, mean_integral, normalization_residual, dist_to_one,
// then zeta_diff@s for each probe.
std::string trajectoryCsv(const FlowTrajectory& trajectory);
// Full coefficient states of every `stride`-th recorded state.
std::string trajectoryStatesJson(const FlowTrajectory& trajectory, int stride);
std::string trajectorySummaryJson(const FlowTrajectory& trajectory, const MonitorReport& report);

std::string readFile(const std::filesystem::path& path);
// Writes to a sibling temporary file and renames it over `path`.
void writeFileAtomically(const std::filesystem::path& path, std::string_view content);

}  // namespace steklov::io
