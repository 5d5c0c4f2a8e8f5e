#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace steklov::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInvalidInput = 2,
  kNumericalFailure = 3,
  kMonotonicityViolation = 4,
};

// Every flag default lives here.
struct RunConfig {
  std::string command;
  std::string input;                 // path or inline JSON
  std::string expr;                  // expression grammar
  int truncation = 64;
  std::vector<double> sGrid{-3.0, -2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 2.0, 3.0};
  double dt = 1e-3;
  double tauMax = 100.0;
  double tol = 1e-6;
  std::vector<double> probes{-2.0, 2.0};
  int recordStride = 100;
  int sidecarStride = 1;
  std::string format = "csv";
  std::string out;
  std::optional<std::uint64_t> seed;
  int fixtureDegree = 4;
  int m = 2;
  std::string direction;             // g for the general first variation
  std::string beta;                  // β for the second variation at a = 1
  bool quiet = false;
  bool list = false;
  std::string injectFault;
};

// Parses argv and runs the selected command. Tabular output goes to `out`
// unless --out is given; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace steklov::cli
