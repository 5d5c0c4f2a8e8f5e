#include "steklov/io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "steklov/errors.hpp"
#include "steklov/harmonics.hpp"

namespace steklov::io {

using nlohmann::json;

TrigPolynomial parseFunctionJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  try {
    if (doc.contains("samples")) {
      const auto samples = doc.at("samples").get<std::vector<double>>();
      return fromGridSamples(samples);
    }
    if (!doc.contains("coefficients")) throw Error(ErrorCode::ParseError, "expected \"coefficients\" or \"samples\"");
    const auto& coeffs = doc.at("coefficients");
    if (!coeffs.is_array() || coeffs.empty()) throw Error(ErrorCode::ParseError, "\"coefficients\" must be a nonempty array");
    std::vector<Complex> c;
    for (const auto& pair : coeffs) {
      if (!pair.is_array() || pair.size() != 2) throw Error(ErrorCode::ParseError, "each coefficient must be [re, im]");
      c.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    if (doc.contains("degree") && doc.at("degree").get<int>() != static_cast<int>(c.size()) - 1) {
      throw Error(ErrorCode::ParseError, fmt::format("degree {} does not match {} coefficients",
                                                     doc.at("degree").get<int>(), c.size()));
    }
    if (c[0].imag() != 0.0) throw Error(ErrorCode::ParseError, "im_0 must be 0");
    return TrigPolynomial::fromNonNegative(c);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string formatNumber(double value) { return fmt::format("{}", value); }

namespace {

json complexPair(Complex z) { return json::array({z.real(), z.imag()}); }

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string functionToJson(const TrigPolynomial& f) {
  json coeffs = json::array();
  for (int k = 0; k <= f.degree(); ++k) coeffs.push_back(complexPair(f[k]));
  return dump({{"degree", f.degree()}, {"coefficients", coeffs}});
}

std::string operatorToJson(const TruncatedOperator& op) {
  json entries = json::array();
  const auto& m = op.entries();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(complexPair(m(r, c)));
  }
  return dump({{"truncation", op.truncation()}, {"entries", entries}});
}

std::string snapshotToJson(const CompactSetSnapshot& snapshot) {
  return dump({{"hat_b0", snapshot.hatB0}, {"zeta_minus1", snapshot.zetaMinus1}, {"z_minus_2m", snapshot.zMinus2m}});
}

std::string trajectoryCsv(const FlowTrajectory& trajectory) {
  std::string out = "tau,hat_a0,mean_integral,normalization_residual,dist_to_one";
  if (!trajectory.states.empty()) {
    for (const auto& [s, _] : trajectory.states.front().diagnostics.zetaProbe) out += fmt::format(",zeta_diff@{}", s);
  }
  out += '\n';
  for (const auto& st : trajectory.states) {
    const auto& d = st.diagnostics;
    out += fmt::format("{},{},{},{},{}", st.tau, st.factor.series()[0].real(), d.meanIntegral, d.normalizationResidual,
                       d.distToOne);
    for (const auto& [_, v] : d.zetaProbe) out += fmt::format(",{}", v);
    out += '\n';
  }
  return out;
}

std::string trajectoryStatesJson(const FlowTrajectory& trajectory, int stride) {
  stride = std::max(stride, 1);
  json states = json::array();
  const auto& st = trajectory.states;
  for (std::size_t i = 0; i < st.size(); ++i) {
    if (i % static_cast<std::size_t>(stride) != 0 && i + 1 != st.size()) continue;
    json coeffs = json::array();
    const auto& f = st[i].factor.series();
    for (int k = 0; k <= f.degree(); ++k) coeffs.push_back(complexPair(f[k]));
    states.push_back({{"tau", st[i].tau}, {"step", st[i].step}, {"degree", f.degree()}, {"coefficients", coeffs}});
  }
  return dump({{"states", states}});
}

std::string trajectorySummaryJson(const FlowTrajectory& trajectory, const MonitorReport& report) {
  json doc = {
      {"converged", trajectory.converged},
      {"final_distance", trajectory.finalDistance},
      {"final_tau", trajectory.states.empty() ? 0.0 : trajectory.states.back().tau},
      {"steps", trajectory.steps},
      {"halvings", trajectory.halvings},
      {"failed", trajectory.failed},
      {"monitors",
       {{"max_normalization_drift", report.maxNormalizationDrift},
        {"max_mean_increase", report.maxMeanIncrease},
        {"max_zeta_probe_increase", report.maxZetaProbeIncrease},
        {"max_snapshot_increase", report.maxSnapshotIncrease},
        {"identity_residual", report.identityResidual}}},
  };
  if (trajectory.failed) {
    doc["failed_step"] = trajectory.failedStep;
    doc["failure"] = trajectory.failure;
  }
  return dump(doc);
}

std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, fmt::format("cannot open {}", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFileAtomically(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidArgument, fmt::format("cannot write {}", tmp.string()));
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw Error(ErrorCode::InvalidArgument, fmt::format("failed writing {}", tmp.string()));
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace steklov::io
