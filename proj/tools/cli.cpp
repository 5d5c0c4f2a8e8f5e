#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "checks.hpp"
#include "steklov/diagnostics.hpp"
#include "steklov/errors.hpp"
#include "steklov/expression.hpp"
#include "steklov/fixtures.hpp"
#include "steklov/flow.hpp"
#include "steklov/harmonics.hpp"
#include "steklov/io.hpp"
#include "steklov/spectrum.hpp"
#include "steklov/zeta.hpp"

namespace steklov::cli {

namespace {

using nlohmann::json;

int exitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::NonPositiveSample:
    case ErrorCode::DegenerateMap:
    case ErrorCode::MeanNotZero:
    case ErrorCode::PoleAtOne:
      return kInvalidInput;
    default:
      return kNumericalFailure;
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

TrigPolynomial loadFunction(const RunConfig& cfg) {
  if (!cfg.expr.empty()) return parseExpression(cfg.expr);
  if (!cfg.input.empty()) {
    const std::string text = trim(cfg.input);
    if (!text.empty() && text.front() == '{') return io::parseFunctionJson(text);
    if (!std::filesystem::exists(text)) throw Error(ErrorCode::InvalidArgument, fmt::format("no such file: {}", text));
    return io::parseFunctionJson(io::readFile(text));
  }
  if (cfg.seed) {
    FixtureRng rng(*cfg.seed);
    return randomFactor(rng, cfg.fixtureDegree).series();
  }
  throw Error(ErrorCode::InvalidArgument, "no input: give --input, --expr or --seed");
}

ConformalFactor loadFactor(const RunConfig& cfg) { return normalize(loadFunction(cfg)); }

std::string formatOptional(const std::optional<double>& v) { return v ? io::formatNumber(*v) : std::string{}; }

std::string cmdSpectrum(const RunConfig& cfg) {
  const auto a = loadFactor(cfg);
  const auto spec = spectrum(a, cfg.truncation);
  if (cfg.format == "json") {
    std::vector<double> values(spec.eigenvalues.data(), spec.eigenvalues.data() + spec.size());
    return json{{"truncation", cfg.truncation},
                {"trust_horizon", spec.trustHorizon},
                {"scale", a.scale()},
                {"eigenvalues", values}}
               .dump(2) +
           "\n";
  }
  std::string out = "k,lambda_k,floor_half,residual\n";
  for (int k = 0; k < spec.size(); ++k) {
    const double lambda = spec.eigenvalues(k);
    out += fmt::format("{},{},{},{}\n", k, lambda, diskEigenvalue(k), std::abs(lambda - diskEigenvalue(k)));
  }
  return out;
}

std::string cmdZeta(const RunConfig& cfg) {
  const auto a = loadFactor(cfg);
  const auto spec = spectrum(a, cfg.truncation);
  std::vector<ZetaValue> values;
  for (double s : cfg.sGrid) values.push_back(zetaDiff(spec, s));
  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& z : values) {
      json row{{"s", z.s}, {"diff", z.diff}, {"tail_estimate", z.tailEstimate}};
      row["zeta_a"] = z.zetaA ? json(*z.zetaA) : json(nullptr);
      rows.push_back(row);
    }
    return rows.dump(2) + "\n";
  }
  std::string out = "s,diff,zeta_a,tail_estimate\n";
  for (const auto& z : values) {
    out += fmt::format("{},{},{},{}\n", z.s, z.diff, formatOptional(z.zetaA), z.tailEstimate);
  }
  return out;
}

std::string cmdInvariants(const RunConfig& cfg) {
  const auto a = loadFactor(cfg);
  const auto snap = compactSetSnapshot(a, cfg.m);
  if (cfg.format == "json") return io::snapshotToJson(snap);
  std::string header = "hat_b0,zeta_minus1";
  std::string row = fmt::format("{},{}", snap.hatB0, snap.zetaMinus1);
  for (std::size_t i = 0; i < snap.zMinus2m.size(); ++i) {
    header += fmt::format(",z_{}", i + 1);
    row += fmt::format(",{}", snap.zMinus2m[i]);
  }
  return header + "\n" + row + "\n";
}

std::string cmdVariation(const RunConfig& cfg) {
  const auto a = loadFactor(cfg);
  std::optional<TrigPolynomial> g;
  std::optional<TrigPolynomial> beta;
  if (!cfg.direction.empty()) g = parseExpression(cfg.direction);
  if (!cfg.beta.empty()) beta = parseExpression(cfg.beta);
  const auto spec = cachedSpectrum(a, cfg.truncation);
  const auto delta = smoothingDifference(a, cfg.truncation);

  std::string header = "s,trace_functional,first_variation_flow";
  if (g) header += ",first_variation_general";
  if (beta) header += ",second_variation_at_one";
  json rows = json::array();
  std::string out = header + "\n";
  for (double s : cfg.sGrid) {
    const double trace = traceFunctional(*spec, delta, s);
    const double flow = s * traceFunctional(*spec, delta, -s);
    json row{{"s", s}, {"trace_functional", trace}, {"first_variation_flow", flow}};
    std::string line = fmt::format("{},{},{}", s, trace, flow);
    if (g) {
      const double v = firstVariationGeneral(a, *g, s, cfg.truncation);
      row["first_variation_general"] = v;
      line += fmt::format(",{}", v);
    }
    if (beta) {
      const double v = secondVariationAtOne(*beta, s);
      row["second_variation_at_one"] = v;
      line += fmt::format(",{}", v);
    }
    rows.push_back(row);
    out += line + "\n";
  }
  return cfg.format == "json" ? rows.dump(2) + "\n" : out;
}

struct FlowOutcome {
  std::string table;
  std::string summary;
  std::string states;
  bool failed;
  std::string failure;
};

FlowOutcome cmdFlow(const RunConfig& cfg) {
  const auto a = loadFactor(cfg);
  FlowOptions opt;
  opt.dt = cfg.dt;
  opt.tauMax = cfg.tauMax;
  opt.convergenceTol = cfg.tol;
  opt.zetaProbes = cfg.probes;
  opt.truncation = cfg.truncation;
  opt.recordStride = cfg.recordStride;
  const auto traj = integrate(a, opt);
  const auto report = monitorReport(traj);
  FlowOutcome o{cfg.format == "json" ? io::trajectoryStatesJson(traj, 1) : io::trajectoryCsv(traj),
                io::trajectorySummaryJson(traj, report), io::trajectoryStatesJson(traj, cfg.sidecarStride),
                traj.failed, traj.failure};
  return o;
}

void emit(const RunConfig& cfg, const std::string& content, std::ostream& out) {
  if (cfg.out.empty()) {
    out << content;
  } else {
    io::writeFileAtomically(cfg.out, content);
  }
}

void validate(const RunConfig& cfg) {
  if (cfg.truncation < 8) throw Error(ErrorCode::InvalidArgument, "--degree must be at least 8");
  if (cfg.format != "csv" && cfg.format != "json") throw Error(ErrorCode::InvalidArgument, "--format is csv or json");
  if (cfg.command == "flow") {
    for (double s : cfg.probes) {
      if (!std::isfinite(s)) throw Error(ErrorCode::InvalidArgument, "probes must be finite");
    }
  }
}

int runCheck(const RunConfig& cfg, std::ostream& out) {
  if (cfg.list) {
    for (const auto& c : checkRegistry()) out << fmt::format("{:<30} {}\n", c.name, c.description);
    return kOk;
  }
  CheckContext ctx;
  ctx.truncation = cfg.truncation;
  if (cfg.seed) ctx.seed = *cfg.seed;
  if (cfg.injectFault == "lambda") {
    ctx = withCorruptedLambda(ctx);
  } else if (!cfg.injectFault.empty()) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("unknown fault '{}'", cfg.injectFault));
  }
  const auto results = runChecks(ctx);
  std::string table = fmt::format("{:<30} {:<6} {:>12} {:>10}\n", "check", "status", "value", "tolerance");
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed;
    table += fmt::format("{:<30} {:<6} {:>12.3e} {:>10.1e}{}\n", r.name, r.passed ? "pass" : "FAIL", r.value,
                         r.tolerance, r.detail.empty() ? "" : "  " + r.detail);
  }
  emit(cfg, table, out);
  return ok ? kOk : kCheckFailed;
}

void addCommon(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--input", cfg.input, "Function as a JSON file path or inline JSON");
  sub->add_option("--expr", cfg.expr, "Function as an expression, e.g. \"1 + 0.3*cos(1*t)\"");
  sub->add_option("--degree", cfg.truncation, "Truncation N (modes |k| <= N)")->capture_default_str();
  sub->add_option("--s", cfg.sGrid, "Comma-separated s values")->delimiter(',')->capture_default_str();
  sub->add_option("--format", cfg.format, "csv or json")->capture_default_str();
  sub->add_option("--out", cfg.out, "Output path (default: standard output)");
  sub->add_option("--seed", cfg.seed, "Seed for a random fixture when no input is given");
  sub->add_option("--fixture-degree", cfg.fixtureDegree, "Degree of the seeded random fixture")->capture_default_str();
  sub->add_flag("--quiet", cfg.quiet, "Suppress warnings");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Steklov spectra, zeta invariants and the zeta-decreasing flow"};
  app.require_subcommand(1);

  auto* spectrumCmd = app.add_subcommand("spectrum", "Eigenvalues of Lambda_a");
  auto* zetaCmd = app.add_subcommand("zeta", "zeta_a(s) - 2 zeta_R(s) on an s-grid");
  auto* invariantsCmd = app.add_subcommand("invariants", "hat a_0, Kogan zeta(-1) and algebraic Z_m");
  auto* variationCmd = app.add_subcommand("variation", "Trace functional and variation formulas");
  auto* flowCmd = app.add_subcommand("flow", "Integrate the zeta-decreasing flow");
  auto* checkCmd = app.add_subcommand("check", "Run the identity suite on seeded fixtures");
  for (auto* sub : {spectrumCmd, zetaCmd, invariantsCmd, variationCmd, flowCmd, checkCmd}) addCommon(sub, cfg);

  invariantsCmd->add_option("--m", cfg.m, "Number of algebraic invariants Z_1..Z_M")->capture_default_str();
  variationCmd->add_option("--direction", cfg.direction, "Zero-mean g for the general first variation");
  variationCmd->add_option("--beta", cfg.beta, "Zero-mean beta for the second variation at a = 1");
  flowCmd->add_option("--dt", cfg.dt, "RK4 step")->capture_default_str();
  flowCmd->add_option("--tau-max", cfg.tauMax, "Stopping horizon")->capture_default_str();
  flowCmd->add_option("--tol", cfg.tol, "Convergence tolerance on sup|alpha - 1|")->capture_default_str();
  flowCmd->add_option("--probes", cfg.probes, "Comma-separated zeta probe s values")
      ->delimiter(',')
      ->capture_default_str();
  flowCmd->add_option("--record-stride", cfg.recordStride, "RK4 steps between recorded states")->capture_default_str();
  flowCmd->add_option("--sidecar-stride", cfg.sidecarStride, "Recorded states between sidecar entries")
      ->capture_default_str();
  checkCmd->add_flag("--list", cfg.list, "List checks without running them");
  checkCmd->add_option("--inject-fault", cfg.injectFault, "Test hook: corrupt an operator (lambda)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "steklov: " << e.what() << "\n";
    return kInvalidInput;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

  const auto previous = setWarningHandler([&](std::string_view msg) {
    if (!cfg.quiet) err << "warning: " << msg << "\n";
  });
  struct Restore {
    WarningHandler handler;
    ~Restore() { setWarningHandler(std::move(handler)); }
  } restore{previous};

  try {
    validate(cfg);
    if (cfg.command == "check") return runCheck(cfg, out);
    if (cfg.command == "flow") {
      const auto o = cmdFlow(cfg);
      if (cfg.out.empty()) {
        out << o.table;
        if (!cfg.quiet) err << o.summary;
      } else {
        io::writeFileAtomically(cfg.out + ".states.json", o.states);
        io::writeFileAtomically(cfg.out + ".summary.json", o.summary);
        io::writeFileAtomically(cfg.out, o.table);
        if (!cfg.quiet) out << o.summary;
      }
      if (o.failed) {
        err << "steklov: monotonicity violation: " << o.failure << "\n";
        return kMonotonicityViolation;
      }
      return kOk;
    }
    std::string content;
    if (cfg.command == "spectrum") content = cmdSpectrum(cfg);
    if (cfg.command == "zeta") content = cmdZeta(cfg);
    if (cfg.command == "invariants") content = cmdInvariants(cfg);
    if (cfg.command == "variation") content = cmdVariation(cfg);
    emit(cfg, content, out);
    return kOk;
  } catch (const Error& e) {
    err << "steklov: " << e.what() << "\n";
    return exitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "steklov: " << e.what() << "\n";
    return kNumericalFailure;
  }
}

}  // namespace steklov::cli
