#include "steklov/flow.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "grid.hpp"
#include "steklov/errors.hpp"
#include "steklov/harmonics.hpp"
#include "steklov/spectrum.hpp"

namespace steklov {

namespace {

TrigPolynomial realPart(const TrigPolynomial& f) {
  TrigPolynomial out(f.degree());
  for (int k = -f.degree(); k <= f.degree(); ++k) out.set(k, 0.5 * (f[k] + std::conj(f[-k])));
  return out;
}

double distanceToOne(const TrigPolynomial& alpha) {
  const int m = grid::defaultSize(alpha.degree());
  double d = 0.0;
  for (double v : alpha.sample(m)) d = std::max(d, std::abs(v - 1.0));
  return d;
}

double minSample(const TrigPolynomial& alpha) {
  const auto values = alpha.sample(grid::defaultSize(alpha.degree()));
  return *std::min_element(values.begin(), values.end());
}

}  // namespace

double stableStep(const TrigPolynomial& alpha) {
  const int m = grid::defaultSize(alpha.degree() + 1);
  double top = 0.0;
  for (double v : alpha.sample(m)) top = std::max(top, std::abs(v));
  double slope = 0.0;
  for (double v : realDerivative(alpha).sample(m)) slope = std::max(slope, std::abs(v));
  return 0.5 / std::max(top + slope, 1e-300);
}

TrigPolynomial quadraticFormB(const TrigPolynomial& b) {
  const int n = b.degree();
  TrigPolynomial plus(n);
  TrigPolynomial lambdaConj(n);
  plus.set(0, 0.5 * b[0]);
  for (int k = 1; k <= n; ++k) {
    plus.set(k, b[k]);
    lambdaConj.set(-k, static_cast<double>(k) * std::conj(b[k]));
  }
  auto out = realPart(multiply(plus, lambdaConj)) * -4.0;
  out = out.truncated(n);
#ifndef NDEBUG
  const double gap = maxCoefficientDistance(out, quadraticFormBDirect(b));
  if (gap > 1e-10 * std::max(1.0, b.squaredNorm() * (n + 1))) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("quadratic form identity off by {:.3e}", gap));
  }
#endif
  return out;
}

TrigPolynomial quadraticFormBDirect(const TrigPolynomial& b) {
  return multiply(hilbert(b), derivativeD(b)) - multiply(b, applyLambda(b));
}

double meanDecayRate(const TrigPolynomial& alpha) {
  double s = 0.0;
  for (int k = 1; k <= alpha.degree(); ++k) s += k * std::norm(alpha[k]);
  return 8.0 * kPi * s;
}

TrigPolynomial rk4Step(const TrigPolynomial& alpha, double dt) {
  const auto k1 = quadraticFormB(alpha);
  const auto k2 = quadraticFormB(alpha + k1 * (0.5 * dt));
  const auto k3 = quadraticFormB(alpha + k2 * (0.5 * dt));
  const auto k4 = quadraticFormB(alpha + k3 * dt);
  auto next = alpha + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0);
  next.set(0, next[0].real());
  return next;
}

FlowState makeFlowState(double tau, long step, ConformalFactor factor, const FlowOptions& options) {
  FlowDiagnostics d;
  const auto& series = factor.series();
  d.meanIntegral = meanIntegral(series);
  d.normalizationResidual = factor.normalizationResidual();
  d.distToOne = distanceToOne(series);
  d.meanDecayRate = meanDecayRate(series);
  d.snapshot = compactSetSnapshot(factor, options.snapshotM);
  if (!options.zetaProbes.empty()) {
    const auto spec = spectrum(factor, options.truncation);
    for (double s : options.zetaProbes) d.zetaProbe.emplace_back(s, zetaDiff(spec, s).diff);
  }
  return FlowState{tau, step, std::move(factor), std::move(d)};
}

TrigPolynomial flowRhs(const FlowState& state) {
  return quadraticFormB(state.factor.series()).truncated(state.factor.degree());
}

FlowState stepRk4(const FlowState& state, double dt, const FlowOptions& options) {
  if (!(dt > 0.0)) throw Error(ErrorCode::InvalidArgument, "dt must be positive");
  const auto next = rk4Step(state.factor.series(), dt);
  const double lo = minSample(next);
  if (!(lo > 0.0)) {
    throw Error(ErrorCode::PositivityLost, fmt::format("minimum {:.3e} after step at tau = {}", lo, state.tau));
  }
  return makeFlowState(state.tau + dt, state.step + 1,
                       ConformalFactor(next, options.stateNormalizationTol), options);
}

FlowTrajectory integrate(const ConformalFactor& a, const FlowOptions& options) {
  if (!(options.dt > 0.0) || !(options.tauMax >= 0.0) || options.recordStride < 1) {
    throw Error(ErrorCode::InvalidArgument, "dt must be positive, tauMax nonnegative and recordStride ≥ 1");
  }
  FlowTrajectory traj;
  traj.states.push_back(makeFlowState(0.0, 0, a, options));
  double dt = options.dt;
  auto halve = [&] {
    if (traj.halvings >= options.maxHalvings) return false;
    ++traj.halvings;
    dt *= 0.5;
    return true;
  };

  while (true) {
    const FlowState& base = traj.states.back();
    traj.finalDistance = base.diagnostics.distToOne;
    if (base.diagnostics.distToOne < options.convergenceTol) {
      traj.converged = true;
      break;
    }
    if (base.tau >= options.tauMax) break;

    // Advance one recorded interval from `base`.
    TrigPolynomial alpha = base.factor.series();
    double tau = base.tau;
    long step = base.step;
    for (int i = 0; i < options.recordStride && tau < options.tauMax; ++i) {
      const double h = std::min({dt, stableStep(alpha), options.tauMax - tau});
      const auto next = rk4Step(alpha, h);
      if (!(minSample(next) > 0.0)) {
        if (!halve()) {
          throw Error(ErrorCode::StepCollapse,
                      fmt::format("positivity lost at tau = {} after {} halvings", tau, traj.halvings));
        }
        --i;
        continue;
      }
      if (next[0].real() > alpha[0].real() + options.monotonicityTol / kTwoPi) {
        if (!halve()) {
          traj.failed = true;
          traj.failedStep = step + 1;
          traj.failure = fmt::format("mean integral increased at step {} (tau = {})", step + 1, tau + h);
          return traj;
        }
        --i;
        continue;
      }
      alpha = next;
      tau += h;
      ++step;
      if (distanceToOne(alpha) < options.convergenceTol) break;
    }

    FlowState next = makeFlowState(tau, step, ConformalFactor(alpha, options.stateNormalizationTol), options);
    double worst = 0.0;
    for (std::size_t p = 0; p < next.diagnostics.zetaProbe.size(); ++p) {
      worst = std::max(worst, next.diagnostics.zetaProbe[p].second - base.diagnostics.zetaProbe[p].second);
    }
    if (worst > options.monotonicityTol) {
      if (!halve()) {
        traj.failed = true;
        traj.failedStep = step;
        traj.failure = fmt::format("zeta probe increased by {:.3e} at step {} (tau = {})", worst, step, tau);
        traj.states.push_back(std::move(next));
        return traj;
      }
      continue;
    }
    traj.steps = step;
    traj.states.push_back(std::move(next));
  }
  traj.finalDt = dt;
  return traj;
}

MonitorReport monitorReport(const FlowTrajectory& traj) {
  MonitorReport r;
  const auto& st = traj.states;
  for (std::size_t i = 0; i < st.size(); ++i) {
    const auto& d = st[i].diagnostics;
    r.maxNormalizationDrift = std::max(r.maxNormalizationDrift, kTwoPi * d.normalizationResidual);
    if (i == 0) continue;
    const auto& prev = st[i - 1].diagnostics;
    r.maxMeanIncrease = std::max(r.maxMeanIncrease, d.meanIntegral - prev.meanIntegral);
    for (std::size_t p = 0; p < d.zetaProbe.size(); ++p) {
      r.maxZetaProbeIncrease = std::max(r.maxZetaProbeIncrease, d.zetaProbe[p].second - prev.zetaProbe[p].second);
    }
    const auto& s0 = st.front().diagnostics.snapshot;
    const auto& s = d.snapshot;
    r.maxSnapshotIncrease = std::max({r.maxSnapshotIncrease, s.hatB0 - s0.hatB0, s.zetaMinus1 - s0.zetaMinus1});
    for (std::size_t m = 0; m < s.zMinus2m.size(); ++m) {
      r.maxSnapshotIncrease = std::max(r.maxSnapshotIncrease, s.zMinus2m[m] - s0.zMinus2m[m]);
    }
  }
  for (std::size_t i = 1; i + 1 < st.size(); ++i) {
    const double h1 = st[i].tau - st[i - 1].tau;
    const double h2 = st[i + 1].tau - st[i].tau;
    if (h1 <= 0.0 || h2 <= 0.0) continue;
    const double f0 = st[i - 1].diagnostics.meanIntegral;
    const double f1 = st[i].diagnostics.meanIntegral;
    const double f2 = st[i + 1].diagnostics.meanIntegral;
    const double derivative =
        -h2 / (h1 * (h1 + h2)) * f0 + (h2 - h1) / (h1 * h2) * f1 + h1 / (h2 * (h1 + h2)) * f2;
    r.identityResidual = std::max(r.identityResidual, std::abs(derivative + st[i].diagnostics.meanDecayRate));
  }
  return r;
}

}  // namespace steklov
