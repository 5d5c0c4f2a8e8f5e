#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "steklov/conformal_factor.hpp"
#include "steklov/trig_polynomial.hpp"
#include "steklov/zeta.hpp"

namespace steklov {

// B(b) = -b(Λb) + (Hb)(Db), evaluated as -4 Re(b_+ Λ conj(b_+)) with
// b_+ = b̂_0/2 + Σ_{k≥1} b̂_k e^{ikθ}. Degree-preserving.
TrigPolynomial quadraticFormB(const TrigPolynomial& b);
// The defining expression, kept as an independent check.
TrigPolynomial quadraticFormBDirect(const TrigPolynomial& b);

// 4⟨α_+, Λα_+⟩ = 8π Σ_{k≥1} k|α̂_k|².
double meanDecayRate(const TrigPolynomial& alpha);

// Step bound 0.5/‖α‖_{C¹} with ‖α‖_{C¹} = sup|α| + sup|α'| on a grid.
double stableStep(const TrigPolynomial& alpha);

// One classical RK4 step of dα/dτ = B(α) on the coefficients. Negative dt
// is accepted for finite-difference probes only.
TrigPolynomial rk4Step(const TrigPolynomial& alpha, double dt);

struct FlowOptions {
  double dt = 1e-3;
  double tauMax = 100.0;
  double convergenceTol = 1e-6;
  std::vector<double> zetaProbes{-2.0, 2.0};
  int truncation = 64;
  // RK4 steps between recorded states; spectral diagnostics run only there.
  int recordStride = 100;
  int snapshotM = 2;
  double monotonicityTol = 1e-9;
  int maxHalvings = 20;
  // Tolerance for re-validating normalization of recorded factors; the
  // drift itself is reported by monitorReport.
  double stateNormalizationTol = 1e-6;
};

struct FlowDiagnostics {
  double meanIntegral = 0.0;
  double normalizationResidual = 0.0;
  double distToOne = 0.0;
  double meanDecayRate = 0.0;
  CompactSetSnapshot snapshot;
  std::vector<std::pair<double, double>> zetaProbe;  // (s, diff) in probe order
};

struct FlowState {
  double tau = 0.0;
  long step = 0;
  ConformalFactor factor;
  FlowDiagnostics diagnostics;
};

// Evaluates every diagnostic of a state.
FlowState makeFlowState(double tau, long step, ConformalFactor factor, const FlowOptions& options);

TrigPolynomial flowRhs(const FlowState& state);

// RK4 step with positivity re-validation; normalization is measured, never
// re-imposed. Keeping dt ≤ stableStep(α) is left to the caller, so an
// oversized step surfaces as PositivityLost.
FlowState stepRk4(const FlowState& state, double dt, const FlowOptions& options);

struct FlowTrajectory {
  std::vector<FlowState> states;
  bool converged = false;
  double finalDistance = 0.0;
  bool failed = false;
  long failedStep = -1;
  std::string failure;
  long steps = 0;
  int halvings = 0;
  double finalDt = 0.0;
};

// Integrates until ‖α - 1‖_∞ < convergenceTol or τ ≥ tauMax. dt is halved
// when a step loses positivity or increases the mean, and a recorded
// interval is redone at half the step when a zeta probe increases. Throws
// StepCollapse when positivity cannot be kept within maxHalvings.
FlowTrajectory integrate(const ConformalFactor& a, const FlowOptions& options);

struct MonitorReport {
  double maxNormalizationDrift = 0.0;
  double maxMeanIncrease = 0.0;
  double maxZetaProbeIncrease = 0.0;
  double maxSnapshotIncrease = 0.0;
  // max |d/dτ ∫α + 4⟨α_+, Λα_+⟩| with the derivative from three-point
  // differences of the recorded means at interior states.
  double identityResidual = 0.0;
};

MonitorReport monitorReport(const FlowTrajectory& trajectory);

}  // namespace steklov
