#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "steklov/errors.hpp"
#include "steklov/fixtures.hpp"
#include "steklov/flow.hpp"
#include "steklov/harmonics.hpp"

using namespace steklov;

namespace {

// -b(Λb) + (Hb)(Db) on a grid: Λb, Hb and Db are formed from the coefficients
// mode by mode and the products taken pointwise.
double directRhsAt(const TrigPolynomial& b, double t) {
  Complex lam = 0.0;
  Complex h = 0.0;
  Complex d = 0.0;
  for (int k = -b.degree(); k <= b.degree(); ++k) {
    const Complex e = b[k] * std::exp(Complex(0.0, k * t));
    lam += static_cast<double>(std::abs(k)) * e;
    h += (k > 0 ? 1.0 : (k < 0 ? -1.0 : 0.0)) * e;
    d += static_cast<double>(k) * e;
  }
  return (-oracle::evaluate(b, t) * lam + h * d).real();
}

TrigPolynomial rk4Solve(TrigPolynomial alpha, double tau, int steps) {
  const double dt = tau / steps;
  for (int i = 0; i < steps; ++i) alpha = rk4Step(alpha, dt);
  return alpha;
}

}  // namespace

TEST_CASE("quadratic form B") {
  CHECK(quadraticFormB(TrigPolynomial::constant(1.0)).maxAbsCoefficient() == 0.0);
  CHECK(quadraticFormB(TrigPolynomial::constant(3.5)).maxAbsCoefficient() == 0.0);

  const auto b = TrigPolynomial::constant(1.0) + TrigPolynomial::cosine(1);
  const auto expected = -(TrigPolynomial::constant(1.0) + TrigPolynomial::cosine(1));
  CHECK(maxCoefficientDistance(quadraticFormB(b), expected) < 1e-15);
  CHECK(maxCoefficientDistance(quadraticFormBDirect(b), expected) < 1e-15);

  FixtureRng rng(101);
  for (int deg = 1; deg <= 7; ++deg) {
    const auto f = randomPolynomial(rng, deg);
    const auto fast = quadraticFormB(f);
    CHECK(fast.degree() == deg);
    CHECK(fast.isReal());
    CHECK(maxCoefficientDistance(fast, quadraticFormBDirect(f)) < 1e-14);
    CHECK(oracle::maxGridDistance(fast, [&](double t) { return directRhsAt(f, t); }) < 1e-13);
    // The mean decays at the rate 4⟨α_+, Λα_+⟩.
    CHECK(std::abs(meanIntegral(fast) + meanDecayRate(f)) < 1e-13);
  }
}

TEST_CASE("flow right-hand side") {
  FlowOptions opt;
  opt.truncation = 32;
  const auto one = makeFlowState(0.0, 0, ConformalFactor::one(), opt);
  CHECK(flowRhs(one).maxAbsCoefficient() == 0.0);

  const auto trivial = makeFlowState(0.0, 0, trivialFactor(0.3, 0.4), opt);
  const auto rhs = flowRhs(trivial);
  CHECK(rhs.trimmed(1e-15).degree() <= 1);

  FixtureRng rng(103);
  const auto a = randomFactor(rng, 4);
  const auto state = makeFlowState(0.0, 0, a, opt);
  const double lhs = flowRhs(state)[0].real();
  const double rate = meanDecayRate(a.series()) / kTwoPi;
  CHECK(std::abs(lhs + rate) < 1e-10);
  CHECK(state.diagnostics.normalizationResidual < 1e-10);
  CHECK(state.diagnostics.zetaProbe.size() == 2);
}

TEST_CASE("RK4 is fourth order and keeps the normalization") {
  CHECK(maxCoefficientDistance(rk4Step(TrigPolynomial::constant(1.0), 0.1), TrigPolynomial::constant(1.0)) == 0.0);

  const auto a = normalize(TrigPolynomial::constant(1.0) + TrigPolynomial::cosine(1, 0.4)).series();
  const double tau = 0.5;
  const auto reference = rk4Solve(a, tau, 400);
  const double e1 = maxCoefficientDistance(rk4Solve(a, tau, 10), reference);
  const double e2 = maxCoefficientDistance(rk4Solve(a, tau, 20), reference);
  CHECK(e1 / e2 > 12.0);
  CHECK(e1 / e2 < 20.0);

  FixtureRng rng(107);
  const auto b = randomFactor(rng, 5).series();
  const auto stepped = rk4Solve(b, 0.2, 200);
  CHECK(std::abs(normalizationDefect(stepped)) < 1e-8);
  CHECK(stepped.degree() == b.degree());

  // Euler-limit direction from the un-normalized 1 + cos θ.
  const auto start = TrigPolynomial::constant(1.0) + TrigPolynomial::cosine(1);
  const double h = 1e-6;
  const auto slope = (rk4Step(start, h) - start) * (1.0 / h);
  CHECK(maxCoefficientDistance(slope, -start) < 1e-5);
}

TEST_CASE("stable step bound") {
  CHECK(stableStep(TrigPolynomial::constant(1.0)) == doctest::Approx(0.5));
  // sup|2 + cos 3θ| = 3 and sup|3 sin 3θ| = 3.
  const auto f = TrigPolynomial::constant(2.0) + TrigPolynomial::cosine(3);
  CHECK(stableStep(f) == doctest::Approx(0.5 / 6.0).epsilon(1e-12));
}

TEST_CASE("stepRk4 keeps the constant state and reports lost positivity") {
  FlowOptions opt;
  opt.truncation = 16;
  const auto one = makeFlowState(0.0, 0, ConformalFactor::one(), opt);
  const auto next = stepRk4(one, 0.01, opt);
  CHECK(next.tau == doctest::Approx(0.01));
  CHECK(maxCoefficientDistance(next.factor.series(), one.factor.series()) == 0.0);

  const auto sharp = normalize(TrigPolynomial::constant(1.0) + TrigPolynomial::cosine(3, 0.9));
  const auto state = makeFlowState(0.0, 0, sharp, opt);
  bool lost = false;
  try {
    stepRk4(state, 2.0, opt);
  } catch (const Error& e) {
    lost = e.code() == ErrorCode::PositivityLost;
  }
  CHECK(lost);
}

TEST_CASE("integrate the constant factor") {
  const auto traj = integrate(ConformalFactor::one(), FlowOptions{});
  CHECK(traj.converged);
  CHECK(traj.states.size() == 1);
  const auto report = monitorReport(traj);
  CHECK(report.maxNormalizationDrift == 0.0);
  CHECK(report.maxMeanIncrease == 0.0);
  CHECK(report.maxZetaProbeIncrease == 0.0);
  CHECK(report.maxSnapshotIncrease == 0.0);
  CHECK(report.identityResidual == 0.0);
}

TEST_CASE("integrate a conformally trivial factor") {
  FlowOptions opt;
  opt.tauMax = 50.0;
  const auto traj = integrate(trivialFactor(0.3), opt);
  CHECK(traj.converged);
  CHECK(traj.finalDistance < 1e-6);
  CHECK(!traj.failed);
  for (const auto& st : traj.states) {
    for (const auto& [s, diff] : st.diagnostics.zetaProbe) CHECK(std::abs(diff) < 1e-7);
  }
}

TEST_CASE("integrate a random factor") {
  FixtureRng rng(109);
  FlowOptions opt;
  opt.tauMax = 50.0;
  const auto traj = integrate(randomFactor(rng, 6), opt);
  REQUIRE(!traj.failed);
  CHECK(traj.converged);
  CHECK(traj.finalDistance < 1e-6);
  const auto report = monitorReport(traj);
  CHECK(report.maxNormalizationDrift < 1e-8);
  CHECK(report.maxMeanIncrease <= 1e-9);
  CHECK(report.maxZetaProbeIncrease <= 1e-9);
  CHECK(report.maxSnapshotIncrease <= 1e-7);
  for (std::size_t i = 1; i < traj.states.size(); ++i) {
    CHECK(traj.states[i].diagnostics.meanIntegral <= traj.states[i - 1].diagnostics.meanIntegral + 1e-9);
    CHECK(traj.states[i].factor.degree() == 6);
  }
}

TEST_CASE("identity residual is second order in the record spacing") {
  FixtureRng rng(113);
  const auto a = randomFactor(rng, 3);
  FlowOptions opt;
  opt.tauMax = 1.0;
  opt.recordStride = 10;
  opt.dt = 2e-3;
  const double coarse = monitorReport(integrate(a, opt)).identityResidual;
  opt.dt = 1e-3;
  const double fine = monitorReport(integrate(a, opt)).identityResidual;
  CHECK(coarse / fine > 3.5);
}
