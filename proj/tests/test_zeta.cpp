#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "steklov/dtn.hpp"
#include "steklov/errors.hpp"
#include "steklov/fixtures.hpp"
#include "steklov/harmonics.hpp"
#include "steklov/spectrum.hpp"
#include "steklov/zeta.hpp"

using namespace steklov;

namespace {

constexpr int kN = 64;

bool raises(const std::function<void()>& fn, ErrorCode code) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

double relative(double x, double y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); }

// α_τ with α_τ^{-1} = a^{-1} - τ (g/a)', the deformation generated by a fixed g.
ConformalFactor deformed(const ConformalFactor& a, const TrigPolynomial& g, double tau, int degree) {
  const auto inv = reciprocal(a.series(), 512, degree);
  const auto gOverA = multiply(g, inv).truncated(degree);
  const auto alphaInv = inv - tau * realDerivative(gOverA);
  return normalize(reciprocal(alphaInv, 512, degree));
}

}  // namespace

TEST_CASE("Riemann zeta") {
  CHECK(riemannZeta(0.0) == -0.5);
  CHECK(riemannZeta(-1.0) == -1.0 / 12.0);
  CHECK(riemannZeta(-2.0) == 0.0);
  CHECK(riemannZeta(-4.0) == 0.0);
  // Bernoulli values ζ(-n) = -B_{n+1}/(n+1).
  CHECK(relative(riemannZeta(-3.0), 1.0 / 120.0) < 1e-12);
  CHECK(relative(riemannZeta(-5.0), -1.0 / 252.0) < 1e-12);
  CHECK(relative(riemannZeta(-7.0), 1.0 / 240.0) < 1e-12);
  CHECK(std::abs(riemannZeta(2.0) / (kPi * kPi / 6.0) - 1.0) < 1e-13);
  CHECK(std::abs(riemannZeta(4.0) / (std::pow(kPi, 4) / 90.0) - 1.0) < 1e-13);
  CHECK(std::abs(riemannZeta(3.0) / 1.2020569031595942854 - 1.0) < 1e-13);
  CHECK(std::abs(riemannZeta(0.5) / -1.4603545088095868129 - 1.0) < 1e-12);
  CHECK(std::abs(riemannZeta(-0.5) / -0.20788622497735456602 - 1.0) < 1e-12);
  CHECK(std::abs(riemannZeta(-1.5) / -0.025485201889833035950 - 1.0) < 1e-12);
  CHECK(std::abs(riemannZeta(30.0) - 1.0 - std::pow(2.0, -30) - std::pow(3.0, -30)) < 1e-15);

  // Partial sums with the Euler–Maclaurin tail at s = 2.5.
  const double s = 2.5;
  double partial = 0.0;
  const int n = 20000;
  for (int k = 1; k < n; ++k) partial += std::pow(k, -s);
  partial += std::pow(n, 1 - s) / (s - 1) + 0.5 * std::pow(n, -s) + s / 12.0 * std::pow(n, -s - 1);
  CHECK(std::abs(riemannZeta(s) / partial - 1.0) < 1e-12);

  CHECK(raises([] { riemannZeta(1.0); }, ErrorCode::PoleAtOne));
}

TEST_CASE("zeta difference") {
  for (double s : {-2.0, 0.0, 0.5, 1.0, 3.0}) {
    const auto z = zetaDiff(ConformalFactor::one(), s, kN);
    CHECK(z.diff == 0.0);
    CHECK(z.zetaA.has_value() == (s != 1.0));
  }
  const auto trivial = trivialFactor(0.3, 0.0);
  for (double s : {-2.0, -0.5, 0.5, 3.0}) CHECK(std::abs(zetaDiff(trivial, s, kN).diff) < 1e-7);

  FixtureRng rng(61);
  const auto a = randomFactor(rng, 3);
  const auto z = zetaDiff(a, 2.0, kN);
  CHECK(std::abs(*z.zetaA - (z.diff + 2.0 * riemannZeta(2.0))) < 1e-14);
  CHECK(z.tailEstimate < 1e-8);
  CHECK(std::abs(*zetaDiff(a, 0.0, kN).zetaA + 1.0) < 1e-6);
}

TEST_CASE("Kogan's formula") {
  CHECK(std::abs(koganZetaMinus1(ConformalFactor::one()) + 1.0 / 6.0) < 1e-15);
  CHECK(std::abs(koganZetaMinus1(trivialFactor(0.3)) + 1.0 / 6.0) < 1e-9);

  FixtureRng rng(67);
  for (int deg : {2, 4, 6}) {
    const auto a = randomFactor(rng, deg);
    const auto da = realDerivative(a.series());
    const double direct = oracle::mean([&](double t) {
      const double v = oracle::evaluate(a.series(), t);
      const double d = oracle::evaluate(da, t);
      return (d * d / v - v) / 6.0;
    });
    CHECK(std::abs(koganZetaMinus1(a) - direct) < 1e-12);
    CHECK(std::abs(koganZetaMinus1(a) - *zetaDiff(a, -1.0, kN).zetaA) < 1e-5);
  }
}

TEST_CASE("algebraic zeta invariants") {
  for (int m : {1, 2, 3}) CHECK(zetaInvariantAlgebraic(ConformalFactor::one(), m) == 0.0);
  CHECK(std::abs(zetaInvariantAlgebraic(trivialFactor(0.4, 0.2), 1)) < 1e-9);

  const auto b = normalize(TrigPolynomial::constant(1.0) + TrigPolynomial::cosine(2, 0.2));
  CHECK(std::abs(zetaInvariantAlgebraic(b, 1) - zetaDiff(b, -2.0, kN).diff) < 1e-5);

  FixtureRng rng(71);
  for (int deg : {2, 3, 4}) {
    const auto a = randomFactor(rng, deg);
    for (int m : {1, 2}) CHECK(std::abs(zetaInvariantAlgebraic(a, m) - zetaDiff(a, -2.0 * m, kN).diff) < 1e-5);
    // Homogeneous of degree 2m in the coefficients.
    const auto scaled = a.series() * 2.0;
    CHECK(relative(zetaInvariantAlgebraic(scaled, 2), 16.0 * zetaInvariantAlgebraic(a, 2)) < 1e-10);
  }

  CHECK(raises([] {
          FixtureRng r(1);
          zetaInvariantAlgebraic(randomFactor(r, 6), 3, 1e3);
        }, ErrorCode::ComplexityLimit));
}

TEST_CASE("trace functional signs") {
  for (double s : {-2.0, 2.0}) CHECK(traceFunctional(ConformalFactor::one(), s, kN) == 0.0);
  FixtureRng rng(73);
  for (int deg : {2, 5}) {
    const auto a = randomFactor(rng, deg);
    CHECK(traceFunctional(a, 2.0, kN) > 1e-8);
    CHECK(traceFunctional(a, 0.5, kN) > 1e-8);
    CHECK(traceFunctional(a, -2.0, kN) < -1e-8);
    CHECK(traceFunctional(a, -0.5, kN) < -1e-8);
    for (double s : {-3.0, -1.0, 0.5, 2.0, 3.0}) CHECK(firstVariationFlow(a, s, kN) <= 1e-8);
  }
  for (double s : {-2.0, 0.5, 3.0}) CHECK(std::abs(firstVariationFlow(trivialFactor(0.5), s, kN)) < 1e-7);
}

TEST_CASE("general first variation") {
  FixtureRng rng(79);
  const auto a = randomFactor(rng, 3);

  // g = iHa reproduces the flow formula.
  auto g = hilbert(a.series()) * Complex(0.0, 1.0);
  for (double s : {-2.0, 0.5, 2.0}) {
    CHECK(std::abs(firstVariationGeneral(a, g, s, kN) - firstVariationFlow(a, s, kN)) < 1e-8);
  }
  CHECK(firstVariationGeneral(a, TrigPolynomial(0), 2.0, kN) == 0.0);
  CHECK(raises([&] { firstVariationGeneral(a, TrigPolynomial::constant(0.1), 2.0, kN); }, ErrorCode::MeanNotZero));

  // Centered difference of zeta_diff along the deformation generated by g = cos θ + 0.5 sin 2θ.
  const auto dir = TrigPolynomial::cosine(1) + TrigPolynomial::sine(2, 0.5);
  const double h = 1e-3;
  const double s = 2.0;
  const double plus = zetaDiff(deformed(a, dir, h, 24), s, kN).diff;
  const double minus = zetaDiff(deformed(a, dir, -h, 24), s, kN).diff;
  const double fd = (plus - minus) / (2.0 * h);
  CHECK(std::abs(fd - firstVariationGeneral(a, dir, s, kN)) < 1e-5);
}

TEST_CASE("second variation at the constant factor") {
  for (double s : {0.5, 2.0, 3.0}) {
    CHECK(std::abs(secondVariationAtOne(TrigPolynomial::cosine(2), s) - s * s / 2.0) < 1e-14);
    CHECK(std::abs(secondVariationAtOne(TrigPolynomial::cosine(3), s) - 4.0 * s / 3.0 * (1.0 - std::pow(2.0, -s))) <
          1e-14);
  }
  CHECK(secondVariationAtOne(TrigPolynomial(0), 2.0) == 0.0);
  CHECK(raises([] { secondVariationAtOne(TrigPolynomial::constant(1.0), 2.0); }, ErrorCode::MeanNotZero));

  FixtureRng rng(83);
  for (int i = 0; i < 5; ++i) {
    auto beta = randomPolynomial(rng, 5);
    beta.set(0, 0.0);
    CHECK(secondVariationAtOne(beta, 2.0) >= 0.0);
  }
}

TEST_CASE("gamma factor and Gauss–Jacobi rule") {
  CHECK(std::abs(gammaFactor(0.5) - 1.0 / kPi) < 1e-15);
  for (double z : {0.25, 0.5, 0.75}) {
    const auto rule = gaussJacobiUnit(z, 12);
    double mass = 0.0;
    double first = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      CHECK(rule.nodes[i] > 0.0);
      CHECK(rule.nodes[i] < 1.0);
      mass += rule.weights[i];
      first += rule.weights[i] * rule.nodes[i];
    }
    // ∫ t^{-z}(1-t)^{z-1} dt = π/sin(πz) and ∫ t·t^{-z}(1-t)^{z-1} dt = (1-z)π/sin(πz).
    const double b = kPi / std::sin(kPi * z);
    CHECK(std::abs(mass / b - 1.0) < 1e-13);
    CHECK(std::abs(first / ((1.0 - z) * b) - 1.0) < 1e-13);
  }
}

TEST_CASE("powers via the resolvent integral") {
  const int N = 24;
  const auto disk = powerViaResolvent(ConformalFactor::one(), 0.5, N, 60);
  for (int k = -N; k <= N; ++k) {
    CHECK(std::abs(disk.power(k, k) - 1.0 / std::max(std::abs(k), 1)) < 1e-10);
  }

  FixtureRng rng(89);
  const auto a = randomFactor(rng, 4);
  const auto p = powerViaResolvent(a, 0.3, N, 200);
  CHECK(p.eigenDeviation < 1e-6);

  const double e10 = powerViaResolvent(a, 0.3, N, 10, 0.0).eigenDeviation;
  const double e20 = powerViaResolvent(a, 0.3, N, 20, 0.0).eigenDeviation;
  const double e40 = powerViaResolvent(a, 0.3, N, 40, 0.0).eigenDeviation;
  CHECK(e10 > 4.0 * e20);
  CHECK((e20 > 4.0 * e40 || e40 < 1e-10));

  CHECK(raises([&] { powerViaResolvent(a, 0.3, N, 2); }, ErrorCode::QuadratureBudget));
  CHECK(raises([&] { powerViaResolvent(a, 1.2, N, 20); }, ErrorCode::InvalidArgument));
}

TEST_CASE("compact set snapshot") {
  const auto one = compactSetSnapshot(ConformalFactor::one(), 2);
  CHECK(one.hatB0 == 1.0);
  CHECK(std::abs(one.zetaMinus1 + 1.0 / 6.0) < 1e-15);
  CHECK(one.zMinus2m.size() == 2);
  CHECK(one.zMinus2m[0] == 0.0);
  CHECK(one.zMinus2m[1] == 0.0);

  FixtureRng rng(97);
  const auto a = randomFactor(rng, 3);
  const auto snap = compactSetSnapshot(a, 2);
  CHECK(snap.hatB0 == meanIntegral(a.series()) / kTwoPi);
  CHECK(snap.zMinus2m[0] > 0.0);
}
