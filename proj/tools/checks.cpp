#include "checks.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "steklov/errors.hpp"
#include "steklov/fixtures.hpp"
#include "steklov/flow.hpp"
#include "steklov/harmonics.hpp"
#include "steklov/spectrum.hpp"
#include "steklov/zeta.hpp"

namespace steklov::cli {

namespace {

CheckResult verdict(std::string name, double value, double tolerance, std::string detail = {}) {
  return {std::move(name), value <= tolerance, value, tolerance, std::move(detail)};
}

std::vector<Fixture> checkFixtures(const CheckContext& ctx, int maxDegree) {
  return fixtureSet(ctx.seed, 8, maxDegree);
}

CheckResult lambdaEqualsHd(const CheckContext& ctx) {
  const int N = ctx.truncation;
  const Matrix hd = hMatrix(N).entries() * dMatrix(N).entries();
  const Matrix dh = dMatrix(N).entries() * hMatrix(N).entries();
  const Matrix lambda = ctx.lambda(N).entries();
  const double r = std::max((lambda - hd).cwiseAbs().maxCoeff(), (lambda - dh).cwiseAbs().maxCoeff());
  return verdict("lambda_equals_hd", r, 1e-12);
}

CheckResult unitDiskSpectrum(const CheckContext& ctx) {
  const int N = ctx.truncation;
  Vector e0 = Vector::Zero(2 * N + 1);
  e0(N) = 1.0;
  const auto spec = spectrumOf(ctx.lambda(N), e0);
  double worst = 0.0;
  for (int k = 0; k < spec.size(); ++k) worst = std::max(worst, std::abs(spec.eigenvalues(k) - diskEigenvalue(k)));
  return verdict("unit_disk_spectrum", worst, 1e-10);
}

CheckResult productFormula(const CheckContext& ctx) {
  FixtureRng rng(ctx.seed);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const auto u = randomPolynomial(rng, 1 + i % 10);
    const auto v = randomPolynomial(rng, 10 - i % 10);
    const auto hu = hilbert(u);
    const auto hv = hilbert(v);
    const auto lhs = hilbert(multiply(u, v) + multiply(hu, hv));
    const auto rhs = multiply(u, hv) + multiply(v, hu);
    worst = std::max(worst, maxCoefficientDistance(lhs, rhs));
  }
  return verdict("product_formula", worst, 1e-10);
}

// Interior radius where truncated products of multipliers of degree d are exact.
int interior(int N, int d) { return std::max(0, N - 2 * d - 2); }

CheckResult hilbertCommutatorCheck(const CheckContext& ctx) {
  const int N = ctx.truncation;
  FixtureRng rng(ctx.seed + 1);
  const Matrix h = hMatrix(N).entries();
  const Matrix f0 = averagingMatrix(N).entries();
  double worst = 0.0;
  for (int i = 0; i < 5; ++i) {
    const auto f = randomPolynomial(rng, 2 + i);
    const Matrix mf = multOperator(f, N).entries();
    const Matrix mhf = multOperator(hilbert(f), N).entries();
    const Matrix lhs = h * mhf - mhf * h;
    const Matrix rhs = h * (h * mf - mf * h) + f0 * mf - f[0] * f0;
    worst = std::max(worst, interiorResidual(lhs, rhs, N, interior(N, f.degree())));
  }
  return verdict("hilbert_commutator_identity", worst, 1e-9);
}

CheckResult lambdaSandwichCheck(const CheckContext& ctx) {
  const int N = ctx.truncation;
  FixtureRng rng(ctx.seed + 2);
  const Matrix h = hMatrix(N).entries();
  const Matrix d = dMatrix(N).entries();
  const Matrix lambda = ctx.lambda(N).entries();
  double worst = 0.0;
  for (int i = 0; i < 5; ++i) {
    const auto f = randomPolynomial(rng, 2 + i);
    const Matrix mf = multOperator(f, N).entries();
    const Matrix mhf = multOperator(hilbert(f), N).entries();
    const Matrix lhs = lambda * (h * mhf - mhf * h) * lambda;
    const Matrix rhs = lambda * mf * lambda - d * mf * d;
    const double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
    worst = std::max(worst, interiorResidual(lhs, rhs, N, interior(N, f.degree())) / scale);
  }
  return verdict("lambda_commutator_identity", worst, 1e-9);
}

CheckResult koganVsSpectral(const CheckContext& ctx) {
  double worst = 0.0;
  for (const auto& fx : checkFixtures(ctx, 6)) {
    const auto z = zetaDiff(fx.factor, -1.0, ctx.truncation);
    worst = std::max(worst, std::abs(*z.zetaA - koganZetaMinus1(fx.factor)));
  }
  return verdict("kogan_vs_spectral", worst, 1e-5);
}

CheckResult algebraicVsSpectral(const CheckContext& ctx) {
  double worst = 0.0;
  for (const auto& fx : checkFixtures(ctx, 4)) {
    for (int m = 1; m <= 2; ++m) {
      const double spectral = zetaDiff(fx.factor, -2.0 * m, ctx.truncation).diff;
      worst = std::max(worst, std::abs(spectral - zetaInvariantAlgebraic(fx.factor, m)));
    }
  }
  return verdict("algebraic_vs_spectral", worst, 1e-5);
}

CheckResult traceSigns(const CheckContext& ctx) {
  double worst = 0.0;
  for (const auto& fx : checkFixtures(ctx, 6)) {
    const auto spec = cachedSpectrum(fx.factor, ctx.truncation);
    const auto delta = smoothingDifference(fx.factor, ctx.truncation);
    for (double s : {0.5, 1.0, 2.0, 3.0}) worst = std::max(worst, -traceFunctional(*spec, delta, s));
    for (double s : {-3.0, -2.0, -1.0, -0.5}) worst = std::max(worst, traceFunctional(*spec, delta, s));
  }
  return verdict("trace_signs", worst, 1e-8);
}

CheckResult zetaInequality(const CheckContext& ctx) {
  double worst = 0.0;
  for (const auto& fx : checkFixtures(ctx, 6)) {
    for (double s : {-3.0, -2.0, -1.5, -1.0, -0.5, 0.5, 2.0, 3.0}) {
      worst = std::max(worst, -zetaDiff(fx.factor, s, ctx.truncation).diff);
    }
  }
  return verdict("zeta_inequality", worst, 1e-8);
}

CheckResult zetaPinning(const CheckContext& ctx) {
  double worst = 0.0;
  for (const auto& fx : checkFixtures(ctx, 6)) {
    worst = std::max(worst, std::abs(*zetaDiff(fx.factor, 0.0, ctx.truncation).zetaA + 1.0));
  }
  return verdict("zeta_at_zero", worst, 1e-6);
}

CheckResult quadraticForm(const CheckContext&) {
  const auto b = TrigPolynomial::constant(1.0) + TrigPolynomial::cosine(1);
  const auto expected = TrigPolynomial::constant(-1.0) - TrigPolynomial::cosine(1);
  return verdict("quadratic_form_regression", maxCoefficientDistance(quadraticFormB(b), expected), 1e-14);
}

}  // namespace

const std::vector<CheckSpec>& checkRegistry() {
  static const std::vector<CheckSpec> registry{
      {"lambda_equals_hd", "Lambda = H D = D H as diagonal matrices", lambdaEqualsHd},
      {"unit_disk_spectrum", "Lambda has eigenvalues floor((k+1)/2)", unitDiskSpectrum},
      {"product_formula", "H(uv + Hu Hv) = u Hv + v Hu on random polynomials", productFormula},
      {"hilbert_commutator_identity", "[H, Hf] = H[H, f] + F0 f - f0 F0 on the interior block", hilbertCommutatorCheck},
      {"lambda_commutator_identity", "Lambda [H, Hf] Lambda = Lambda f Lambda - D f D", lambdaSandwichCheck},
      {"kogan_vs_spectral", "closed-form zeta(-1) matches the spectral value", koganVsSpectral},
      {"algebraic_vs_spectral", "algebraic Z_1, Z_2 match spectral zeta(-2), zeta(-4)", algebraicVsSpectral},
      {"trace_signs", "Tr[(Lambda_a+P0)^(s-1)(Lambda_a^2-D_a^2)] has the sign of s", traceSigns},
      {"zeta_inequality", "zeta_a(s) - 2 zeta_R(s) >= 0 on the s-grid", zetaInequality},
      {"zeta_at_zero", "zeta_a(0) = -1", zetaPinning},
      {"quadratic_form_regression", "B(1 + cos t) = -1 - cos t", quadraticForm},
  };
  return registry;
}

std::vector<CheckResult> runChecks(const CheckContext& context) {
  std::vector<CheckResult> results;
  for (const auto& check : checkRegistry()) {
    try {
      results.push_back(check.run(context));
    } catch (const Error& e) {
      results.push_back({check.name, false, std::nan(""), 0.0, e.what()});
    }
  }
  return results;
}

CheckContext withCorruptedLambda(CheckContext context) {
  context.lambda = [](int N) {
    Matrix m = lambdaMatrix(N).entries();
    m(N + 1, N + 1) += 0.5;
    return TruncatedOperator(N, std::move(m), true);
  };
  return context;
}

}  // namespace steklov::cli
