#pragma once

#include <optional>
#include <vector>

#include "steklov/conformal_factor.hpp"
#include "steklov/dtn.hpp"
#include "steklov/spectrum.hpp"

namespace steklov {

// ζ_R(s) for real s ≠ 1.
double riemannZeta(double s);

struct ZetaValue {
  double s = 0.0;
  double diff = 0.0;             // ζ_a(s) - 2ζ_R(s), defined for every real s
  std::optional<double> zetaA;   // absent at the pole s = 1
  double tailEstimate = 0.0;     // |λ_K^{-s} - ⌊(K+1)/2⌋^{-s}|
};

ZetaValue zetaDiff(const SteklovSpectrum& spec, double s);
ZetaValue zetaDiff(const ConformalFactor& a, double s, int N);

// ζ_a(-1) = (1/12π)∫((a')²/a - a) dθ.
double koganZetaMinus1(const ConformalFactor& a);

inline constexpr double kDefaultInvariantBudget = 5e7;

// ζ_a(-2m) from the finite Fourier-coefficient formula.
double zetaInvariantAlgebraic(const ConformalFactor& a, int m, double budget = kDefaultInvariantBudget);
double zetaInvariantAlgebraic(const TrigPolynomial& b, int m, double budget = kDefaultInvariantBudget);

// Tr[(Λ_a+P_0)^{s-1}(Λ_a² - D_a²)] over the trusted eigenpairs.
double traceFunctional(const SteklovSpectrum& spec, const TruncatedOperator& smoothing, double s);
double traceFunctional(const ConformalFactor& a, double s, int N);

// d/dτ ζ_{α_τ}(s) at τ = 0 along the flow direction g = iHa.
double firstVariationFlow(const ConformalFactor& a, double s, int N);

// d/dτ ζ_{α_τ}(s) at τ = 0 for the deformation with (g/α)' = -∂_τ α^{-1}.
double firstVariationGeneral(const ConformalFactor& a, const TrigPolynomial& g, double s, int N);

// Second derivative of ζ_{α_τ}(s) at a = 1 for a variation with
// ∂_τ α|_0 = β, β real with zero mean.
double secondVariationAtOne(const TrigPolynomial& beta, double s);

// sin(πz)/π.
double gammaFactor(double z);

// Σ_k μ_k^p Ψ_k Ψ_k* with μ_0 = 1, i.e. (Λ_a + P_0)^p.
Matrix eigenPower(const SteklovSpectrum& spec, double p);

struct ResolventPower {
  TruncatedOperator power;     // (Λ_a + P_0)^{-2z}
  double errorEstimate = 0.0;  // max-entry change against the half-size rule
  double eigenDeviation = 0.0; // max-entry distance to eigenPower(spec, -2z)
};

// (Λ_a+P_0)^{-2z} = γ(z)∫_0^∞ λ^{-z}(Λ_a² + P_0 + λ)^{-1} dλ by Gauss–Jacobi
// quadrature after λ = c·t/(1-t). Throws QuadratureBudget when the error
// estimate exceeds `tolerance` (tolerance ≤ 0 disables the check).
ResolventPower powerViaResolvent(const ConformalFactor& a, double z, int N, int quadraturePoints,
                                 double tolerance = 1e-6);

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
// Nodes and weights on (0,1) for the weight t^{-z}(1-t)^{z-1}.
GaussRule gaussJacobiUnit(double z, int points);

struct CompactSetSnapshot {
  double hatB0 = 0.0;
  double zetaMinus1 = 0.0;
  std::vector<double> zMinus2m;
};

CompactSetSnapshot compactSetSnapshot(const ConformalFactor& a, int M);

}  // namespace steklov
