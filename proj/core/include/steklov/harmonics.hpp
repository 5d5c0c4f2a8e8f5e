#pragma once

#include <span>
#include <vector>

#include "steklov/conformal_factor.hpp"
#include "steklov/trig_polynomial.hpp"

namespace steklov {

// Exact coefficient convolution; degree deg f + deg g.
TrigPolynomial multiply(const TrigPolynomial& f, const TrigPolynomial& g);

// D = -i d/dθ, i.e. ĉ_k ↦ k ĉ_k.
TrigPolynomial derivativeD(const TrigPolynomial& f);
// d/dθ = iD.
TrigPolynomial realDerivative(const TrigPolynomial& f);
// ĉ_k ↦ sgn(k) ĉ_k.
TrigPolynomial hilbert(const TrigPolynomial& f);
// ĉ_k ↦ |k| ĉ_k.
TrigPolynomial applyLambda(const TrigPolynomial& f);
// Positive-frequency part Σ_{k>0} ĉ_k e^{ikθ}.
TrigPolynomial positivePart(const TrigPolynomial& f);

// Pointwise 1/f on a uniform grid, transformed back and truncated.
// gridSize 0 picks a default; otherwise it must be ≥ 4·(deg f + outputDegree).
TrigPolynomial reciprocal(const TrigPolynomial& f, int gridSize, int outputDegree);
// Pointwise f^p for positive f, same grid rules as reciprocal.
TrigPolynomial sampledPower(const TrigPolynomial& f, double exponent, int gridSize, int outputDegree);

// Real series through grid samples at θ_j = 2πj/M (M/2 - 1 modes by default).
TrigPolynomial fromGridSamples(std::span<const double> samples, int outputDegree = -1);

// c·f with (1/2π)∫ (c f)^{-1} = 1.
ConformalFactor normalize(const TrigPolynomial& f, int gridSize = 0, double tolerance = kNormalizationTolerance);

// ∫_0^{2π} f dθ.
double meanIntegral(const TrigPolynomial& f);

// Σ of |ĉ_k|² over the top tenth of the modes divided by the total.
double tailMass(const TrigPolynomial& f);

ConformalFactor mobiusReparameterize(const ConformalFactor& a, const MobiusParameter& m, int outputDegree);

// Normalized |Φ'(e^{iθ})|^{-1} for the polynomial Φ(z) = Σ c_j z^j.
ConformalFactor factorFromConformalMap(std::span<const Complex> mapCoeffs, int outputDegree);

}  // namespace steklov
