#pragma once

#include "steklov/trig_polynomial.hpp"

namespace steklov {

inline constexpr double kNormalizationTolerance = 1e-10;

struct FactorProvenance {
  double scale = 1.0;     // c from normalize(); 1 when built directly
  double tailMass = 0.0;  // tail diagnostic of the producing operation
};

// Positive real series a with (1/2π)∫ a^{-1} dθ = 1.
//
// Construction samples the series on a power-of-two grid, rejects it if the
// sampled minimum is not above 1e-9·max|a| and measures the normalization
// residual by grid quadrature refined until stable.
class ConformalFactor {
 public:
  explicit ConformalFactor(TrigPolynomial series, double tolerance = kNormalizationTolerance, int gridSize = 0,
                           FactorProvenance provenance = {});

  static ConformalFactor one();

  const TrigPolynomial& series() const { return series_; }
  int degree() const { return series_.degree(); }
  int gridSize() const { return gridSize_; }
  double minValue() const { return minValue_; }
  double maxValue() const { return maxValue_; }
  double normalizationResidual() const { return residual_; }
  double tolerance() const { return tolerance_; }
  double scale() const { return provenance_.scale; }
  double tailMass() const { return provenance_.tailMass; }

  double operator()(double theta) const { return series_.evaluate(theta); }

 private:
  TrigPolynomial series_;
  int gridSize_;
  double minValue_ = 0.0;
  double maxValue_ = 0.0;
  double residual_ = 0.0;
  double tolerance_;
  FactorProvenance provenance_;
};

// Disk automorphism z ↦ (z - w)/(1 - conj(w) z), optionally preceded by
// complex conjugation (orientation -1).
class MobiusParameter {
 public:
  explicit MobiusParameter(Complex w, int orientation = 1);
  Complex w() const { return w_; }
  int orientation() const { return orientation_; }
  MobiusParameter inverse() const;

 private:
  Complex w_;
  int orientation_;
};

// (1/2π)∫ a^{-1} dθ - 1 for a positive series.
double normalizationDefect(const TrigPolynomial& a, int startGrid = 0);

}  // namespace steklov
