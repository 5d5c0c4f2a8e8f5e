#include "steklov/conformal_factor.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "grid.hpp"
#include "steklov/errors.hpp"

namespace steklov {

namespace {

constexpr double kPositivityMargin = 1e-9;

}  // namespace

double normalizationDefect(const TrigPolynomial& a, int startGrid) {
  if (startGrid <= 0) startGrid = grid::defaultSize(a.degree());
  const auto mean = grid::adaptiveMean(a, [](double v) { return 1.0 / v; }, startGrid);
  return mean.value - 1.0;
}

ConformalFactor::ConformalFactor(TrigPolynomial series, double tolerance, int gridSize, FactorProvenance provenance)
    : series_(std::move(series)), gridSize_(gridSize), tolerance_(tolerance), provenance_(provenance) {
  if (gridSize_ == 0) gridSize_ = grid::defaultSize(series_.degree());
  if (!grid::isPowerOfTwo(gridSize_)) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("grid size {} is not a power of two", gridSize_));
  }
  if (!series_.isReal()) throw Error(ErrorCode::InvalidArgument, "conformal factor must be real");
  // Snap the conjugate symmetry so later products stay exactly real.
  for (int k = 1; k <= series_.degree(); ++k) {
    const Complex avg = 0.5 * (series_[k] + std::conj(series_[-k]));
    series_.set(k, avg);
    series_.set(-k, std::conj(avg));
  }
  series_.set(0, series_[0].real());

  const auto values = series_.sample(gridSize_);
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  minValue_ = *lo;
  maxValue_ = *hi;
  const double scale = std::max(std::abs(minValue_), std::abs(maxValue_));
  if (!(minValue_ > kPositivityMargin * scale)) {
    throw Error(ErrorCode::NonPositiveSample, fmt::format("sampled minimum {:.3e} is not positive", minValue_));
  }
  residual_ = std::abs(normalizationDefect(series_, gridSize_));
  if (!(residual_ < tolerance_)) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("normalization residual {:.3e} exceeds tolerance {:.1e}", residual_, tolerance_));
  }
}

ConformalFactor ConformalFactor::one() { return ConformalFactor(TrigPolynomial::constant(1.0)); }

MobiusParameter::MobiusParameter(Complex w, int orientation) : w_(w), orientation_(orientation) {
  if (!(std::abs(w) < 1.0)) throw Error(ErrorCode::InvalidArgument, "Mobius parameter must satisfy |w| < 1");
  if (orientation != 1 && orientation != -1) throw Error(ErrorCode::InvalidArgument, "orientation must be +1 or -1");
}

MobiusParameter MobiusParameter::inverse() const {
  // (Ψ_w ∘ conj)^{-1} = conj ∘ Ψ_{-w} = Ψ_{-conj(w)} ∘ conj
  return orientation_ == 1 ? MobiusParameter(-w_, 1) : MobiusParameter(-std::conj(w_), -1);
}

}  // namespace steklov
