#include "steklov/harmonics.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "grid.hpp"
#include "steklov/diagnostics.hpp"
#include "steklov/errors.hpp"

namespace steklov {

TrigPolynomial multiply(const TrigPolynomial& f, const TrigPolynomial& g) {
  const int nf = f.degree();
  const int ng = g.degree();
  std::vector<Complex> out(static_cast<std::size_t>(2 * (nf + ng) + 1), Complex{});
  const auto cf = f.coefficients();
  const auto cg = g.coefficients();
  for (int i = 0; i <= 2 * nf; ++i) {
    if (cf[static_cast<std::size_t>(i)] == Complex{}) continue;
    for (int j = 0; j <= 2 * ng; ++j) {
      out[static_cast<std::size_t>(i + j)] += cf[static_cast<std::size_t>(i)] * cg[static_cast<std::size_t>(j)];
    }
  }
  return TrigPolynomial(nf + ng, std::move(out));
}

namespace {

template <typename Multiplier>
TrigPolynomial applyMultiplier(const TrigPolynomial& f, Multiplier&& m) {
  TrigPolynomial out(f.degree());
  for (int k = -f.degree(); k <= f.degree(); ++k) out.set(k, m(k) * f[k]);
  return out;
}

int sgn(int k) { return (k > 0) - (k < 0); }

void warnOnTail(const TrigPolynomial& f, std::string_view what) {
  const double tail = tailMass(f);
  if (tail > kTailMassWarning) warn(fmt::format("{}: tail mass {:.2e} at degree {}", what, tail, f.degree()));
}

int checkedGrid(int gridSize, int inputDegree, int outputDegree) {
  const int needed = 4 * (inputDegree + outputDegree);
  if (gridSize == 0) return std::max(grid::defaultSize(std::max(inputDegree, outputDegree)), grid::nextPowerOfTwo(needed));
  if (gridSize < needed || gridSize < 2 * outputDegree + 1) {
    throw Error(ErrorCode::AliasingRisk,
                fmt::format("grid size {} too small for input degree {} and output degree {}", gridSize,
                            inputDegree, outputDegree));
  }
  return gridSize;
}

std::vector<double> positiveSamples(const TrigPolynomial& f, int gridSize) {
  auto values = f.sample(gridSize);
  double scale = 0.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  for (double v : values) {
    if (!(v > 1e-9 * scale)) {
      throw Error(ErrorCode::NonPositiveSample, fmt::format("sample {:.3e} is not positive", v));
    }
  }
  return values;
}

}  // namespace

TrigPolynomial derivativeD(const TrigPolynomial& f) {
  return applyMultiplier(f, [](int k) { return Complex(k, 0.0); });
}

TrigPolynomial realDerivative(const TrigPolynomial& f) {
  return applyMultiplier(f, [](int k) { return Complex(0.0, k); });
}

TrigPolynomial hilbert(const TrigPolynomial& f) {
  return applyMultiplier(f, [](int k) { return Complex(sgn(k), 0.0); });
}

TrigPolynomial applyLambda(const TrigPolynomial& f) {
  return applyMultiplier(f, [](int k) { return Complex(std::abs(k), 0.0); });
}

TrigPolynomial positivePart(const TrigPolynomial& f) {
  return applyMultiplier(f, [](int k) { return Complex(k > 0 ? 1.0 : 0.0, 0.0); });
}

TrigPolynomial sampledPower(const TrigPolynomial& f, double exponent, int gridSize, int outputDegree) {
  const int m = checkedGrid(gridSize, f.degree(), outputDegree);
  auto values = positiveSamples(f, m);
  for (double& v : values) v = std::pow(v, exponent);
  auto out = grid::seriesFromSamples(std::span<const double>(values), outputDegree);
  warnOnTail(out, fmt::format("power {}", exponent));
  return out;
}

TrigPolynomial reciprocal(const TrigPolynomial& f, int gridSize, int outputDegree) {
  const int m = checkedGrid(gridSize, f.degree(), outputDegree);
  auto values = positiveSamples(f, m);
  for (double& v : values) v = 1.0 / v;
  auto out = grid::seriesFromSamples(std::span<const double>(values), outputDegree);
  warnOnTail(out, "reciprocal");
  return out;
}

TrigPolynomial fromGridSamples(std::span<const double> samples, int outputDegree) {
  const int m = static_cast<int>(samples.size());
  if (m < 3) throw Error(ErrorCode::InvalidArgument, "need at least 3 grid samples");
  if (outputDegree < 0) outputDegree = (m - 1) / 2;
  return grid::seriesFromSamples(samples, outputDegree);
}

ConformalFactor normalize(const TrigPolynomial& f, int gridSize, double tolerance) {
  if (gridSize == 0) gridSize = grid::defaultSize(f.degree());
  positiveSamples(f, gridSize);
  const double c = grid::adaptiveMean(f, [](double v) { return 1.0 / v; }, gridSize).value;
  return ConformalFactor(f * c, tolerance, gridSize, {c, tailMass(f)});
}

double meanIntegral(const TrigPolynomial& f) { return kTwoPi * f[0].real(); }

double tailMass(const TrigPolynomial& f) {
  const int n = f.degree();
  if (n == 0) return 0.0;
  const int top = std::max(1, n / 10);
  double tail = 0.0;
  for (int k = n - top + 1; k <= n; ++k) tail += std::norm(f[k]) + std::norm(f[-k]);
  const double total = f.squaredNorm();
  return total > 0.0 ? tail / total : 0.0;
}

ConformalFactor mobiusReparameterize(const ConformalFactor& a, const MobiusParameter& m, int outputDegree) {
  const int size = std::max(grid::defaultSize(outputDegree), grid::nextPowerOfTwo(4 * (a.degree() + outputDegree)));
  const Complex w = m.w();
  const double shrink = 1.0 - std::norm(w);
  std::vector<double> values(static_cast<std::size_t>(size));
  for (int j = 0; j < size; ++j) {
    const double theta = kTwoPi * j / size;
    const Complex z = std::polar(1.0, m.orientation() == 1 ? theta : -theta);
    const Complex image = (z - w) / (1.0 - std::conj(w) * z);
    const double speed = shrink / std::norm(1.0 - std::conj(w) * z);
    values[static_cast<std::size_t>(j)] = a(std::arg(image)) / speed;
  }
  auto b = grid::seriesFromSamples(std::span<const double>(values), outputDegree);
  const double tail = tailMass(b);
  if (tail > kTailMassWarning) warn(fmt::format("Mobius reparameterization: tail mass {:.2e}", tail));
  return ConformalFactor(std::move(b), a.tolerance(), 0, {1.0, tail});
}

ConformalFactor factorFromConformalMap(std::span<const Complex> mapCoeffs, int outputDegree) {
  const int deg = static_cast<int>(mapCoeffs.size()) - 1;
  if (deg < 1) throw Error(ErrorCode::DegenerateMap, "map must have degree at least one");
  const int size = std::max(grid::defaultSize(std::max(outputDegree, deg)),
                            grid::nextPowerOfTwo(4 * (deg + outputDegree)));
  std::vector<Complex> deriv(static_cast<std::size_t>(size));
  double maxModulus = 0.0;
  for (int j = 0; j < size; ++j) {
    const Complex z = std::polar(1.0, kTwoPi * j / size);
    Complex d = 0.0;
    for (int p = deg; p >= 1; --p) d = d * z + static_cast<double>(p) * mapCoeffs[static_cast<std::size_t>(p)];
    deriv[static_cast<std::size_t>(j)] = d;
    maxModulus = std::max(maxModulus, std::abs(d));
  }
  double minModulus = maxModulus;
  double winding = 0.0;
  for (int j = 0; j < size; ++j) {
    const Complex d = deriv[static_cast<std::size_t>(j)];
    minModulus = std::min(minModulus, std::abs(d));
    winding += std::arg(deriv[static_cast<std::size_t>((j + 1) % size)] / d);
  }
  if (!(minModulus > 1e-8 * maxModulus)) {
    throw Error(ErrorCode::DegenerateMap, fmt::format("|Phi'| reaches {:.3e} on the circle", minModulus));
  }
  const long turns = std::lround(winding / kTwoPi);
  if (turns != 0) {
    throw Error(ErrorCode::DegenerateMap, fmt::format("Phi' has {} zeros in the disk", turns));
  }
  std::vector<double> values(static_cast<std::size_t>(size));
  for (int j = 0; j < size; ++j) values[static_cast<std::size_t>(j)] = 1.0 / std::abs(deriv[static_cast<std::size_t>(j)]);
  auto raw = grid::seriesFromSamples(std::span<const double>(values), outputDegree);
  const double tail = tailMass(raw);
  if (tail > kTailMassWarning) warn(fmt::format("conformal map factor: tail mass {:.2e}", tail));
  return normalize(raw);
}

}  // namespace steklov
