#pragma once

#include <functional>
#include <span>
#include <vector>

#include "steklov/trig_polynomial.hpp"

namespace steklov::grid {

int nextPowerOfTwo(int n);
bool isPowerOfTwo(int n);

// Default oversampled grid for a series of the given working degree.
int defaultSize(int degree);

// Unscaled forward DFT: X_k = Σ_j x_j e^{-2πijk/M}.
std::vector<Complex> forward(std::span<const Complex> samples);
// Inverse DFT including the 1/M factor is NOT applied: x_j = Σ_k X_k e^{2πijk/M}.
std::vector<Complex> backward(std::span<const Complex> spectrum);

// Series of degree `outputDegree` interpolating samples on a uniform grid.
TrigPolynomial seriesFromSamples(std::span<const Complex> samples, int outputDegree);
TrigPolynomial seriesFromSamples(std::span<const double> samples, int outputDegree);

// Spectral derivative d/dθ of grid samples (band-limited to M/2-1 modes).
std::vector<Complex> differentiate(std::span<const Complex> samples);

// (1/2π)∫ fn(f(θ)) dθ by the periodic trapezoid rule, doubling the grid
// from `startSize` until successive values agree to ~1e-14 relative.
// Returns the mean and the grid size used.
struct MeanResult {
  double value;
  int gridSize;
};
MeanResult adaptiveMean(const TrigPolynomial& f, const std::function<double(double)>& fn, int startSize);
// Same doubling loop for an arbitrary grid rule `meanAt(M)`.
MeanResult refineUntilStable(const std::function<double(int)>& meanAt, int startSize);

}  // namespace steklov::grid
