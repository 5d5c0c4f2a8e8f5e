#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "grid.hpp"
#include "steklov/errors.hpp"
#include "steklov/spectrum.hpp"

namespace steklov {

DaEigenbasis::DaEigenbasis(const ConformalFactor& a, int N, int gridSize) : truncation_(N) {
  // φ_N oscillates at up to N·max(a^{-1}) per radian.
  const double speed = std::max(1.0, 1.0 / a.minValue());
  const int needed = static_cast<int>(std::ceil(8.0 * N * speed)) + 4 * a.degree();
  gridSize_ = gridSize > 0 ? gridSize : std::max(grid::defaultSize(N), grid::nextPowerOfTwo(needed));
  const int m = gridSize_;

  const auto values = a.series().sample(m);
  std::vector<Complex> inv(static_cast<std::size_t>(m));
  amplitude_.resize(m);
  for (int j = 0; j < m; ++j) {
    const double v = values[static_cast<std::size_t>(j)];
    if (!(v > 0.0)) throw Error(ErrorCode::NonPositiveSample, fmt::format("sample {:.3e} is not positive", v));
    inv[static_cast<std::size_t>(j)] = 1.0 / v;
    amplitude_(j) = 1.0 / std::sqrt(kTwoPi * v);
  }

  // Antiderivative of a^{-1}: r̂_0 θ + Σ_{k≠0} r̂_k (e^{ikθ} - 1)/(ik).
  auto spectrum = grid::forward(inv);
  const double mean = spectrum[0].real() / m;
  std::vector<Complex> integrated(static_cast<std::size_t>(m), Complex{});
  Complex offset = 0.0;
  for (int j = 1; j < m; ++j) {
    const int k = j <= m / 2 ? j : j - m;
    if (2 * std::abs(k) == m) continue;
    const Complex c = spectrum[static_cast<std::size_t>(j)] / static_cast<double>(m) / Complex(0.0, k);
    integrated[static_cast<std::size_t>(j)] = c;
    offset += c;
  }
  const auto periodicPart = grid::backward(integrated);
  phase_.resize(m);
  for (int j = 0; j < m; ++j) {
    phase_(j) = mean * kTwoPi * j / m + (periodicPart[static_cast<std::size_t>(j)] - offset).real();
  }
  periodicity_ = kTwoPi * std::abs(mean - 1.0);

  modes_.resize(2 * N + 1, 2 * N + 1);
  const double norm = std::sqrt(kTwoPi) / m;
  for (int n = -N; n <= N; ++n) {
    const Eigen::VectorXcd s = samples(n);
    const auto coeffs = grid::forward(std::span<const Complex>(s.data(), static_cast<std::size_t>(m)));
    for (int k = -N; k <= N; ++k) modes_(k + N, n + N) = coeffs[static_cast<std::size_t>((k + m) % m)] * norm;
  }
}

Eigen::VectorXcd DaEigenbasis::samples(int n) const {
  Eigen::VectorXcd out(gridSize_);
  for (int j = 0; j < gridSize_; ++j) out(j) = amplitude_(j) * std::polar(1.0, n * phase_(j));
  return out;
}

Complex DaEigenbasis::innerProduct(int n, int m) const {
  return samples(m).dot(samples(n)) * (kTwoPi / gridSize_);
}

double eigenAlignmentResidual(const SteklovSpectrum& spec, const DaEigenbasis& basis, int k) {
  if (k < 0 || k > spec.trustHorizon) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("index {} outside trust horizon {}", k, spec.trustHorizon));
  }
  const int n = diskEigenvalue(k);
  Matrix span(spec.eigenvectors.rows(), n == 0 ? 1 : 2);
  span.col(0) = basis.modeVector(n);
  if (n != 0) span.col(1) = basis.modeVector(-n);
  const Eigen::HouseholderQR<Matrix> qr(span);
  const Matrix q = qr.householderQ() * Matrix::Identity(span.rows(), span.cols());
  const Vector psi = spec.eigenvectors.col(k);
  return (psi - q * (q.adjoint() * psi)).norm();
}

double eigenAlignmentResidual(const ConformalFactor& a, int N, int k) {
  const auto spec = cachedSpectrum(a, N);
  return eigenAlignmentResidual(*spec, DaEigenbasis(a, N), k);
}

}  // namespace steklov
