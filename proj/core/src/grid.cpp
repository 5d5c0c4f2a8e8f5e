#include "grid.hpp"

#include <cmath>

#include <unsupported/Eigen/FFT>

#include "steklov/errors.hpp"

namespace steklov::grid {

int nextPowerOfTwo(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

bool isPowerOfTwo(int n) { return n > 0 && (n & (n - 1)) == 0; }

int defaultSize(int degree) { return std::max(64, nextPowerOfTwo(8 * std::max(degree, 1))); }

namespace {

Eigen::FFT<double>& engine() {
  thread_local Eigen::FFT<double> fft;
  return fft;
}

}  // namespace

std::vector<Complex> forward(std::span<const Complex> samples) {
  std::vector<Complex> in(samples.begin(), samples.end());
  std::vector<Complex> out;
  engine().fwd(out, in);
  return out;
}

std::vector<Complex> backward(std::span<const Complex> spectrum) {
  std::vector<Complex> in(spectrum.begin(), spectrum.end());
  std::vector<Complex> out;
  engine().inv(out, in);
  // Eigen's inverse divides by M; undo it.
  const double m = static_cast<double>(in.size());
  for (auto& v : out) v *= m;
  return out;
}

TrigPolynomial seriesFromSamples(std::span<const Complex> samples, int outputDegree) {
  const int m = static_cast<int>(samples.size());
  if (2 * outputDegree + 1 > m) {
    throw Error(ErrorCode::AliasingRisk,
                "grid of " + std::to_string(m) + " points cannot resolve degree " + std::to_string(outputDegree));
  }
  const auto spectrum = forward(samples);
  TrigPolynomial f(outputDegree);
  for (int k = -outputDegree; k <= outputDegree; ++k) {
    f.set(k, spectrum[static_cast<std::size_t>((k + m) % m)] / static_cast<double>(m));
  }
  return f;
}

TrigPolynomial seriesFromSamples(std::span<const double> samples, int outputDegree) {
  std::vector<Complex> c(samples.begin(), samples.end());
  auto f = seriesFromSamples(std::span<const Complex>(c), outputDegree);
  // Enforce exact conjugate symmetry for real data.
  for (int k = 1; k <= outputDegree; ++k) {
    const Complex avg = 0.5 * (f[k] + std::conj(f[-k]));
    f.set(k, avg);
    f.set(-k, std::conj(avg));
  }
  f.set(0, f[0].real());
  return f;
}

std::vector<Complex> differentiate(std::span<const Complex> samples) {
  const int m = static_cast<int>(samples.size());
  auto spectrum = forward(samples);
  for (int j = 0; j < m; ++j) {
    int k = j <= m / 2 ? j : j - m;
    if (2 * std::abs(k) == m) k = 0;
    spectrum[static_cast<std::size_t>(j)] *= Complex(0.0, static_cast<double>(k) / m);
  }
  return backward(spectrum);
}

MeanResult refineUntilStable(const std::function<double(int)>& meanAt, int startSize) {
  constexpr int kMaxSize = 1 << 18;
  int m = std::max(nextPowerOfTwo(startSize), 8);
  double prev = meanAt(m);
  while (m < kMaxSize) {
    m *= 2;
    const double next = meanAt(m);
    if (std::abs(next - prev) <= 1e-14 * std::max(1.0, std::abs(next))) return {next, m};
    prev = next;
  }
  throw Error(ErrorCode::QuadratureBudget, "grid quadrature did not converge");
}

MeanResult adaptiveMean(const TrigPolynomial& f, const std::function<double(double)>& fn, int startSize) {
  return refineUntilStable(
      [&](int size) {
        const auto values = f.sample(size);
        double sum = 0.0;
        for (double v : values) sum += fn(v);
        return sum / size;
      },
      startSize);
}

}  // namespace steklov::grid
