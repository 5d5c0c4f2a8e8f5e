#include "steklov/trig_polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "grid.hpp"
#include "steklov/errors.hpp"

namespace steklov {

TrigPolynomial::TrigPolynomial(int degree) : degree_(degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, fmt::format("negative degree {}", degree));
  coeffs_.assign(static_cast<std::size_t>(2 * degree + 1), Complex{});
}

TrigPolynomial::TrigPolynomial(int degree, std::vector<Complex> twoSided)
    : degree_(degree), coeffs_(std::move(twoSided)) {
  if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(2 * degree + 1)) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("expected {} coefficients for degree {}, got {}", 2 * degree + 1, degree, coeffs_.size()));
  }
}

TrigPolynomial TrigPolynomial::constant(double value) {
  TrigPolynomial f(0);
  f.coeffs_[0] = value;
  return f;
}

TrigPolynomial TrigPolynomial::fromNonNegative(std::span<const Complex> coeffs) {
  if (coeffs.empty()) return TrigPolynomial(0);
  if (std::abs(coeffs[0].imag()) > 0.0) {
    throw Error(ErrorCode::InvalidArgument, "mean coefficient must be real");
  }
  const int n = static_cast<int>(coeffs.size()) - 1;
  TrigPolynomial f(n);
  for (int k = 0; k <= n; ++k) {
    f.set(k, coeffs[static_cast<std::size_t>(k)]);
    if (k > 0) f.set(-k, std::conj(coeffs[static_cast<std::size_t>(k)]));
  }
  return f;
}

TrigPolynomial TrigPolynomial::cosine(int k, double amplitude) {
  k = std::abs(k);
  TrigPolynomial f(k);
  if (k == 0) {
    f.set(0, amplitude);
  } else {
    f.set(k, 0.5 * amplitude);
    f.set(-k, 0.5 * amplitude);
  }
  return f;
}

TrigPolynomial TrigPolynomial::sine(int k, double amplitude) {
  const int sign = k < 0 ? -1 : 1;
  k = std::abs(k);
  TrigPolynomial f(k);
  if (k != 0) {
    // sin kθ = (e^{ikθ} - e^{-ikθ}) / 2i
    f.set(k, Complex(0.0, -0.5 * amplitude * sign));
    f.set(-k, Complex(0.0, 0.5 * amplitude * sign));
  }
  return f;
}

TrigPolynomial TrigPolynomial::exponential(int k, Complex amplitude) {
  TrigPolynomial f(std::abs(k));
  f.set(k, amplitude);
  return f;
}

void TrigPolynomial::set(int k, Complex value) {
  if (k < -degree_ || k > degree_) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("mode {} outside degree {}", k, degree_));
  }
  coeffs_[static_cast<std::size_t>(k + degree_)] = value;
}

bool TrigPolynomial::isReal(double tol) const {
  const double scale = std::max(1.0, maxAbsCoefficient());
  for (int k = 0; k <= degree_; ++k) {
    if (std::abs((*this)[k] - std::conj((*this)[-k])) > tol * scale) return false;
  }
  return true;
}

Complex TrigPolynomial::evaluateComplex(double theta) const {
  Complex sum = (*this)[0];
  const Complex step = std::polar(1.0, theta);
  Complex power = 1.0;
  for (int k = 1; k <= degree_; ++k) {
    // e^{ikθ} from the exact angle every few steps to bound drift.
    power = (k % 16 == 0) ? std::polar(1.0, k * theta) : power * step;
    sum += (*this)[k] * power + (*this)[-k] * std::conj(power);
  }
  return sum;
}

std::vector<Complex> TrigPolynomial::sampleComplex(int gridSize) const {
  if (gridSize < 1) throw Error(ErrorCode::InvalidArgument, "grid size must be positive");
  std::vector<Complex> spectrum(static_cast<std::size_t>(gridSize), Complex{});
  for (int k = -degree_; k <= degree_; ++k) {
    const int idx = ((k % gridSize) + gridSize) % gridSize;
    spectrum[static_cast<std::size_t>(idx)] += (*this)[k];
  }
  return grid::backward(spectrum);
}

std::vector<double> TrigPolynomial::sample(int gridSize) const {
  const auto values = sampleComplex(gridSize);
  std::vector<double> out(values.size());
  std::transform(values.begin(), values.end(), out.begin(), [](Complex z) { return z.real(); });
  return out;
}

TrigPolynomial TrigPolynomial::truncated(int degree) const {
  TrigPolynomial f(degree);
  const int m = std::min(degree, degree_);
  for (int k = -m; k <= m; ++k) f.set(k, (*this)[k]);
  return f;
}

TrigPolynomial TrigPolynomial::trimmed(double tol) const {
  int n = degree_;
  while (n > 0 && std::abs((*this)[n]) <= tol && std::abs((*this)[-n]) <= tol) --n;
  return truncated(n);
}

double TrigPolynomial::maxAbsCoefficient() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double TrigPolynomial::squaredNorm() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return s;
}

TrigPolynomial& TrigPolynomial::operator+=(const TrigPolynomial& other) {
  if (other.degree_ > degree_) *this = truncated(other.degree_);
  for (int k = -other.degree_; k <= other.degree_; ++k) coeffs_[static_cast<std::size_t>(k + degree_)] += other[k];
  return *this;
}

TrigPolynomial& TrigPolynomial::operator-=(const TrigPolynomial& other) {
  if (other.degree_ > degree_) *this = truncated(other.degree_);
  for (int k = -other.degree_; k <= other.degree_; ++k) coeffs_[static_cast<std::size_t>(k + degree_)] -= other[k];
  return *this;
}

TrigPolynomial& TrigPolynomial::operator*=(Complex scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

double maxCoefficientDistance(const TrigPolynomial& f, const TrigPolynomial& g) {
  const int n = std::max(f.degree(), g.degree());
  double m = 0.0;
  for (int k = -n; k <= n; ++k) m = std::max(m, std::abs(f[k] - g[k]));
  return m;
}

}  // namespace steklov
