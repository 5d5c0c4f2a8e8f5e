#include "steklov/dtn.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "steklov/diagnostics.hpp"
#include "steklov/errors.hpp"
#include "steklov/harmonics.hpp"

namespace steklov {

TruncatedOperator::TruncatedOperator(int truncation, Matrix entries, bool hermitian)
    : truncation_(truncation), entries_(std::move(entries)), hermitian_(hermitian) {
  if (truncation < 0 || entries_.rows() != 2 * truncation + 1 || entries_.cols() != 2 * truncation + 1) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("operator shape does not match truncation {}", truncation));
  }
  if (hermitian_) {
    const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
    defect_ = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() / scale;
    if (defect_ > 1e-9) {
      throw Error(ErrorCode::InvalidArgument, fmt::format("hermitian defect {:.2e} too large", defect_));
    }
    entries_ = 0.5 * (entries_ + entries_.adjoint()).eval();
  }
}

Matrix TruncatedOperator::interiorBlock(int radius) const {
  radius = std::min(radius, truncation_);
  const int start = truncation_ - radius;
  return entries_.block(start, start, 2 * radius + 1, 2 * radius + 1);
}

TruncatedOperator TruncatedOperator::adjoint() const {
  return TruncatedOperator(truncation_, entries_.adjoint(), hermitian_);
}

namespace {

void requireSameShape(const TruncatedOperator& a, const TruncatedOperator& b) {
  if (a.truncation() != b.truncation()) throw Error(ErrorCode::InvalidArgument, "operator truncations differ");
}

TruncatedOperator diagonal(int N, auto&& fn, bool hermitian) {
  Matrix m = Matrix::Zero(2 * N + 1, 2 * N + 1);
  for (int k = -N; k <= N; ++k) m(k + N, k + N) = fn(k);
  return TruncatedOperator(N, std::move(m), hermitian);
}

// Rectangular block of the multiplication operator: rows |k| ≤ N, columns |m| ≤ inner.
Matrix multBlock(const TrigPolynomial& f, int N, int inner) {
  Matrix m(2 * N + 1, 2 * inner + 1);
  for (int k = -N; k <= N; ++k) {
    for (int j = -inner; j <= inner; ++j) m(k + N, j + inner) = f[k - j];
  }
  return m;
}

// s·diag(w)·s* with s real (so its adjoint block is again a multiplication block).
Matrix sandwich(const TrigPolynomial& s, int N, auto&& weight) {
  const int inner = N + s.degree();
  const Matrix block = multBlock(s, N, inner);
  Eigen::VectorXcd w(2 * inner + 1);
  for (int j = -inner; j <= inner; ++j) w(j + inner) = weight(j);
  return block * w.asDiagonal() * block.adjoint();
}

TrigPolynomial sqrtFactor(const ConformalFactor& a, int N) { return sampledPower(a.series(), 0.5, 0, N); }

}  // namespace

TruncatedOperator operator*(const TruncatedOperator& a, const TruncatedOperator& b) {
  requireSameShape(a, b);
  return TruncatedOperator(a.truncation(), a.entries() * b.entries());
}

TruncatedOperator operator+(const TruncatedOperator& a, const TruncatedOperator& b) {
  requireSameShape(a, b);
  return TruncatedOperator(a.truncation(), a.entries() + b.entries(), a.hermitian() && b.hermitian());
}

TruncatedOperator operator-(const TruncatedOperator& a, const TruncatedOperator& b) {
  requireSameShape(a, b);
  return TruncatedOperator(a.truncation(), a.entries() - b.entries(), a.hermitian() && b.hermitian());
}

TruncatedOperator multOperator(const TrigPolynomial& f, int N) {
  if (f.degree() > 2 * N) {
    warn(fmt::format("multiplier of degree {} exceeds the window of truncation {}; high modes dropped", f.degree(), N));
  }
  return TruncatedOperator(N, multBlock(f, N, N), f.isReal());
}

TruncatedOperator lambdaMatrix(int N) {
  return diagonal(N, [](int k) { return Complex(std::abs(k)); }, true);
}

TruncatedOperator dMatrix(int N) {
  return diagonal(N, [](int k) { return Complex(k); }, true);
}

TruncatedOperator hMatrix(int N) {
  return diagonal(N, [](int k) { return Complex((k > 0) - (k < 0)); }, true);
}

TruncatedOperator averagingMatrix(int N) {
  return diagonal(N, [](int k) { return Complex(k == 0 ? 1.0 : 0.0); }, true);
}

TruncatedOperator lambdaA(const ConformalFactor& a, int N) {
  const auto s = sqrtFactor(a, N);
  return TruncatedOperator(N, sandwich(s, N, [](int m) { return Complex(std::abs(m)); }), true);
}

TruncatedOperator dA(const ConformalFactor& a, int N) {
  const auto s = sqrtFactor(a, N);
  return TruncatedOperator(N, sandwich(s, N, [](int m) { return Complex(m); }), true);
}

Vector kernelVector(const ConformalFactor& a, int N) {
  const auto r = sampledPower(a.series(), -0.5, 0, N);
  Vector v(2 * N + 1);
  for (int k = -N; k <= N; ++k) v(k + N) = r[k];
  return v.normalized();
}

TruncatedOperator p0Matrix(const ConformalFactor& a, int N) {
  const Vector v = kernelVector(a, N);
  return TruncatedOperator(N, v * v.adjoint(), true);
}

TruncatedOperator smoothingDifference(const ConformalFactor& a, int N) {
  const auto s = sqrtFactor(a, N);
  const auto sq = multiply(s, s);
  const int inner = N + s.degree();
  // Inner entries (|m||p| - mp) â_{m-p} vanish unless m and p have opposite signs.
  Matrix core = Matrix::Zero(2 * inner + 1, 2 * inner + 1);
  for (int m = -inner; m <= inner; ++m) {
    for (int p = -inner; p <= inner; ++p) {
      if (static_cast<long>(m) * p >= 0) continue;
      core(m + inner, p + inner) = 2.0 * std::abs(m) * std::abs(p) * sq[m - p];
    }
  }
  const Matrix block = multBlock(s, N, inner);
  return TruncatedOperator(N, block * core * block.adjoint(), true);
}

TruncatedOperator hilbertCommutator(const ConformalFactor& a, const TrigPolynomial& g, int N) {
  const auto r = sampledPower(a.series(), -0.5, 0, N);
  const int inner = N + r.degree();
  Matrix core = Matrix::Zero(2 * inner + 1, 2 * inner + 1);
  auto sgn = [](int k) { return (k > 0) - (k < 0); };
  for (int m = -inner; m <= inner; ++m) {
    for (int p = -inner; p <= inner; ++p) {
      const int d = sgn(m) - sgn(p);
      if (d != 0) core(m + inner, p + inner) = static_cast<double>(d) * g[m - p];
    }
  }
  const Matrix block = multBlock(r, N, inner);
  return TruncatedOperator(N, block * core * block.adjoint());
}

double decayConstant(const TruncatedOperator& op, int radius, double power) {
  const int N = op.truncation();
  radius = std::min(radius, N);
  double c = 0.0;
  for (int k = -radius; k <= radius; ++k) {
    for (int l = -radius; l <= radius; ++l) {
      const double w = std::pow(1.0 + std::max(std::abs(k), std::abs(l)), power);
      c = std::max(c, std::abs(op(k, l)) * w);
    }
  }
  return c;
}

double interiorResidual(const Matrix& lhs, const Matrix& rhs, int truncation, int radius) {
  radius = std::min(radius, truncation);
  const int start = truncation - radius;
  const int size = 2 * radius + 1;
  return (lhs.block(start, start, size, size) - rhs.block(start, start, size, size)).cwiseAbs().maxCoeff();
}

}  // namespace steklov
