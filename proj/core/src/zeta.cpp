#include "steklov/zeta.hpp"

#include <cmath>

#include <fmt/format.h>

#include "grid.hpp"
#include "steklov/errors.hpp"
#include "steklov/harmonics.hpp"

namespace steklov {

ZetaValue zetaDiff(const SteklovSpectrum& spec, double s) {
  ZetaValue out;
  out.s = s;
  const int K = std::min(spec.trustHorizon, spec.size() - 1);
  double sum = 0.0;
  double last = 0.0;
  for (int k = 1; k <= K; ++k) {
    const double lambda = spec.eigenvalues(k);
    const double n = diskEigenvalue(k);
    last = std::pow(lambda, -s) - std::pow(n, -s);
    sum += last;
  }
  out.diff = sum;
  out.tailEstimate = std::abs(last);
  if (s != 1.0) out.zetaA = sum + 2.0 * riemannZeta(s);
  return out;
}

ZetaValue zetaDiff(const ConformalFactor& a, double s, int N) { return zetaDiff(*cachedSpectrum(a, N), s); }

double koganZetaMinus1(const ConformalFactor& a) {
  const auto& f = a.series();
  const auto fp = realDerivative(f);
  const auto mean = grid::refineUntilStable(
      [&](int m) {
        const auto v = f.sample(m);
        const auto d = fp.sample(m);
        double sum = 0.0;
        for (int j = 0; j < m; ++j) {
          const double x = v[static_cast<std::size_t>(j)];
          if (!(x > 0.0)) throw Error(ErrorCode::NonPositiveSample, "factor is not positive");
          sum += d[static_cast<std::size_t>(j)] * d[static_cast<std::size_t>(j)] / x - x;
        }
        return sum / m;
      },
      grid::defaultSize(f.degree()));
  // (1/12π)·2π·mean
  return mean.value / 6.0;
}

double traceFunctional(const SteklovSpectrum& spec, const TruncatedOperator& smoothing, double s) {
  const int K = std::min(spec.trustHorizon, spec.size() - 1);
  Complex sum = 0.0;
  for (int k = 0; k <= K; ++k) {
    const double mu = k == 0 ? 1.0 : spec.eigenvalues(k);
    const Vector psi = spec.eigenvectors.col(k);
    sum += std::pow(mu, s - 1.0) * psi.dot(smoothing.entries() * psi);
  }
  return sum.real();
}

double traceFunctional(const ConformalFactor& a, double s, int N) {
  return traceFunctional(*cachedSpectrum(a, N), smoothingDifference(a, N), s);
}

double firstVariationFlow(const ConformalFactor& a, double s, int N) { return s * traceFunctional(a, -s, N); }

double firstVariationGeneral(const ConformalFactor& a, const TrigPolynomial& g, double s, int N) {
  if (std::abs(g[0]) > 1e-12) {
    throw Error(ErrorCode::MeanNotZero, fmt::format("g has mean coefficient {:.3e}", std::abs(g[0])));
  }
  if (!g.isReal()) throw Error(ErrorCode::InvalidArgument, "g must be real");
  const auto spec = cachedSpectrum(a, N);
  const auto x = hilbertCommutator(a, g, N);
  const int K = std::min(spec->trustHorizon, spec->size() - 1);
  Complex trace = 0.0;
  for (int k = 1; k <= K; ++k) {
    const Vector psi = spec->eigenvectors.col(k);
    trace += std::pow(spec->eigenvalues(k), 1.0 - s) * psi.dot(x.entries() * psi);
  }
  const Complex value = Complex(0.0, -s) * trace;
  if (std::abs(value.imag()) > 1e-9 * std::max(1.0, std::abs(value.real()))) {
    throw Error(ErrorCode::EigensolveFailure,
                fmt::format("first variation has imaginary part {:.3e}", value.imag()));
  }
  return value.real();
}

double secondVariationAtOne(const TrigPolynomial& beta, double s) {
  if (std::abs(beta[0]) > 1e-12) {
    throw Error(ErrorCode::MeanNotZero, fmt::format("beta has mean coefficient {:.3e}", std::abs(beta[0])));
  }
  const int d = beta.degree();
  double offDiagonal = 0.0;
  for (int n = 1; n < d; ++n) {
    for (int p = 1; n + p <= d; ++p) {
      if (n == p) continue;
      const double ratio = (std::pow(n, -s) - std::pow(p, -s)) / (static_cast<double>(p) * p - static_cast<double>(n) * n);
      offDiagonal += ratio * p * n * std::norm(beta[p + n]);
    }
  }
  double diagonal = 0.0;
  for (int n = 1; 2 * n <= d; ++n) diagonal += std::pow(n, -s) * std::norm(beta[2 * n]);
  return 4.0 * s * offDiagonal + 2.0 * s * s * diagonal;
}

Matrix eigenPower(const SteklovSpectrum& spec, double p) {
  Eigen::VectorXd weights(spec.size());
  for (int k = 0; k < spec.size(); ++k) weights(k) = std::pow(k == 0 ? 1.0 : spec.eigenvalues(k), p);
  return spec.eigenvectors * weights.asDiagonal() * spec.eigenvectors.adjoint();
}

CompactSetSnapshot compactSetSnapshot(const ConformalFactor& a, int M) {
  CompactSetSnapshot snap;
  snap.hatB0 = a.series()[0].real();
  snap.zetaMinus1 = koganZetaMinus1(a);
  for (int m = 1; m <= M; ++m) snap.zMinus2m.push_back(zetaInvariantAlgebraic(a, m));
  return snap;
}

}  // namespace steklov
