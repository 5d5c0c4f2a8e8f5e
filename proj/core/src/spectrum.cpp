#include "steklov/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include <fmt/format.h>

#include "steklov/errors.hpp"

namespace steklov {

double SteklovSpectrum::orthonormalityResidual() const {
  const Matrix gram = eigenvectors.adjoint() * eigenvectors;
  return (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

SteklovSpectrum spectrumOf(const TruncatedOperator& lambda, const Vector& kernel, int trustHorizon) {
  const int N = lambda.truncation();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(lambda.entries());
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::EigensolveFailure, fmt::format("Hermitian eigensolver failed at N = {}", N));
  }
  SteklovSpectrum spec;
  spec.truncation = N;
  spec.eigenvalues = solver.eigenvalues();
  spec.eigenvectors = solver.eigenvectors();
  spec.trustHorizon = trustHorizon < 0 ? N / 2 : std::min(trustHorizon, 2 * N);

  const double lowest = spec.eigenvalues(0);
  if (lowest < -1e-10) {
    throw Error(ErrorCode::EigensolveFailure, fmt::format("negative eigenvalue {:.3e}", lowest));
  }
  for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k) {
    if (spec.eigenvalues(k) < 0.0) spec.eigenvalues(k) = 0.0;
  }

  const Complex overlap = spec.eigenvectors.col(0).dot(kernel);
  spec.zeroModeAngle = std::acos(std::min(1.0, std::abs(overlap)));
  if (spec.zeroModeAngle < 1e-4) {
    spec.zeroModeSnapped = true;
    spec.eigenvalues(0) = 0.0;
    spec.eigenvectors.col(0) = kernel;
    for (Eigen::Index k = 1; k < spec.eigenvectors.cols(); ++k) {
      auto col = spec.eigenvectors.col(k);
      col -= kernel * kernel.dot(col);
      col.normalize();
    }
  }
  return spec;
}

SteklovSpectrum spectrum(const ConformalFactor& a, int N, int trustHorizon) {
  return spectrumOf(lambdaA(a, N), kernelVector(a, N), trustHorizon);
}

namespace {

struct CacheKey {
  int truncation;
  std::vector<Complex> coefficients;
  bool operator==(const CacheKey&) const = default;
};

std::uint64_t fnv1a(const CacheKey& key) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const void* data, std::size_t n) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= bytes[i];
      h *= 1099511628211ULL;
    }
  };
  mix(&key.truncation, sizeof key.truncation);
  mix(key.coefficients.data(), key.coefficients.size() * sizeof(Complex));
  return h;
}

struct SpectrumCache {
  static constexpr std::size_t kCapacity = 64;
  std::shared_mutex mutex;
  std::unordered_multimap<std::uint64_t, std::pair<CacheKey, std::shared_ptr<const SteklovSpectrum>>> entries;
};

SpectrumCache& cache() {
  static SpectrumCache instance;
  return instance;
}

}  // namespace

std::shared_ptr<const SteklovSpectrum> cachedSpectrum(const ConformalFactor& a, int N) {
  CacheKey key{N, {a.series().coefficients().begin(), a.series().coefficients().end()}};
  const auto hash = fnv1a(key);
  auto& c = cache();
  {
    std::shared_lock lock(c.mutex);
    auto [lo, hi] = c.entries.equal_range(hash);
    for (auto it = lo; it != hi; ++it) {
      if (it->second.first == key) return it->second.second;
    }
  }
  auto value = std::make_shared<const SteklovSpectrum>(spectrum(a, N));
  std::unique_lock lock(c.mutex);
  if (c.entries.size() >= SpectrumCache::kCapacity) c.entries.clear();
  c.entries.emplace(hash, std::make_pair(std::move(key), value));
  return value;
}

void clearSpectrumCache() {
  auto& c = cache();
  std::unique_lock lock(c.mutex);
  c.entries.clear();
}

}  // namespace steklov
