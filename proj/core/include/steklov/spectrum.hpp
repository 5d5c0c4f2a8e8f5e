#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "steklov/conformal_factor.hpp"
#include "steklov/dtn.hpp"

namespace steklov {

struct SteklovSpectrum {
  int truncation = 0;
  Eigen::VectorXd eigenvalues;  // ascending
  Matrix eigenvectors;          // column k is Ψ_k in the mode basis
  int trustHorizon = 0;
  // Angle between the computed ground state and the a^{-1/2} vector, and
  // whether the ground state was replaced by that vector.
  double zeroModeAngle = 0.0;
  bool zeroModeSnapped = false;

  int size() const { return static_cast<int>(eigenvalues.size()); }
  double orthonormalityResidual() const;
};

// Eigendecomposition of an assembled Λ_a. `kernel` is the known null vector
// used to snap the ground state; trustHorizon < 0 selects ⌊N/2⌋.
SteklovSpectrum spectrumOf(const TruncatedOperator& lambda, const Vector& kernel, int trustHorizon = -1);

SteklovSpectrum spectrum(const ConformalFactor& a, int N, int trustHorizon = -1);

// Memoized spectrum(a, N) keyed by the coefficients of a and N. Concurrent
// lookups share a reader lock; the memo is cleared once it grows large.
std::shared_ptr<const SteklovSpectrum> cachedSpectrum(const ConformalFactor& a, int N);
void clearSpectrumCache();

// Floor((k+1)/2): the k-th eigenvalue of the unit disk.
inline int diskEigenvalue(int k) { return (k + 1) / 2; }

// The explicit orthonormal eigenbasis
// φ_n = (2π)^{-1/2} a^{-1/2} exp(i n ∫_0^θ a^{-1}) of D_a.
class DaEigenbasis {
 public:
  DaEigenbasis(const ConformalFactor& a, int N, int gridSize = 0);

  int truncation() const { return truncation_; }
  int gridSize() const { return gridSize_; }
  // ∫_0^θ a^{-1} at the grid points.
  const Eigen::VectorXd& phase() const { return phase_; }
  // 2π·|(1/2π)∫a^{-1} - 1|: the phase mismatch per unit n after one turn.
  double periodicityResidual() const { return periodicity_; }

  // Samples of φ_n at θ_j = 2πj/M.
  Eigen::VectorXcd samples(int n) const;
  // Coefficients of φ_n in the orthonormal mode basis, |k| ≤ N.
  Vector modeVector(int n) const { return modes_.col(n + truncation_); }

  // Grid L² inner product ∫ f conj(g) dθ.
  Complex innerProduct(int n, int m) const;

 private:
  int truncation_;
  int gridSize_;
  Eigen::VectorXd phase_;
  Eigen::VectorXd amplitude_;  // (2π)^{-1/2} a^{-1/2}
  double periodicity_ = 0.0;
  Matrix modes_;
};

// ‖Ψ_k - P Ψ_k‖ with P the orthogonal projector onto span{φ_n, φ_{-n}},
// n = ⌊(k+1)/2⌋ (span{φ_0} when k = 0).
double eigenAlignmentResidual(const SteklovSpectrum& spec, const DaEigenbasis& basis, int k);
double eigenAlignmentResidual(const ConformalFactor& a, int N, int k);

}  // namespace steklov
