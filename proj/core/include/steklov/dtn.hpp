#pragma once

#include <Eigen/Dense>

#include "steklov/conformal_factor.hpp"
#include "steklov/trig_polynomial.hpp"

namespace steklov {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Dense operator on the Fourier modes |k| ≤ N in the orthonormal basis
// e_k = (2π)^{-1/2} e^{ikθ}. Mode k lives at row/column k + N.
class TruncatedOperator {
 public:
  TruncatedOperator(int truncation, Matrix entries, bool hermitian = false);

  int truncation() const { return truncation_; }
  int dimension() const { return 2 * truncation_ + 1; }
  const Matrix& entries() const { return entries_; }
  bool hermitian() const { return hermitian_; }
  // max |A - A*| / max(1, max|A|) measured before symmetrization.
  double symmetrizationDefect() const { return defect_; }

  Complex operator()(int k, int l) const { return entries_(k + truncation_, l + truncation_); }
  static int index(int truncation, int k) { return k + truncation; }

  // Rows/columns with |k| ≤ radius.
  Matrix interiorBlock(int radius) const;

  TruncatedOperator adjoint() const;

  friend TruncatedOperator operator*(const TruncatedOperator& a, const TruncatedOperator& b);
  friend TruncatedOperator operator+(const TruncatedOperator& a, const TruncatedOperator& b);
  friend TruncatedOperator operator-(const TruncatedOperator& a, const TruncatedOperator& b);

 private:
  int truncation_;
  Matrix entries_;
  bool hermitian_;
  double defect_ = 0.0;
};

// Toeplitz matrix entries[k,l] = f̂_{k-l}. Modes of f with |k| > 2N cannot
// appear and are dropped with a warning.
TruncatedOperator multOperator(const TrigPolynomial& f, int N);

TruncatedOperator lambdaMatrix(int N);
TruncatedOperator dMatrix(int N);
TruncatedOperator hMatrix(int N);
// Rank-one averaging operator F_0 = e_0 e_0*.
TruncatedOperator averagingMatrix(int N);

// Λ_a = a^{1/2} Λ a^{1/2} and D_a = a^{1/2} D a^{1/2}. The product is formed
// with the inner mode index running over |m| ≤ 2N, so the result is the exact
// compression of the operator with a^{1/2} truncated to degree N.
TruncatedOperator lambdaA(const ConformalFactor& a, int N);
TruncatedOperator dA(const ConformalFactor& a, int N);

// Unit coefficient vector of a^{-1/2}, which spans ker Λ_a.
Vector kernelVector(const ConformalFactor& a, int N);
TruncatedOperator p0Matrix(const ConformalFactor& a, int N);

// Λ_a² - D_a² = a^{1/2}(ΛaΛ - DaD)a^{1/2}, assembled in that factored form.
TruncatedOperator smoothingDifference(const ConformalFactor& a, int N);

// a^{-1/2} [H, g] a^{-1/2}.
TruncatedOperator hilbertCommutator(const ConformalFactor& a, const TrigPolynomial& g, int N);

// Largest |Δ_{kl}|·(1 + max(|k|,|l|))^p over the block |k|,|l| ≤ radius.
double decayConstant(const TruncatedOperator& op, int radius, double power);

// Max-entry difference of two matrices restricted to |k|,|l| ≤ radius.
double interiorResidual(const Matrix& lhs, const Matrix& rhs, int truncation, int radius);

}  // namespace steklov
