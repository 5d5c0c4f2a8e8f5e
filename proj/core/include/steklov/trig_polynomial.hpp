#pragma once

#include <complex>
#include <span>
#include <vector>

namespace steklov {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Finite Fourier series f(θ) = Σ_{|k|≤N} ĉ_k e^{ikθ} on the unit circle.
//
// Both halves of the spectrum are stored so that operators such as D and H,
// which send real functions to purely imaginary ones, stay representable.
// A real-valued function has ĉ_{-k} = conj(ĉ_k); the named factories below
// produce real series unless stated otherwise.
class TrigPolynomial {
 public:
  TrigPolynomial() : TrigPolynomial(0) {}
  explicit TrigPolynomial(int degree);
  // `twoSided` holds ĉ_{-N}..ĉ_N, i.e. twoSided[k + N] = ĉ_k.
  TrigPolynomial(int degree, std::vector<Complex> twoSided);

  static TrigPolynomial constant(double value);
  // Real series from ĉ_0..ĉ_N; ĉ_0 must be real.
  static TrigPolynomial fromNonNegative(std::span<const Complex> coeffs);
  static TrigPolynomial cosine(int k, double amplitude = 1.0);
  static TrigPolynomial sine(int k, double amplitude = 1.0);
  // Single complex exponential amplitude·e^{ikθ}; not real unless k = 0.
  static TrigPolynomial exponential(int k, Complex amplitude = 1.0);

  int degree() const { return degree_; }
  Complex operator[](int k) const {
    return (k < -degree_ || k > degree_) ? Complex{} : coeffs_[static_cast<std::size_t>(k + degree_)];
  }
  void set(int k, Complex value);
  std::span<const Complex> coefficients() const { return coeffs_; }

  bool isReal(double tol = 1e-12) const;
  // Real part of the series at θ. Callers evaluating a non-real series
  // should use evaluateComplex.
  double evaluate(double theta) const { return evaluateComplex(theta).real(); }
  Complex evaluateComplex(double theta) const;

  // Values at θ_j = 2πj/M, j = 0..M-1. Works for any M ≥ 1 (modes fold).
  std::vector<Complex> sampleComplex(int gridSize) const;
  std::vector<double> sample(int gridSize) const;

  // Copy with degree exactly `degree` (drops or zero-pads modes).
  TrigPolynomial truncated(int degree) const;
  // Smallest-degree copy whose dropped modes are all below `tol` in modulus.
  TrigPolynomial trimmed(double tol = 0.0) const;

  double maxAbsCoefficient() const;
  // Σ_k |ĉ_k|², i.e. ‖f‖²_{L²}/2π.
  double squaredNorm() const;

  TrigPolynomial& operator+=(const TrigPolynomial& other);
  TrigPolynomial& operator-=(const TrigPolynomial& other);
  TrigPolynomial& operator*=(Complex scalar);

  friend TrigPolynomial operator+(TrigPolynomial lhs, const TrigPolynomial& rhs) { return lhs += rhs; }
  friend TrigPolynomial operator-(TrigPolynomial lhs, const TrigPolynomial& rhs) { return lhs -= rhs; }
  friend TrigPolynomial operator*(TrigPolynomial lhs, Complex s) { return lhs *= s; }
  friend TrigPolynomial operator*(Complex s, TrigPolynomial rhs) { return rhs *= s; }
  friend TrigPolynomial operator-(TrigPolynomial f) { return f *= -1.0; }

 private:
  int degree_;
  std::vector<Complex> coeffs_;
};

// Largest coefficient difference over the union of supports.
double maxCoefficientDistance(const TrigPolynomial& f, const TrigPolynomial& g);

}  // namespace steklov
