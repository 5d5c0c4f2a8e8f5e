#include <array>
#include <cmath>

#include "steklov/errors.hpp"
#include "steklov/trig_polynomial.hpp"
#include "steklov/zeta.hpp"

namespace steklov {

namespace {

constexpr int kEtaTerms = 50;

// Borwein's coefficients d_k = n Σ_{i≤k} (n+i-1)! 4^i / ((n-i)! (2i)!).
const std::array<double, kEtaTerms + 1>& borweinCoefficients() {
  static const auto table = [] {
    std::array<double, kEtaTerms + 1> d{};
    const double n = kEtaTerms;
    double term = 1.0 / n;
    double sum = term;
    d[0] = n * sum;
    for (int i = 0; i < kEtaTerms; ++i) {
      term *= 4.0 * (n + i) * (n - i) / ((2.0 * i + 1.0) * (2.0 * i + 2.0));
      sum += term;
      d[static_cast<std::size_t>(i + 1)] = n * sum;
    }
    return d;
  }();
  return table;
}

// Dirichlet eta for s > 0.
double eta(double s) {
  const auto& d = borweinCoefficients();
  const double dn = d[kEtaTerms];
  double sum = 0.0;
  for (int k = 0; k < kEtaTerms; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * (d[static_cast<std::size_t>(k)] - dn) / std::pow(k + 1.0, s);
  }
  return -sum / dn;
}

// sin(πx) with exact zeros at integers.
double sinPi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0.0) r += 2.0;
  if (r == 0.0 || r == 1.0) return 0.0;
  if (r > 1.0) return -sinPi(r - 1.0);
  if (r > 0.5) r = 1.0 - r;
  return std::sin(kPi * r);
}

}  // namespace

double riemannZeta(double s) {
  if (s == 1.0) throw Error(ErrorCode::PoleAtOne, "zeta_R has a pole at s = 1");
  if (s == 0.0) return -0.5;
  if (s == -1.0) return -1.0 / 12.0;
  if (s < 0.0 && s == std::floor(s) && std::fmod(s, 2.0) == 0.0) return 0.0;
  if (s > 0.0) {
    // ζ = η / (1 - 2^{1-s}); expm1 keeps precision near s = 1.
    return eta(s) / -std::expm1((1.0 - s) * std::log(2.0));
  }
  // ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s)
  return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * sinPi(0.5 * s) * std::tgamma(1.0 - s) * riemannZeta(1.0 - s);
}

double gammaFactor(double z) { return sinPi(z) / kPi; }

}  // namespace steklov
