#include "steklov/fixtures.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "steklov/errors.hpp"
#include "steklov/harmonics.hpp"

namespace steklov {

TrigPolynomial randomPolynomial(FixtureRng& rng, int degree) {
  std::vector<Complex> c(static_cast<std::size_t>(degree + 1));
  c[0] = rng.uniform(-1.0, 1.0);
  for (int k = 1; k <= degree; ++k) {
    const double re = rng.uniform(-1.0, 1.0);
    const double im = rng.uniform(-1.0, 1.0);
    c[static_cast<std::size_t>(k)] = Complex(re, im) / (1.0 + k);
  }
  return TrigPolynomial::fromNonNegative(c);
}

ConformalFactor randomFactor(FixtureRng& rng, int degree) {
  if (degree < 1) throw Error(ErrorCode::InvalidArgument, "random factor needs degree ≥ 1");
  std::vector<Complex> c(static_cast<std::size_t>(degree + 1));
  c[0] = 1.0;
  double total = 0.0;
  for (int k = 1; k <= degree; ++k) {
    const double r = rng.uniform(0.5, 1.0) * std::pow(0.5, k - 1);
    const double angle = rng.uniform(0.0, kTwoPi);
    c[static_cast<std::size_t>(k)] = std::polar(r, angle);
    total += r;
  }
  const double budget = rng.uniform(0.1, 0.3);
  for (int k = 1; k <= degree; ++k) c[static_cast<std::size_t>(k)] *= budget / (2.0 * total);
  if (degree >= 2 && std::abs(c[2]) < 0.04) c[2] *= 0.04 / std::max(std::abs(c[2]), 1e-300);
  return normalize(TrigPolynomial::fromNonNegative(c));
}

ConformalFactor trivialFactor(double epsilon, double phase) {
  const Complex c1 = 0.5 * epsilon * std::polar(1.0, -phase);
  const std::vector<Complex> c{1.0, c1};
  return normalize(TrigPolynomial::fromNonNegative(c));
}

std::vector<Fixture> fixtureSet(std::uint64_t seed, int count, int maxDegree) {
  std::vector<Fixture> out;
  out.push_back({"one", ConformalFactor::one(), true});
  const double trivialEps[] = {0.3, 0.5};
  for (double eps : trivialEps) {
    if (static_cast<int>(out.size()) >= count) break;
    out.push_back({fmt::format("trivial_eps{}", eps), trivialFactor(eps, 0.7), true});
  }
  FixtureRng rng(seed);
  int i = 0;
  while (static_cast<int>(out.size()) < count) {
    const int degree = 2 + (i % std::max(1, maxDegree - 1));
    out.push_back({fmt::format("random_{}_deg{}", i, degree), randomFactor(rng, degree), false});
    ++i;
  }
  return out;
}

}  // namespace steklov
