#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "steklov/conformal_factor.hpp"
#include "steklov/trig_polynomial.hpp"

namespace steklov {

struct Fixture {
  std::string name;
  ConformalFactor factor;
  bool conformallyTrivial;
};

// Uniform doubles from the top 53 bits of std::mt19937_64. The engine output
// is fixed by the standard; the distribution classes are not, so they are
// avoided to keep fixtures identical across standard libraries.
class FixtureRng {
 public:
  explicit FixtureRng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

// Random real polynomial with coefficients ĉ_0..ĉ_degree drawn from [-1,1]² / (1+k).
TrigPolynomial randomPolynomial(FixtureRng& rng, int degree);

// Normalized c(1 + Σ â_k e^{ikθ} + c.c.) with 2Σ|â_k| drawn from [0.1, 0.3]
// and |â_2| ≥ 0.04, so the factor is not conformally trivial when degree ≥ 2.
ConformalFactor randomFactor(FixtureRng& rng, int degree);

// Normalized c(1 + ε cos(θ - φ)), conformally equivalent to 1.
ConformalFactor trivialFactor(double epsilon, double phase = 0.0);

// `count` fixtures: the constant, trivial ones, then seeded random ones of
// degree 2..maxDegree. Deterministic in `seed`.
std::vector<Fixture> fixtureSet(std::uint64_t seed, int count, int maxDegree);

}  // namespace steklov
