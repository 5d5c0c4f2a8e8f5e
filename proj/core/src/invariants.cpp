#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include <fmt/format.h>

#include "steklov/errors.hpp"
#include "steklov/zeta.hpp"

namespace steklov {

namespace {

// Σ_n (|f(n)| - f(n)) with f(n) = Π_{i<2m} (n + s_i), s_0 = 0 and s_i the
// partial sums of j. f is monic of even degree with integer roots -s_i, so
// only n between the extreme roots can contribute.
std::int64_t countingCoefficient(const std::vector<std::int64_t>& partial) {
  const auto [lo, hi] = std::minmax_element(partial.begin(), partial.end());
  std::int64_t total = 0;
  for (std::int64_t n = -*hi; n <= -*lo; ++n) {
    std::int64_t f = 1;
    for (std::int64_t s : partial) {
      f *= n + s;
      if (f == 0) break;
    }
    if (f < 0) total -= 2 * f;
  }
  return total;
}

}  // namespace

double zetaInvariantAlgebraic(const TrigPolynomial& b, int m, double budget) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  const int d = b.trimmed(0.0).degree();
  if (d == 0) return 0.0;
  const int free = 2 * m - 1;
  const double work = std::pow(2.0 * d + 1.0, free);
  if (work > budget) {
    throw Error(ErrorCode::ComplexityLimit,
                fmt::format("(2·{}+1)^{} = {:.3g} index tuples exceed the budget {:.3g}", d, free, work, budget));
  }
  // Largest |f(n)| is bounded by (2m·d)^{2m}; keep it inside int64.
  if (2.0 * m * std::log(2.0 * m * d + 1.0) > std::log(static_cast<double>(std::numeric_limits<std::int64_t>::max()) / 4)) {
    throw Error(ErrorCode::ComplexityLimit, "counting polynomial would overflow 64-bit arithmetic");
  }

  std::vector<int> j(static_cast<std::size_t>(free), -d);
  std::vector<std::int64_t> partial(static_cast<std::size_t>(2 * m));
  Complex sum = 0.0;
  while (true) {
    std::int64_t acc = 0;
    partial[0] = 0;
    for (int i = 0; i < free; ++i) {
      acc += j[static_cast<std::size_t>(i)];
      partial[static_cast<std::size_t>(i + 1)] = acc;
    }
    const std::int64_t last = -acc;
    if (std::abs(last) <= d) {
      Complex product = b[static_cast<int>(last)];
      for (int i = 0; i < free && product != Complex{}; ++i) product *= b[j[static_cast<std::size_t>(i)]];
      if (product != Complex{}) {
        const std::int64_t count = countingCoefficient(partial);
        if (count != 0) sum += static_cast<double>(count) * product;
      }
    }
    int i = 0;
    while (i < free && ++j[static_cast<std::size_t>(i)] > d) j[static_cast<std::size_t>(i++)] = -d;
    if (i == free) break;
  }
  return sum.real();
}

double zetaInvariantAlgebraic(const ConformalFactor& a, int m, double budget) {
  return zetaInvariantAlgebraic(a.series(), m, budget);
}

}  // namespace steklov
