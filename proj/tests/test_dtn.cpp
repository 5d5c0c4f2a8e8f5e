#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "steklov/dtn.hpp"
#include "steklov/errors.hpp"
#include "steklov/fixtures.hpp"
#include "steklov/harmonics.hpp"
#include "steklov/spectrum.hpp"

using namespace steklov;

namespace {

double maxEntry(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Λ_a assembled from trapezoidal coefficients of sqrt(a), truncated to degree N.
Matrix lambdaAOracle(const ConformalFactor& a, int N) {
  const int reach = N;
  std::vector<Complex> s(2 * reach + 1);
  for (int k = -reach; k <= reach; ++k) {
    s[k + reach] = oracle::coefficient([&](double t) { return std::sqrt(oracle::evaluate(a.series(), t)); }, k, 1024);
  }
  auto sh = [&](int k) { return std::abs(k) > reach ? Complex{} : s[k + reach]; };
  Matrix out = Matrix::Zero(2 * N + 1, 2 * N + 1);
  for (int k = -N; k <= N; ++k) {
    for (int l = -N; l <= N; ++l) {
      Complex sum = 0.0;
      for (int m = -2 * reach; m <= 2 * reach; ++m) sum += sh(k - m) * static_cast<double>(std::abs(m)) * sh(m - l);
      out(k + N, l + N) = sum;
    }
  }
  return out;
}

// Spectral derivative -i d/dθ of grid samples by a direct DFT.
Eigen::VectorXcd spectralD(const Eigen::VectorXcd& v) {
  const int m = static_cast<int>(v.size());
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(m);
  for (int k = -m / 2 + 1; k < m / 2; ++k) {
    Complex c = 0.0;
    for (int j = 0; j < m; ++j) c += v(j) * std::exp(Complex(0.0, -kTwoPi * k * j / m));
    c /= static_cast<double>(m);
    for (int j = 0; j < m; ++j) out(j) += static_cast<double>(k) * c * std::exp(Complex(0.0, kTwoPi * k * j / m));
  }
  return out;
}

}  // namespace

TEST_CASE("multiplication operators are Toeplitz") {
  CHECK(maxEntry(multOperator(TrigPolynomial::constant(1.0), 8).entries() - Matrix::Identity(17, 17)) == 0.0);

  const auto c = multOperator(TrigPolynomial::cosine(1), 6);
  for (int k = -6; k <= 6; ++k) {
    for (int l = -6; l <= 6; ++l) CHECK(c(k, l) == Complex(std::abs(k - l) == 1 ? 0.5 : 0.0, 0.0));
  }
  CHECK(c.hermitian());

  FixtureRng rng(21);
  const auto f = randomPolynomial(rng, 3);
  const auto g = randomPolynomial(rng, 4);
  const int N = 20;
  const Matrix prod = multOperator(f, N).entries() * multOperator(g, N).entries();
  const Matrix direct = multOperator(oracle::convolve(f, g), N).entries();
  CHECK(interiorResidual(prod, direct, N, N - 7) < 1e-14);
}

TEST_CASE("diagonal operators") {
  const int N = 10;
  const auto lambda = lambdaMatrix(N);
  CHECK(lambda(2, 2) == Complex(2.0, 0.0));
  CHECK(lambda(-3, -3) == Complex(3.0, 0.0));
  CHECK(hMatrix(N)(0, 0) == Complex{});
  CHECK(maxEntry(lambda.entries() - hMatrix(N).entries() * dMatrix(N).entries()) == 0.0);
  CHECK(maxEntry(lambda.entries() - dMatrix(N).entries() * hMatrix(N).entries()) == 0.0);
}

TEST_CASE("hermitian flag validates and symmetrizes") {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(TruncatedOperator(1, m, true), Error);
  m(1, 0) = 1.0 + 1e-13;
  const TruncatedOperator op(1, m, true);
  CHECK(op(0, -1) == op(-1, 0));
  CHECK(op.symmetrizationDefect() > 0.0);
}

TEST_CASE("Λ_a and D_a") {
  const int N = 16;
  CHECK(maxEntry(lambdaA(ConformalFactor::one(), N).entries() - lambdaMatrix(N).entries()) < 1e-15);
  CHECK(maxEntry(dA(ConformalFactor::one(), N).entries() - dMatrix(N).entries()) < 1e-15);

  FixtureRng rng(23);
  const auto a = randomFactor(rng, 4);
  const auto lam = lambdaA(a, N);
  CHECK(lam.hermitian());
  CHECK(lam.symmetrizationDefect() < 1e-9);
  CHECK(maxEntry(lam.entries() - lambdaAOracle(a, N)) < 1e-11);

  const auto da = dA(a, N);
  CHECK(da.hermitian());
  const Vector kernel = kernelVector(a, N);
  CHECK((da.entries() * kernel).segment(4, 2 * N - 7).norm() < 1e-10);
}

TEST_CASE("P_0 and the kernel of Λ_a") {
  const int N = 24;
  const auto p1 = p0Matrix(ConformalFactor::one(), N);
  CHECK(std::abs(p1(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(p1.entries().trace() - 1.0) < 1e-15);

  FixtureRng rng(29);
  for (int deg : {2, 4, 6}) {
    const auto a = randomFactor(rng, deg);
    const Matrix p = p0Matrix(a, N).entries();
    const Matrix lam = lambdaA(a, N).entries();
    CHECK(std::abs(p.trace() - 1.0) < 1e-10);
    CHECK(maxEntry(p * p - p) < 1e-10);
    const int r = N - deg - 2;
    CHECK(interiorResidual(lam * p, Matrix::Zero(p.rows(), p.cols()), N, r) < 1e-8);
    CHECK(interiorResidual(p * lam, Matrix::Zero(p.rows(), p.cols()), N, r) < 1e-8);
    const Matrix shifted = lam + p;
    CHECK(interiorResidual(shifted * shifted, lam * lam + p, N, r) < 1e-8);
  }
}

TEST_CASE("smoothing difference") {
  const int N = 32;
  CHECK(maxEntry(smoothingDifference(ConformalFactor::one(), N).entries()) < 1e-14);

  const auto trivial = trivialFactor(0.4, 1.1);
  CHECK(interiorResidual(smoothingDifference(trivial, N).entries(), Matrix::Zero(2 * N + 1, 2 * N + 1), N, N - 3) <
        1e-8);

  // Independent assembly Λ_a² - D_a² from the full matrices.
  FixtureRng rng(31);
  const auto a = randomFactor(rng, 4);
  const Matrix lam = lambdaA(a, N).entries();
  const Matrix d = dA(a, N).entries();
  const Matrix delta = smoothingDifference(a, N).entries();
  CHECK(interiorResidual(delta, lam * lam - d * d, N, N - 10) < 1e-9);

  // Entries decay quickly away from the low modes.
  const auto op = smoothingDifference(a, N);
  CHECK(decayConstant(op, N / 2, 6.0) < 10.0 * decayConstant(op, 4, 6.0) + 1e-12);
}

TEST_CASE("commutator identities on the interior block") {
  const int N = 40;
  FixtureRng rng(37);
  const Matrix h = hMatrix(N).entries();
  const Matrix d = dMatrix(N).entries();
  const Matrix lam = lambdaMatrix(N).entries();
  const Matrix f0 = averagingMatrix(N).entries();
  for (int deg = 1; deg <= 6; ++deg) {
    const auto f = randomPolynomial(rng, deg);
    const Matrix mf = multOperator(f, N).entries();
    const Matrix mhf = multOperator(hilbert(f), N).entries();
    const Matrix comm = h * mhf - mhf * h;
    const int r = N - 2 * deg - 2;
    CHECK(interiorResidual(comm, h * (h * mf - mf * h) + f0 * mf - f[0] * f0, N, r) < 1e-9);
    CHECK(interiorResidual(lam * comm * lam, lam * mf * lam - d * mf * d, N, r) < 1e-9);
  }
}

TEST_CASE("spectrum basics") {
  const auto one = spectrum(ConformalFactor::one(), 64);
  CHECK(one.size() == 129);
  CHECK(one.trustHorizon == 32);
  for (int k = 0; k < one.size(); ++k) CHECK(std::abs(one.eigenvalues(k) - diskEigenvalue(k)) < 1e-10);

  FixtureRng rng(41);
  const auto a = randomFactor(rng, 5);
  const auto s = spectrum(a, 48);
  CHECK(s.eigenvalues(0) == 0.0);
  CHECK(s.zeroModeSnapped);
  CHECK(s.orthonormalityResidual() < 1e-10);
  for (int k = 1; k < s.size(); ++k) CHECK(s.eigenvalues(k) >= s.eigenvalues(k - 1));
  CHECK(s.eigenvalues(1) > 0.1);

  // Trivial factors are isospectral to the disk.
  const auto t = spectrum(trivialFactor(0.3, 0.7), 64);
  for (int k = 0; k <= t.trustHorizon; ++k) CHECK(std::abs(t.eigenvalues(k) - diskEigenvalue(k)) < 1e-8);
}

TEST_CASE("spectrum cache returns the same decomposition") {
  clearSpectrumCache();
  FixtureRng rng(43);
  const auto a = randomFactor(rng, 3);
  const auto first = cachedSpectrum(a, 32);
  const auto second = cachedSpectrum(a, 32);
  CHECK(first.get() == second.get());
  CHECK(cachedSpectrum(a, 40).get() != first.get());
}

TEST_CASE("D_a eigenbasis") {
  const int N = 32;
  const DaEigenbasis disk(ConformalFactor::one(), N);
  for (int n : {-3, 0, 5}) {
    Vector e = Vector::Zero(2 * N + 1);
    e(n + N) = 1.0;
    CHECK((disk.modeVector(n) - e).norm() < 1e-12);
  }

  FixtureRng rng(47);
  const auto a = randomFactor(rng, 4);
  const DaEigenbasis basis(a, N);
  CHECK(basis.periodicityResidual() < 1e-8);
  CHECK(std::abs(basis.innerProduct(1, 1) - 1.0) < 1e-8);
  CHECK(std::abs(basis.innerProduct(2, -1)) < 1e-8);

  // D_a φ_n = a^{1/2} D (a^{1/2} φ_n) = n φ_n on the grid.
  const int m = basis.gridSize();
  Eigen::VectorXd root(m);
  for (int j = 0; j < m; ++j) root(j) = std::sqrt(a(kTwoPi * j / m));
  for (int n = -N / 2; n <= N / 2; n += 4) {
    const Eigen::VectorXcd phi = basis.samples(n);
    const Eigen::VectorXcd daPhi = root.cwiseProduct(spectralD(root.cwiseProduct(phi)));
    CHECK((daPhi - static_cast<double>(n) * phi).norm() * std::sqrt(kTwoPi / m) < 1e-8);
  }

  const Matrix lam = lambdaA(a, N).entries();
  const Matrix shiftedInverse = (lam + p0Matrix(a, N).entries()).inverse();
  for (int n = -N / 2; n <= N / 2; ++n) {
    const Vector v = basis.modeVector(n);
    CHECK(std::abs(v.norm() - 1.0) < 1e-8);
    if (n == 0) continue;
    // Eigenfunction bounds ⟨Λ_a φ_n, φ_n⟩ ≥ |n| and ⟨(Λ_a + P_0)^{-1} φ_n, φ_n⟩ ≥ 1/|n|.
    CHECK(v.dot(lam * v).real() >= std::abs(n) - 1e-7);
    CHECK(v.dot(shiftedInverse * v).real() >= 1.0 / std::abs(n) - 1e-7);
  }
}

TEST_CASE("eigen alignment residual") {
  const int N = 32;
  for (int k : {0, 1, 7, 16}) CHECK(eigenAlignmentResidual(ConformalFactor::one(), N, k) < 1e-12);

  FixtureRng rng(53);
  const auto a = randomFactor(rng, 3);
  const auto spec = spectrum(a, N);
  const DaEigenbasis basis(a, N);
  auto rephased = spec;
  rephased.eigenvectors.col(9) *= std::polar(1.0, 0.83);
  CHECK(std::abs(eigenAlignmentResidual(spec, basis, 9) - eigenAlignmentResidual(rephased, basis, 9)) < 1e-14);
  CHECK(eigenAlignmentResidual(spec, basis, 16) < 1e-2);
}

TEST_CASE("hilbert commutator is skew-adjoint") {
  FixtureRng rng(59);
  const auto a = randomFactor(rng, 3);
  auto zeroMean = randomPolynomial(rng, 3);
  zeroMean.set(0, 0.0);
  const Matrix x = hilbertCommutator(a, zeroMean, 24).entries();
  CHECK(maxEntry(x + x.adjoint()) < 1e-10);
}
