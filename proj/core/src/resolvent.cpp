#include <cmath>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "steklov/errors.hpp"
#include "steklov/zeta.hpp"

namespace steklov {

GaussRule gaussJacobiUnit(double z, int points) {
  if (!(z > 0.0 && z < 1.0)) throw Error(ErrorCode::InvalidArgument, "z must lie in (0, 1)");
  if (points < 1) throw Error(ErrorCode::InvalidArgument, "need at least one quadrature point");
  // Golub–Welsch on the Jacobi matrix for (1-x)^α (1+x)^β, α = z-1, β = -z.
  const double alpha = z - 1.0;
  const double beta = -z;
  const double ab = alpha + beta;  // = -1
  Eigen::VectorXd diag(points);
  Eigen::VectorXd off(std::max(points - 1, 0));
  diag(0) = (beta - alpha) / (ab + 2.0);
  for (int n = 1; n < points; ++n) {
    const double t = 2.0 * n + ab;
    diag(n) = (beta * beta - alpha * alpha) / (t * (t + 2.0));
  }
  for (int n = 1; n < points; ++n) {
    const double t = 2.0 * n + ab;
    double b2;
    if (n == 1) {
      // The general formula is 0/0 here because α + β = -1.
      b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      b2 = 4.0 * n * (n + alpha) * (n + beta) * (n + ab) / (t * t * (t + 1.0) * (t - 1.0));
    }
    off(n - 1) = std::sqrt(b2);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::EigensolveFailure, "Golub-Welsch eigensolve failed");
  // Total mass 2^{α+β+1}Γ(α+1)Γ(β+1)/Γ(α+β+2) = Γ(z)Γ(1-z) = π / sin(πz).
  const double mass = 1.0 / gammaFactor(z);
  GaussRule rule;
  for (int i = 0; i < points; ++i) {
    const double v = solver.eigenvectors()(0, i);
    rule.nodes.push_back(0.5 * (1.0 + solver.eigenvalues()(i)));
    rule.weights.push_back(mass * v * v);
  }
  return rule;
}

namespace {

Matrix integrate(const Matrix& a, double scale, double z, int points) {
  const GaussRule rule = gaussJacobiUnit(z, points);
  const Eigen::Index n = a.rows();
  const Matrix id = Matrix::Identity(n, n);
  Matrix sum = Matrix::Zero(n, n);
  for (int i = 0; i < points; ++i) {
    const double t = rule.nodes[static_cast<std::size_t>(i)];
    const Matrix shifted = (1.0 - t) * a + (scale * t) * id;
    sum += rule.weights[static_cast<std::size_t>(i)] * shifted.partialPivLu().inverse();
  }
  return gammaFactor(z) * std::pow(scale, 1.0 - z) * sum;
}

}  // namespace

ResolventPower powerViaResolvent(const ConformalFactor& a, double z, int N, int quadraturePoints, double tolerance) {
  if (!(z > 0.0 && z < 1.0)) throw Error(ErrorCode::InvalidArgument, "z must lie in (0, 1)");
  const Matrix shifted = lambdaA(a, N).entries() + p0Matrix(a, N).entries();
  const Matrix squared = shifted * shifted;
  // λ = c t/(1-t) with c the geometric mean of the extreme eigenvalues of the
  // squared operator (the smallest is 1) balances the poles at both ends.
  const double scale = std::sqrt(squared.cwiseAbs().rowwise().sum().maxCoeff());
  const Matrix full = integrate(squared, scale, z, quadraturePoints);
  const Matrix half = integrate(squared, scale, z, std::max(1, quadraturePoints / 2));

  const auto spec = cachedSpectrum(a, N);
  ResolventPower out{TruncatedOperator(N, full), (full - half).cwiseAbs().maxCoeff(),
                     (full - eigenPower(*spec, -2.0 * z)).cwiseAbs().maxCoeff()};
  if (tolerance > 0.0 && out.errorEstimate > tolerance) {
    throw Error(ErrorCode::QuadratureBudget,
                fmt::format("{} points reach only {:.2e} (requested {:.1e})", quadraturePoints, out.errorEstimate,
                            tolerance));
  }
  return out;
}

}  // namespace steklov
