#include "kcl/quadrature_rules.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kcl {

namespace {

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights come from
// the first components of the eigenvectors scaled by the zeroth moment mu0.
Rule1D golub_welsch(const Eigen::VectorXd& off_diagonal, double mu0) {
  const int n = static_cast<int>(off_diagonal.size()) + 1;
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    jacobi(i, i + 1) = off_diagonal(i);
    jacobi(i + 1, i) = off_diagonal(i);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  Rule1D rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    const double first = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * first * first;
  }
  return rule;
}

}  // namespace

Rule1D gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: n must be >= 1");
  Eigen::VectorXd beta(n - 1);
  for (int i = 1; i < n; ++i) beta(i - 1) = std::sqrt(i / 2.0);
  return golub_welsch(beta, std::sqrt(std::numbers::pi));
}

Rule1D gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  if (!(b > a)) throw std::invalid_argument("gauss_legendre: need b > a");
  Eigen::VectorXd beta(n - 1);
  for (int i = 1; i < n; ++i) beta(i - 1) = i / std::sqrt(4.0 * i * i - 1.0);
  Rule1D rule = golub_welsch(beta, 2.0);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

}  // namespace kcl
