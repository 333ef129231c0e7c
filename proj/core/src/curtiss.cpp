#include "kcl/curtiss.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "kcl/quadrature_rules.hpp"

namespace kcl::curtiss {

CoupleFluxSet curtiss_zeroth_fluxes(const CurtissMacro& macro, const GasConstants& c,
                                    int n_per_axis) {
  if (!(macro.rho > 0.0) || !(macro.theta > 0.0)) {
    throw std::invalid_argument("curtiss_zeroth_fluxes: rho and theta must be positive");
  }
  Eigen::SelfAdjointEigenSolver<Mat3> eig(macro.inertia);
  const Vec3 inertia_eigs = eig.eigenvalues();
  const Mat3 axes = eig.eigenvectors();

  // Angular modes with zero inertia carry no energy: marginalize them out.
  std::vector<int> active;
  const double eig_floor = 1e-12 * std::max(1.0, inertia_eigs.cwiseAbs().maxCoeff());
  for (int i = 0; i < 3; ++i) {
    if (inertia_eigs[i] < -eig_floor) {
      throw std::invalid_argument("curtiss_zeroth_fluxes: inertia tensor not PSD");
    }
    if (inertia_eigs[i] > eig_floor) active.push_back(i);
  }
  if (active.empty()) {
    throw std::invalid_argument("curtiss_zeroth_fluxes: inertia tensor has no positive mode");
  }

  const double kT = c.k_B * macro.theta;
  const double sigma_v = std::sqrt(c.R_s * macro.theta);  // per-axis velocity std dev
  const Rule1D gh = gauss_hermite(n_per_axis);
  const int n_ang = static_cast<int>(active.size());
  const int dims = 3 + n_ang;

  // Tensor Gauss-Hermite quadrature of the factorized Gaussian in (V, Omega);
  // the exp(-x^2) weight absorbs each normalized Gaussian factor exactly.
  std::size_t total = 1;
  for (int d = 0; d < dims; ++d) total *= static_cast<std::size_t>(n_per_axis);
  const double pi_norm = std::pow(std::acos(-1.0), -0.5);

  Mat3 second_w = Mat3::Zero();
  Vec3 q_moment = Vec3::Zero();
  Mat3 couple = Mat3::Zero();
  std::vector<int> idx(dims);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (int d = dims - 1; d >= 0; --d) {
      idx[d] = static_cast<int>(rest % n_per_axis);
      rest /= n_per_axis;
    }
    double weight = 1.0;
    Vec3 w;
    for (int d = 0; d < 3; ++d) {
      const double x = gh.nodes[idx[d]];
      w[d] = std::sqrt(2.0) * sigma_v * x;
      weight *= gh.weights[idx[d]] * pi_norm;
    }
    Vec3 omega = Vec3::Zero();
    for (int a = 0; a < n_ang; ++a) {
      const double lam = inertia_eigs[active[a]];
      const double sigma_o = std::sqrt(kT / lam);
      const double x = gh.nodes[idx[3 + a]];
      omega += std::sqrt(2.0) * sigma_o * x * axes.col(active[a]);
      weight *= gh.weights[idx[3 + a]] * pi_norm;
    }
    const Vec3 n_omega = macro.inertia * omega;
    const double energy = 0.5 * c.m * w.squaredNorm() + 0.5 * omega.dot(n_omega);
    second_w += weight * (w * w.transpose());
    q_moment += weight * energy * w;
    couple += weight * (w * n_omega.transpose());
  }

  const double number_density = macro.rho / c.m;
  CoupleFluxSet fluxes;
  fluxes.T = -c.m * number_density * second_w;
  fluxes.Q = number_density * q_moment;
  fluxes.M = -number_density * couple;
  return fluxes;
}

double nematic_internal_energy(double theta, double rho, const NematicField& field,
                               const GasConstants& c) {
  const double elastic = field.grad_n.cwiseProduct(field.grad_n).sum();  // tr(grad_n^T grad_n)
  return 2.5 * c.R_s * theta + 0.5 * field.lambda_inertia * rho * c.R_s * theta * elastic;
}

Mat3 energy_gradient_grad_n(double theta, double rho, const NematicField& field,
                            const GasConstants& c) {
  return field.lambda_inertia * rho * c.R_s * theta * field.grad_n;
}

Mat3 energy_gradient_grad_n_fd(double theta, double rho, const NematicField& field,
                               const GasConstants& c, double step) {
  Mat3 grad;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      NematicField hi = field, lo = field;
      hi.grad_n(i, j) += step;
      lo.grad_n(i, j) -= step;
      grad(i, j) = (nematic_internal_energy(theta, rho, hi, c) -
                    nematic_internal_energy(theta, rho, lo, c)) /
                   (2.0 * step);
    }
  }
  return grad;
}

Mat3 cross_tensor(const Vec3& n, const Mat3& S) {
  Mat3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double sum = 0.0;
      for (int q = 0; q < 3; ++q) {
        for (int p = 0; p < 3; ++p) {
          const int eps = (i == q || q == p || p == i)
                              ? 0
                              : (((q - i + 3) % 3 == 1 && (p - q + 3) % 3 == 1) ? 1 : -1);
          sum += eps * n[q] * S(j, p);
        }
      }
      out(i, j) = sum;
    }
  }
  return out;
}

EricksenFluxes ericksen_fluxes(const NematicField& field, double theta, double rho,
                               const GasConstants& c) {
  const Mat3 de = energy_gradient_grad_n(theta, rho, field, c);
  return {-de.transpose() * field.grad_n, cross_tensor(field.n, de)};
}

double variational_residual(const Mat3& T, const Mat3& M, const NematicField& field, double theta,
                            double rho, const Mat3& grad_v, const Mat3& grad_omega,
                            const GasConstants& c) {
  const Mat3 de = energy_gradient_grad_n(theta, rho, field, c);
  const Mat3 stress_defect = -T - de.transpose() * field.grad_n;
  const Mat3 couple_defect = -M + cross_tensor(field.n, de);
  return stress_defect.cwiseProduct(grad_v).sum() + couple_defect.cwiseProduct(grad_omega).sum();
}

LeslieComparison leslie_stress_comparison(const NematicField& field, double theta, double rho,
                                          const GasConstants& c) {
  const double p = rho * c.R_s * theta;
  const Mat3 gg = field.grad_n.transpose() * field.grad_n;
  LeslieComparison cmp;
  cmp.energy_derived = -ericksen_fluxes(field, theta, rho, c).T_star;
  cmp.momentum_equation = p * 0.5 * field.lambda_inertia * gg;
  const double denom = cmp.momentum_equation.cwiseProduct(cmp.momentum_equation).sum();
  cmp.degenerate = denom == 0.0;
  cmp.coefficient_ratio =
      cmp.degenerate ? std::numeric_limits<double>::quiet_NaN()
                     : cmp.energy_derived.cwiseProduct(cmp.momentum_equation).sum() / denom;
  return cmp;
}

}  // namespace kcl::curtiss
