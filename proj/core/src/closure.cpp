#include "kcl/closure.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

namespace kcl::closure {

const std::array<Mat3, 5>& deviatoric_basis() {
  static const std::array<Mat3, 5> basis = [] {
    std::array<Mat3, 5> b;
    const double r2 = 1.0 / std::sqrt(2.0);
    const double r6 = 1.0 / std::sqrt(6.0);
    b[0] = Mat3::Zero(); b[0](0, 1) = b[0](1, 0) = r2;
    b[1] = Mat3::Zero(); b[1](0, 2) = b[1](2, 0) = r2;
    b[2] = Mat3::Zero(); b[2](1, 2) = b[2](2, 1) = r2;
    b[3] = Mat3::Zero(); b[3](0, 0) = r2; b[3](1, 1) = -r2;
    b[4] = Mat3::Zero(); b[4](0, 0) = r6; b[4](1, 1) = r6; b[4](2, 2) = -2.0 * r6;
    return b;
  }();
  return basis;
}

Vec8 flatten(const Mat3& traceless, const Vec3& vec) {
  Vec8 flat;
  const auto& basis = deviatoric_basis();
  for (int i = 0; i < 5; ++i) flat[i] = traceless.cwiseProduct(basis[i]).sum();
  flat.tail<3>() = vec;
  return flat;
}

std::pair<Mat3, Vec3> unflatten(const Vec8& flat) {
  Mat3 tensor = Mat3::Zero();
  const auto& basis = deviatoric_basis();
  for (int i = 0; i < 5; ++i) tensor += flat[i] * basis[i];
  return {tensor, flat.tail<3>()};
}

Vec8 flatten_affinity(const AffinitySet& affinities) {
  return flatten(affinities.deviator(), affinities.g_theta);
}

Vec8 FluxProducer::gradient(const Vec8& J) const {
  Vec8 grad;
  const double h = 1e-6 * std::max(1.0, J.norm());
  for (int i = 0; i < 8; ++i) {
    Vec8 hi = J, lo = J;
    hi[i] += h;
    lo[i] -= h;
    grad[i] = (theta_xi(hi) - theta_xi(lo)) / (2.0 * h);
  }
  return grad;
}

Mat8 FluxProducer::hessian(const Vec8& J) const {
  Mat8 hess;
  const double h = 1e-5 * std::max(1.0, J.norm());
  for (int i = 0; i < 8; ++i) {
    Vec8 hi = J, lo = J;
    hi[i] += h;
    lo[i] -= h;
    hess.col(i) = (gradient(hi) - gradient(lo)) / (2.0 * h);
  }
  return 0.5 * (hess + hess.transpose());
}

QuadraticProducer::QuadraticProducer(const TransportCoefficients& coeffs, double theta) {
  if (!(coeffs.nu > 0.0) || !(coeffs.kappa > 0.0) || !(theta > 0.0)) {
    throw std::invalid_argument("QuadraticProducer: nu, kappa, theta must be positive");
  }
  metric_ = Mat8::Zero();
  metric_.topLeftCorner<5, 5>() = (1.0 / (2.0 * coeffs.nu)) * Eigen::Matrix<double, 5, 5>::Identity();
  metric_.bottomRightCorner<3, 3>() = (1.0 / (coeffs.kappa * theta)) * Mat3::Identity();
}

double QuadraticProducer::theta_xi(const Vec8& J) const { return J.dot(metric_ * J); }
Vec8 QuadraticProducer::gradient(const Vec8& J) const { return 2.0 * metric_ * J; }
Mat8 QuadraticProducer::hessian(const Vec8& /*J*/) const { return 2.0 * metric_; }

FluxSet rs_closure_quadratic(const AffinitySet& affinities, const TransportCoefficients& coeffs,
                             double theta, double p) {
  if (coeffs.nu < 0.0 || coeffs.kappa < 0.0 || !(theta > 0.0)) {
    throw std::invalid_argument("rs_closure_quadratic: need nu, kappa >= 0 and theta > 0");
  }
  FluxSet fluxes;
  fluxes.T = -p * Mat3::Identity() + 2.0 * coeffs.nu * affinities.deviator();
  fluxes.Q = coeffs.kappa * theta * affinities.g_theta;  // = -kappa grad(theta)
  return fluxes;
}

namespace {

// Scale the affinity direction until the constraint theta xi_hat(s d) = s d.A
// holds; this gives a feasible Newton start (and, for quadratics, the answer).
double feasible_scale(const FluxProducer& producer, const Vec8& d, double dA) {
  auto defect = [&](double s) { return producer.theta_xi(s * d) - s * dA; };
  double lo = 0.0, hi = 0.0;
  double prev_s = 1e-8;
  double prev_val = defect(prev_s);
  bool bracketed = false;
  for (double s = 2e-8; s < 1e10; s *= 1.6) {
    const double val = defect(s);
    if (prev_val * val <= 0.0 && (prev_val != 0.0 || val != 0.0)) {
      lo = prev_s;
      hi = s;
      bracketed = true;
      break;
    }
    prev_s = s;
    prev_val = val;
  }
  if (!bracketed) {
    throw ConvergenceError("rs_closure_numeric: no feasible point along the affinity direction",
                           std::abs(prev_val));
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (defect(lo) * defect(mid) <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

NumericSolution rs_closure_numeric(const FluxProducer& producer, const Vec8& A, int max_iter,
                                   double tol) {
  if (A.norm() == 0.0) return {Vec8::Zero(), 0.0, 0.0, 0};

  const Vec8 d = A.normalized();
  const double s0 = feasible_scale(producer, d, d.dot(A));
  Vec8 J = s0 * d;
  double mu = producer.gradient(J).dot(A) / A.squaredNorm();

  const double scale = std::max(1.0, A.norm());
  auto residual = [&](const Vec8& Jx, double mux) {
    Eigen::Matrix<double, 9, 1> r;
    r.head<8>() = producer.gradient(Jx) - mux * A;
    r[8] = producer.theta_xi(Jx) - Jx.dot(A);
    return r;
  };

  Eigen::Matrix<double, 9, 1> r = residual(J, mu);
  int iter = 0;
  for (; iter < max_iter; ++iter) {
    if (r.norm() <= tol * scale) break;
    Eigen::Matrix<double, 9, 9> jac = Eigen::Matrix<double, 9, 9>::Zero();
    jac.topLeftCorner<8, 8>() = producer.hessian(J);
    jac.topRightCorner<8, 1>() = -A;
    jac.bottomLeftCorner<1, 8>() = (producer.gradient(J) - A).transpose();
    const Eigen::Matrix<double, 9, 1> step = jac.fullPivLu().solve(-r);

    double t = 1.0;
    const double base = r.norm();
    for (int ls = 0; ls < 40; ++ls) {
      const Vec8 J_try = J + t * step.head<8>();
      const double mu_try = mu + t * step[8];
      const Eigen::Matrix<double, 9, 1> r_try = residual(J_try, mu_try);
      if (r_try.norm() < (1.0 - 1e-4 * t) * base) {
        J = J_try;
        mu = mu_try;
        r = r_try;
        break;
      }
      t *= 0.5;
      if (ls == 39) {
        throw ConvergenceError("rs_closure_numeric: line search stalled", base);
      }
    }
  }
  if (r.norm() > tol * scale) {
    throw ConvergenceError("rs_closure_numeric: max iterations reached", r.norm());
  }
  return {J, mu, r.norm(), iter};
}

MinRelaxationSolution min_relaxation_closure(const ProducerSpec& spec, const Vec8& A) {
  if (!spec.producer || !spec.iota) {
    throw std::invalid_argument("min_relaxation_closure: incomplete ProducerSpec");
  }
  if (!(spec.alpha > 0.0)) {
    throw std::invalid_argument("min_relaxation_closure: alpha must be positive");
  }
  if (A.norm() == 0.0) return {Vec8::Zero(), std::numeric_limits<double>::infinity()};
  const NumericSolution sol = rs_closure_numeric(*spec.producer, A);
  const double ja = sol.J.dot(A);
  if (!(ja > 0.0)) {
    throw ConvergenceError("min_relaxation_closure: non-positive entropy production", ja);
  }
  return {sol.J, std::pow(spec.iota(A) / ja, 1.0 / spec.alpha)};
}

FluxSet linear_irreversible_closure(const AffinitySet& affinities,
                                    const TransportCoefficients& coeffs, double theta, double p) {
  // Affinity-space production q(a) = 2 nu |a_s|^2 + kappa theta |a_g|^2 in the
  // flat layout; polarization recovers the unique symmetric linear flux map.
  auto q = [&](const Vec8& a) {
    return 2.0 * coeffs.nu * a.head<5>().squaredNorm() +
           coeffs.kappa * theta * a.tail<3>().squaredNorm();
  };
  Mat8 L;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      Vec8 ei = Vec8::Zero(), ej = Vec8::Zero();
      ei[i] = 1.0;
      ej[j] = 1.0;
      L(i, j) = 0.5 * (q(ei + ej) - q(ei) - q(ej));
    }
  }
  const Vec8 J = L * flatten_affinity(affinities);
  auto [S, Q] = unflatten(J);
  FluxSet fluxes;
  fluxes.T = -p * Mat3::Identity() + S;
  fluxes.Q = Q;
  return fluxes;
}

double linearity_defect(const std::function<Vec8(const Vec8&)>& flux_map, const Vec8& A1,
                        const Vec8& A2) {
  return (flux_map(A1 + A2) - flux_map(A1) - flux_map(A2)).norm();
}

EulerLimitReport euler_limit(const AffinitySet& affinities, double rho, double theta, double L,
                             const GasConstants& c, const std::vector<double>& kn_sequence) {
  if (kn_sequence.size() < 2) {
    throw std::invalid_argument("euler_limit: need at least two Knudsen numbers");
  }
  const double v_theta = std::sqrt(2.0 * c.R_s * theta);
  const double p = rho * c.R_s * theta;

  EulerLimitReport report;
  std::vector<FluxSet> fluxes;
  for (double kn : kn_sequence) {
    const double tau = kn * L / v_theta;
    const TransportCoefficients coeffs = ce::transport_coefficients(tau, p, c);
    const FluxSet f = rs_closure_quadratic(affinities, coeffs, theta, p);
    report.kn.push_back(kn);
    report.dissipative_norms.push_back((f.T + p * Mat3::Identity()).norm());
    report.heat_norms.push_back(f.Q.norm());
    fluxes.push_back(f);
  }
  // Linear extrapolation to Kn = 0 from the two smallest Knudsen numbers.
  const std::size_t n = kn_sequence.size();
  const double k1 = kn_sequence[n - 2], k2 = kn_sequence[n - 1];
  const double w2 = k1 / (k1 - k2), w1 = -k2 / (k1 - k2);
  report.limit.T = w1 * fluxes[n - 2].T + w2 * fluxes[n - 1].T;
  report.limit.Q = w1 * fluxes[n - 2].Q + w2 * fluxes[n - 1].Q;
  return report;
}

double bgk_relaxation_time(double rho, double theta, const GasConstants& c, double C_B) {
  if (!(rho > 0.0) || !(theta > 0.0) || !(C_B > 0.0)) {
    throw std::domain_error("bgk_relaxation_time: inputs must be positive");
  }
  return 1.0 / (C_B * rho * std::sqrt(c.R_s * theta));
}

double bgk_theta_from_tau(double rho, double tau, const GasConstants& c, double C_B) {
  if (!(rho > 0.0) || !(tau > 0.0) || !(C_B > 0.0)) {
    throw std::domain_error("bgk_theta_from_tau: inputs must be positive");
  }
  const double x = C_B * rho * tau;
  return 1.0 / (c.R_s * x * x);
}

}  // namespace kcl::closure
