#pragma once

#include <Eigen/Core>
#include <functional>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kcl/chapman_enskog.hpp"
#include "kcl/thermo.hpp"

namespace kcl {

using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat8 = Eigen::Matrix<double, 8, 8>;

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual_)
      : std::runtime_error(what), residual(residual_) {}
  double residual;
};

namespace closure {

/// Orthonormal basis of symmetric traceless 3x3 tensors under the Frobenius
/// inner product; flat dot products equal tensor double contractions.
const std::array<Mat3, 5>& deviatoric_basis();

/// Flatten (symmetric traceless tensor, vector) into the 5+3 layout.
Vec8 flatten(const Mat3& traceless, const Vec3& vec);
std::pair<Mat3, Vec3> unflatten(const Vec8& flat);

/// Affinity vector A = (flatten(D^d), g) with g = -grad(theta)/theta.
Vec8 flatten_affinity(const AffinitySet& affinities);

/// Entropy production expressed in flux space, theta * xi_hat(J). Newton needs
/// gradient and Hessian; the defaults are central finite differences.
class FluxProducer {
 public:
  virtual ~FluxProducer() = default;
  virtual double theta_xi(const Vec8& J) const = 0;
  virtual Vec8 gradient(const Vec8& J) const;
  virtual Mat8 hessian(const Vec8& J) const;
};

/// theta * xi_hat(J) = |J_s|^2 / (2 nu) + |J_q|^2 / (kappa theta).
class QuadraticProducer final : public FluxProducer {
 public:
  QuadraticProducer(const TransportCoefficients& coeffs, double theta);
  double theta_xi(const Vec8& J) const override;
  Vec8 gradient(const Vec8& J) const override;
  Mat8 hessian(const Vec8& J) const override;

 private:
  Mat8 metric_;
};

/// Producer of the form theta * xi_hat = iota(A) / tau(J, A)^alpha together
/// with the entropy-production numerator iota.
struct ProducerSpec {
  std::shared_ptr<const FluxProducer> producer;
  std::function<double(const Vec8&)> iota;
  double alpha = 1.0;
};

/// Closed-form maximizer of the quadratic producer subject to
/// theta xi_hat(J) = J.A: T = -pI + 2 nu D^d, Q = -kappa grad(theta).
FluxSet rs_closure_quadratic(const AffinitySet& affinities, const TransportCoefficients& coeffs,
                             double theta, double p);

struct NumericSolution {
  Vec8 J;
  double multiplier;      // mu in grad(theta xi_hat) = mu A; mu = 2 for quadratic
  double kkt_residual;
  int iterations;
};

/// Damped Newton on the KKT system of: maximize xi_hat(J) subject to
/// theta xi_hat(J) = J.A. A = 0 returns J = 0 immediately.
NumericSolution rs_closure_numeric(const FluxProducer& producer, const Vec8& A,
                                   int max_iter = 100, double tol = 1e-12);

struct MinRelaxationSolution {
  Vec8 J;
  double tau_star;
};

/// Minimal-relaxation-time dual: same argmin J, tau* = (iota(A)/(J.A))^(1/alpha).
MinRelaxationSolution min_relaxation_closure(const ProducerSpec& spec, const Vec8& A);

/// Linear map J = L A obtained by polarizing the affinity-space quadratic form
/// theta xi_hat(A) = 2 nu D^d:D^d + kappa theta |g|^2. Coincides with the RS
/// closure for quadratic producers.
FluxSet linear_irreversible_closure(const AffinitySet& affinities,
                                    const TransportCoefficients& coeffs, double theta, double p);

/// ||closure(A1 + A2) - closure(A1) - closure(A2)|| for a candidate flux map.
double linearity_defect(const std::function<Vec8(const Vec8&)>& flux_map, const Vec8& A1,
                        const Vec8& A2);

struct EulerLimitReport {
  FluxSet limit;                          // extrapolated Kn -> 0 fluxes
  std::vector<double> kn;
  std::vector<double> dissipative_norms;  // ||T + pI|| at each Kn
  std::vector<double> heat_norms;         // ||Q|| at each Kn
};

/// Evaluate the quadratic RS closure along tau(Kn) = Kn L / V_theta and
/// extrapolate linearly to Kn = 0; the limit is the Euler pair (-pI, 0).
EulerLimitReport euler_limit(const AffinitySet& affinities, double rho, double theta, double L,
                             const GasConstants& c,
                             const std::vector<double>& kn_sequence = {1e-2, 1e-3, 1e-4});

/// Hard-sphere relaxation-time law 1/tau = C_B rho sqrt(R_s theta).
double bgk_relaxation_time(double rho, double theta, const GasConstants& c, double C_B);
/// Inverse map theta = (C_B rho tau)^(-2) / R_s.
double bgk_theta_from_tau(double rho, double tau, const GasConstants& c, double C_B);

}  // namespace closure

}  // namespace kcl
