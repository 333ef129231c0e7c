#pragma once

#include <array>

#include "kcl/moments.hpp"
#include "kcl/thermo.hpp"

namespace kcl {

/// Velocity and internal-energy gradients driving the first-order correction.
struct GradientState {
  Mat3 D_full = Mat3::Zero();
  Vec3 grad_e = Vec3::Zero();

  Mat3 deviator() const {
    return D_full - (D_full.trace() / 3.0) * Mat3::Identity();
  }
  Vec3 grad_theta(const GasConstants& c) const { return (2.0 / (3.0 * c.R_s)) * grad_e; }
};

/// Near-equilibrium state: macroscopic fields, gradients, rescaled relaxation
/// time tau_tilde and Knudsen number, with tau = Kn * tau_tilde.
struct CEState {
  MacroState macro;
  GradientState grads;
  double tau_tilde = 1.0;
  double Kn = 0.0;

  double tau() const { return Kn * tau_tilde; }
};

struct TransportCoefficients {
  double nu;
  double kappa;
};

namespace ce {

/// Local Maxwellian f0(v) = (rho/m) (4 pi e/3)^(-3/2) exp(-|v-u|^2/((4/3)e)).
double eval_maxwellian(const MacroState& macro, const GasConstants& c, const Vec3& v);

DistributionGrid maxwellian_grid(const MacroState& macro, const GasConstants& c,
                                 const VelocityGrid& grid);

/// First-order correction
/// f1 = -tau_tilde f0 [ (3/2)((w x w)^d : D^d)/e + ((3/4)|w|^2/e - 5/2) w.grad_e/e ].
double eval_f1(const CEState& state, const GasConstants& c, const Vec3& v);

DistributionGrid f1_grid(const CEState& state, const GasConstants& c, const VelocityGrid& grid);

/// First-order truncation f0 + Kn f1 on a grid (a formal expansion; values may
/// be negative at large |w| for large gradients).
DistributionGrid truncated_grid(const CEState& state, const GasConstants& c,
                                const VelocityGrid& grid);

/// Residuals of the five moments of f1 that must vanish:
/// int f1, int v f1 (3 components), int |v|^2 f1, each normalized by the
/// corresponding moment scale of f0.
struct SolvabilityReport {
  std::array<double, 5> residuals;
  double tolerance;
  bool pass;
};
SolvabilityReport check_solvability(const CEState& state, const VelocityGrid& grid,
                                    const GasConstants& c, double tolerance = 1e-8);

/// Deltas of (rho, rho u, rho e) between the order-0 and order-1 truncations,
/// normalized by the order-0 values.
struct ExpansionReport {
  std::array<double, 5> deltas;
  double entropy_delta;  // rho eta^(1) - rho eta^(0), unnormalized
};
ExpansionReport expansion_independence_report(const CEState& state, const VelocityGrid& grid,
                                              const GasConstants& c);

/// Stress and heat flux of f0 + Kn f1 by quadrature.
FluxSet first_order_fluxes(const CEState& state, const VelocityGrid& grid, const GasConstants& c);

/// xi = (Kn^2/tau) int k_B (f1)^2 / f0 dv.
double entropy_production_quadrature(const CEState& state, const VelocityGrid& grid,
                                     const GasConstants& c);

/// theta xi = 2 nu D^d:D^d + kappa |grad theta|^2 / theta with nu = tau p,
/// kappa = (5/2) R_s tau p.
double entropy_production_closed_form(const CEState& state, const GasConstants& c);

/// nu = tau p, kappa = (5/2) R_s tau p.
TransportCoefficients transport_coefficients(double tau, double p, const GasConstants& c);

/// xi = (1/tau) int k_B (f - f0) log f dv, with f0 the Maxwellian matching
/// macro. Throws if the result is negative beyond -tolerance.
double bgk_entropy_production(const DistributionGrid& f, const MacroState& macro, double tau,
                              const GasConstants& c, double tolerance = 1e-10);

}  // namespace ce

}  // namespace kcl
