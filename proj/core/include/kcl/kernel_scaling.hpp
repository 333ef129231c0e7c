#pragma once

#include "kcl/constants.hpp"

namespace kcl {

/// Power-law collision kernel |v - v_*|^lambda with angular-average prefactor
/// b_bar. The transport-scaling formula is only backed for 0 <= lambda < 2;
/// out-of-range values are flagged, not rejected.
struct KernelSpec {
  double lambda;
  double b_bar = 1.0;
};

namespace kernel {

/// Maxwellian radial moment E[|w|^lambda], closed form
/// (2 R_s theta)^(lambda/2) Gamma((lambda+3)/2) / Gamma(3/2).
double maxwellian_speed_moment_closed_form(double lambda, double theta, const GasConstants& c);

/// Same moment via 1D Gauss-Legendre quadrature in spherical coordinates.
double maxwellian_speed_moment_quadrature(double lambda, double theta, const GasConstants& c,
                                          int n_nodes = 256);

/// Collision frequency 1/tau = b_bar (rho/m) E[|w|^lambda], closed form.
double collision_frequency(const KernelSpec& spec, double rho, double theta,
                           const GasConstants& c);
/// Same by radial quadrature.
double collision_frequency_quadrature(const KernelSpec& spec, double rho, double theta,
                                      const GasConstants& c, int n_nodes = 256);

/// Log-log regression slope of 1/tau against theta over {0.5, 1, 2, 4};
/// expected lambda/2. Set use_quadrature to fit quadrature data instead of
/// the closed form.
double fit_temperature_exponent(const KernelSpec& spec, const GasConstants& c,
                                bool use_quadrature = false);

struct TransportScaling {
  double exponent;           // 1 - 2/lambda, the power of (rho tau) in nu
  bool within_paper_range;   // 0 <= lambda < 2
};

/// nu ~ R_s (rho tau)^(1 - 2/lambda); lambda = 0 is a domain error.
TransportScaling transport_scaling_exponent(double lambda);

}  // namespace kernel

}  // namespace kcl
