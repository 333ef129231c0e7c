#include "kcl/thermo.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kcl::thermo {

double entropy_constant(const GasConstants& c) {
  return 1.5 * (std::log(2.0 * std::numbers::pi) + 1.0) + std::log(c.m);
}

double equilibrium_entropy(double rho, double e, const GasConstants& c) {
  if (!(rho > 0.0) || !(e > 0.0)) {
    throw std::domain_error("equilibrium_entropy: rho and e must be positive");
  }
  return c.R_s * (1.5 * std::log((2.0 / 3.0) * e * std::pow(rho, -2.0 / 3.0)) +
                  entropy_constant(c));
}

double internal_energy_from_entropy(double rho, double eta, const GasConstants& c) {
  if (!(rho > 0.0)) {
    throw std::domain_error("internal_energy_from_entropy: rho must be positive");
  }
  return 1.5 * std::pow(rho, 2.0 / 3.0) *
         std::exp((2.0 / 3.0) * (eta / c.R_s - entropy_constant(c)));
}

double temperature(double e, const GasConstants& c) {
  if (!(e > 0.0)) throw std::domain_error("temperature: e must be positive");
  return 2.0 * e / (3.0 * c.R_s);
}

double pressure(double rho, double e, const GasConstants& c) {
  if (!(rho > 0.0) || !(e > 0.0)) {
    throw std::domain_error("pressure: rho and e must be positive");
  }
  (void)c;
  return (2.0 / 3.0) * rho * e;
}

double mechanical_pressure(const Mat3& T) { return T.trace() / 3.0; }

double clausius_duhem_production(const FluxSet& fluxes, const AffinitySet& affinities, double p,
                                 double theta) {
  if (!(theta > 0.0)) {
    throw std::domain_error("clausius_duhem_production: theta must be positive");
  }
  const Mat3 dissipative = fluxes.T + p * Mat3::Identity();
  const double work = dissipative.cwiseProduct(affinities.D_full).sum();
  return (work + fluxes.Q.dot(affinities.g_theta)) / theta;
}

}  // namespace kcl::thermo
