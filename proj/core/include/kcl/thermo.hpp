#pragma once

#include "kcl/constants.hpp"
#include "kcl/grid.hpp"

namespace kcl {

/// Thermodynamic affinities: deviatoric strain rate and g = -grad(theta)/theta.
struct AffinitySet {
  Mat3 D_full = Mat3::Zero();
  Vec3 g_theta = Vec3::Zero();

  Mat3 deviator() const {
    return D_full - (D_full.trace() / 3.0) * Mat3::Identity();
  }
};

/// Thermodynamic fluxes: Cauchy stress and heat flux.
struct FluxSet {
  Mat3 T = Mat3::Zero();
  Vec3 Q = Vec3::Zero();
};

namespace thermo {

/// Entropy constant C = (3/2)(log 2pi + 1) + log m, shared by the entropy
/// constitutive relation and its inverse so the pair is exact.
double entropy_constant(const GasConstants& c);

/// eta = R_s [ (3/2) log((2/3) e rho^(-2/3)) + C ].
double equilibrium_entropy(double rho, double e, const GasConstants& c);

/// Inverse of equilibrium_entropy at fixed rho.
double internal_energy_from_entropy(double rho, double eta, const GasConstants& c);

/// theta = 2e / (3 R_s).
double temperature(double e, const GasConstants& c);

/// p = (2/3) rho e = rho R_s theta.
double pressure(double rho, double e, const GasConstants& c);

/// Mechanical pressure p_hat = tr(T)/3.
double mechanical_pressure(const Mat3& T);

/// xi = [ (T + pI):D + Q.g ] / theta, with g = -grad(theta)/theta carried
/// inside the AffinitySet.
double clausius_duhem_production(const FluxSet& fluxes, const AffinitySet& affinities, double p,
                                 double theta);

}  // namespace thermo

}  // namespace kcl
