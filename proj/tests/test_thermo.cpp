#include <doctest.h>

#include <cmath>

#include "kcl/chapman_enskog.hpp"
#include "kcl/thermo.hpp"

using namespace kcl;

TEST_CASE("equilibrium entropy matches the pinned reference value") {
  const GasConstants c;
  CHECK(thermo::equilibrium_entropy(1.0, 1.5, c) == doctest::Approx(4.2568156).epsilon(1e-7));
}

TEST_CASE("entropy and its inverse round-trip") {
  const GasConstants c(2.0, 1.5);
  for (double rho : {0.3, 1.0, 4.0}) {
    for (double e : {0.5, 1.5, 6.0}) {
      const double eta = thermo::equilibrium_entropy(rho, e, c);
      CHECK(thermo::internal_energy_from_entropy(rho, eta, c) ==
            doctest::Approx(e).epsilon(1e-12));
    }
  }
}

TEST_CASE("ideal-gas identities") {
  const GasConstants c;
  const double rho = 1.2, e = 1.5;
  const double theta = thermo::temperature(e, c);
  CHECK(theta == doctest::Approx(1.0));
  CHECK(thermo::pressure(rho, e, c) == doctest::Approx(rho * c.R_s * theta));
  CHECK(thermo::mechanical_pressure(-2.5 * Mat3::Identity()) == doctest::Approx(-2.5));
}

TEST_CASE("Clausius-Duhem production vanishes for the Euler closure") {
  const GasConstants c;
  AffinitySet aff;
  aff.D_full << 0.3, 0.1, 0.0, 0.1, -0.2, 0.0, 0.0, 0.0, 0.05;
  aff.g_theta = Vec3(0.2, -0.1, 0.05);
  const double p = 1.0, theta = 1.0;
  FluxSet euler;
  euler.T = -p * Mat3::Identity();
  // (T + pI):D = 0 and Q = 0: no dissipation.
  CHECK(thermo::clausius_duhem_production(euler, aff, p, theta) == doctest::Approx(0.0));
}

TEST_CASE("Clausius-Duhem production of the NSF closure matches the closed form") {
  const GasConstants c;
  AffinitySet aff;
  aff.D_full << 0.3, 0.1, -0.05, 0.1, -0.2, 0.15, -0.05, 0.15, 0.08;
  const Vec3 grad_theta(0.2, -0.1, 0.05);
  const double theta = 1.0, p = 0.8, tau = 0.3;
  aff.g_theta = -grad_theta / theta;
  const auto coeffs = ce::transport_coefficients(tau, p, c);
  const Mat3 Dd = aff.deviator();
  FluxSet nsf;
  nsf.T = -p * Mat3::Identity() + 2.0 * coeffs.nu * Dd;
  nsf.Q = -coeffs.kappa * grad_theta;
  const double expected =
      (2.0 * coeffs.nu * (Dd.array() * Dd.array()).sum() +
       coeffs.kappa * grad_theta.squaredNorm() / theta) /
      theta;
  CHECK(thermo::clausius_duhem_production(nsf, aff, p, theta) ==
        doctest::Approx(expected).epsilon(1e-12));
}
