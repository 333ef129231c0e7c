#pragma once

#include <stdexcept>

namespace kcl {

/// Particle mass, Boltzmann constant and the derived specific gas constant.
/// Defaults are the nondimensional units m = k_B = 1, hence R_s = 1.
struct GasConstants {
  double m = 1.0;
  double k_B = 1.0;
  double R_s = 1.0;

  GasConstants() = default;
  GasConstants(double mass, double boltzmann) : m(mass), k_B(boltzmann), R_s(boltzmann / mass) {
    if (!(m > 0.0) || !(k_B > 0.0)) {
      throw std::invalid_argument("GasConstants: m and k_B must be positive");
    }
  }
};

}  // namespace kcl
