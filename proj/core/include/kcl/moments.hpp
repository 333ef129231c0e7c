#pragma once

#include <stdexcept>

#include "kcl/constants.hpp"
#include "kcl/grid.hpp"

namespace kcl {

/// (rho, u, e) triple of primitive macroscopic fields.
struct MacroState {
  double rho;
  Vec3 u;
  double e;

  MacroState(double rho_, const Vec3& u_, double e_) : rho(rho_), u(u_), e(e_) {
    if (!(rho > 0.0) || !(e > 0.0)) {
      throw std::invalid_argument("MacroState: rho and e must be positive");
    }
  }
};

struct ConservedMoments {
  double rho;
  Vec3 momentum;
  double total_energy;  // rho*(e + |u|^2/2)

  MacroState to_macro() const;
};

class DegenerateDistributionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDistributionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (int m f, int m v f, int (m/2)|v|^2 f) by grid quadrature.
ConservedMoments conserved_moments(const DistributionGrid& f, const GasConstants& c);

/// Cauchy stress T = -int m (v-u) x (v-u) f dv. The bulk velocity is an
/// explicit argument; it is never recomputed from f.
Mat3 stress_tensor(const DistributionGrid& f, const Vec3& u, const GasConstants& c);

/// Heat flux Q = int (m/2)|w|^2 w f dv with w = v - u.
Vec3 heat_flux(const DistributionGrid& f, const Vec3& u, const GasConstants& c);

/// Entropy density rho*eta = -k_B int f log f dv. Values are floored at
/// kEntropyFloor inside the logarithm; a negative value at a weighted node
/// throws InvalidDistributionError.
double entropy_density(const DistributionGrid& f, const GasConstants& c);

/// Entropy flux Phi = -k_B int w f log f dv.
Vec3 entropy_flux(const DistributionGrid& f, const Vec3& u, const GasConstants& c);

inline constexpr double kEntropyFloor = 1e-300;

}  // namespace kcl
