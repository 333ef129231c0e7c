#include "kcl/moments.hpp"

#include <cmath>

namespace kcl {

MacroState ConservedMoments::to_macro() const {
  const Vec3 u = momentum / rho;
  const double e = total_energy / rho - 0.5 * u.squaredNorm();
  return MacroState(rho, u, e);
}

ConservedMoments conserved_moments(const DistributionGrid& f, const GasConstants& c) {
  const VelocityGrid& g = f.grid();
  const int n = g.n_per_axis();
  double rho = 0.0, energy = 0.0;
  Vec3 mom = Vec3::Zero();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double wf = g.cell_weight(i, j, k) * f(i, j, k);
        const Vec3 v = g.velocity(i, j, k);
        rho += wf;
        mom += wf * v;
        energy += 0.5 * wf * v.squaredNorm();
      }
    }
  }
  rho *= c.m;
  mom *= c.m;
  energy *= c.m;
  if (!(rho > 1e-14)) {
    throw DegenerateDistributionError("conserved_moments: density below quadrature tolerance");
  }
  return {rho, mom, energy};
}

Mat3 stress_tensor(const DistributionGrid& f, const Vec3& u, const GasConstants& c) {
  const VelocityGrid& g = f.grid();
  const int n = g.n_per_axis();
  Mat3 second = Mat3::Zero();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double wf = g.cell_weight(i, j, k) * f(i, j, k);
        const Vec3 w = g.velocity(i, j, k) - u;
        second += wf * (w * w.transpose());
      }
    }
  }
  Mat3 T = -c.m * second;
  return 0.5 * (T + T.transpose());  // symmetric to machine precision
}

Vec3 heat_flux(const DistributionGrid& f, const Vec3& u, const GasConstants& c) {
  const VelocityGrid& g = f.grid();
  const int n = g.n_per_axis();
  Vec3 q = Vec3::Zero();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double wf = g.cell_weight(i, j, k) * f(i, j, k);
        const Vec3 w = g.velocity(i, j, k) - u;
        q += 0.5 * wf * w.squaredNorm() * w;
      }
    }
  }
  return c.m * q;
}

double entropy_density(const DistributionGrid& f, const GasConstants& c) {
  const VelocityGrid& g = f.grid();
  const int n = g.n_per_axis();
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double weight = g.cell_weight(i, j, k);
        const double fv = f(i, j, k);
        if (fv < 0.0 && weight != 0.0) {
          throw InvalidDistributionError("entropy_density: negative f at a weighted node");
        }
        s += weight * fv * std::log(std::max(fv, kEntropyFloor));
      }
    }
  }
  return -c.k_B * s;
}

Vec3 entropy_flux(const DistributionGrid& f, const Vec3& u, const GasConstants& c) {
  const VelocityGrid& g = f.grid();
  const int n = g.n_per_axis();
  Vec3 phi = Vec3::Zero();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double weight = g.cell_weight(i, j, k);
        const double fv = f(i, j, k);
        if (fv < 0.0 && weight != 0.0) {
          throw InvalidDistributionError("entropy_flux: negative f at a weighted node");
        }
        const Vec3 w = g.velocity(i, j, k) - u;
        phi += weight * fv * std::log(std::max(fv, kEntropyFloor)) * w;
      }
    }
  }
  return -c.k_B * phi;
}

}  // namespace kcl
