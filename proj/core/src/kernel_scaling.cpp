#include "kcl/kernel_scaling.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kcl/quadrature_rules.hpp"

namespace kcl::kernel {

double maxwellian_speed_moment_closed_form(double lambda, double theta, const GasConstants& c) {
  if (lambda < 0.0) throw std::domain_error("speed moment: lambda must be >= 0");
  if (!(theta > 0.0)) throw std::domain_error("speed moment: theta must be positive");
  const double two_rs_theta = 2.0 * c.R_s * theta;
  return std::pow(two_rs_theta, 0.5 * lambda) * std::tgamma(0.5 * (lambda + 3.0)) /
         std::tgamma(1.5);
}

double maxwellian_speed_moment_quadrature(double lambda, double theta, const GasConstants& c,
                                          int n_nodes) {
  if (lambda < 0.0) throw std::domain_error("speed moment: lambda must be >= 0");
  if (!(theta > 0.0)) throw std::domain_error("speed moment: theta must be positive");
  const double sigma = std::sqrt(c.R_s * theta);
  // E[|w|^lambda] = int_0^inf r^lambda 4 pi r^2 N(r; sigma) dr; 14 sigma covers
  // the Gaussian tail far below the target tolerance.
  const Rule1D rule = gauss_legendre(n_nodes, 0.0, 14.0 * sigma);
  const double norm = std::pow(2.0 * std::numbers::pi * sigma * sigma, -1.5);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = rule.nodes[i];
    sum += rule.weights[i] * std::pow(r, lambda) * 4.0 * std::numbers::pi * r * r *
           std::exp(-0.5 * r * r / (sigma * sigma));
  }
  return norm * sum;
}

double collision_frequency(const KernelSpec& spec, double rho, double theta,
                           const GasConstants& c) {
  if (!(rho > 0.0)) throw std::domain_error("collision_frequency: rho must be positive");
  return spec.b_bar * (rho / c.m) * maxwellian_speed_moment_closed_form(spec.lambda, theta, c);
}

double collision_frequency_quadrature(const KernelSpec& spec, double rho, double theta,
                                      const GasConstants& c, int n_nodes) {
  if (!(rho > 0.0)) throw std::domain_error("collision_frequency: rho must be positive");
  return spec.b_bar * (rho / c.m) *
         maxwellian_speed_moment_quadrature(spec.lambda, theta, c, n_nodes);
}

double fit_temperature_exponent(const KernelSpec& spec, const GasConstants& c,
                                bool use_quadrature) {
  const std::array<double, 4> thetas = {0.5, 1.0, 2.0, 4.0};
  const double rho = 1.0;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (double theta : thetas) {
    const double freq = use_quadrature
                            ? collision_frequency_quadrature(spec, rho, theta, c)
                            : collision_frequency(spec, rho, theta, c);
    const double x = std::log(theta);
    const double y = std::log(freq);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(thetas.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

TransportScaling transport_scaling_exponent(double lambda) {
  if (lambda == 0.0) {
    throw std::domain_error("transport_scaling_exponent: lambda = 0 divides by zero");
  }
  if (lambda < 0.0) throw std::domain_error("transport_scaling_exponent: lambda must be > 0");
  return {1.0 - 2.0 / lambda, lambda < 2.0};
}

}  // namespace kcl::kernel
