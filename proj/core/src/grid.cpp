#include "kcl/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kcl/quadrature_rules.hpp"

namespace kcl {

VelocityGrid VelocityGrid::uniform(const Vec3& center, double half_width, int n_per_axis) {
  if (!(half_width > 0.0)) throw std::invalid_argument("VelocityGrid: half_width must be positive");
  if (n_per_axis < 2) throw std::invalid_argument("VelocityGrid: n_per_axis must be >= 2");

  VelocityGrid g;
  g.mode_ = GridMode::Uniform;
  g.n_ = n_per_axis;
  g.center_ = center;
  g.half_width_ = half_width;
  const double h = 2.0 * half_width / (n_per_axis - 1);
  for (int axis = 0; axis < 3; ++axis) {
    g.nodes_[axis].resize(n_per_axis);
    g.weights_[axis].resize(n_per_axis);
    for (int i = 0; i < n_per_axis; ++i) {
      g.nodes_[axis][i] = center[axis] - half_width + h * i;
      g.weights_[axis][i] = (i == 0 || i == n_per_axis - 1) ? 0.5 * h : h;
    }
  }
  return g;
}

VelocityGrid VelocityGrid::hermite(const Vec3& center, double scale, int n_per_axis) {
  if (!(scale > 0.0)) throw std::invalid_argument("VelocityGrid: scale must be positive");
  if (n_per_axis < 2) throw std::invalid_argument("VelocityGrid: n_per_axis must be >= 2");

  const Rule1D rule = gauss_hermite(n_per_axis);
  VelocityGrid g;
  g.mode_ = GridMode::Hermite;
  g.n_ = n_per_axis;
  g.center_ = center;
  const double stretch = std::sqrt(2.0) * scale;
  for (int axis = 0; axis < 3; ++axis) {
    g.nodes_[axis].resize(n_per_axis);
    g.weights_[axis].resize(n_per_axis);
    for (int i = 0; i < n_per_axis; ++i) {
      const double x = rule.nodes[i];
      g.nodes_[axis][i] = center[axis] + stretch * x;
      // Fold exp(x^2) into the weight so the rule integrates plain functions.
      g.weights_[axis][i] = rule.weights[i] * std::exp(x * x) * stretch;
    }
  }
  double max_offset = 0.0;
  for (double v : g.nodes_[0]) max_offset = std::max(max_offset, std::abs(v - center[0]));
  g.half_width_ = max_offset;
  return g;
}

VelocityGrid VelocityGrid::for_state(const Vec3& u, double e, int n_per_axis, GridMode mode) {
  if (!(e > 0.0)) throw std::invalid_argument("VelocityGrid::for_state: e must be positive");
  const double sigma = std::sqrt(2.0 * e / 3.0);  // thermal standard deviation per axis
  if (mode == GridMode::Hermite) return hermite(u, sigma, n_per_axis);
  return uniform(u, 8.0 * sigma, n_per_axis);
}

double VelocityGrid::max_speed() const {
  double s = 0.0;
  for (int axis = 0; axis < 3; ++axis) {
    for (double v : nodes_[axis]) s = std::max(s, std::abs(v));
  }
  return s;
}

DistributionGrid::DistributionGrid(const VelocityGrid& grid,
                                   const std::function<double(const Vec3&)>& f)
    : grid_(&grid), values_(grid.size()) {
  const int n = grid.n_per_axis();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) values_[grid.index(i, j, k)] = f(grid.velocity(i, j, k));
}

}  // namespace kcl
