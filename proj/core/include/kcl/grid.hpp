#pragma once

#include <Eigen/Core>
#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace kcl {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

enum class GridMode { Uniform, Hermite };

/// Tensor-product discretization of velocity space. Weights are chosen so that
/// sum_i w_i g(v_i) approximates the integral of g over R^3:
///  - Uniform: trapezoid rule on [center - hw, center + hw]^3, exact for
///    constants over the covered box.
///  - Hermite: Gauss-Hermite nodes mapped by v = center + sqrt(2) * scale * x,
///    with the exp(x^2) factor folded into the weights; exact for a Gaussian
///    of standard deviation `scale` times polynomials up to degree 2n-1.
class VelocityGrid {
 public:
  static VelocityGrid uniform(const Vec3& center, double half_width, int n_per_axis);
  static VelocityGrid hermite(const Vec3& center, double scale, int n_per_axis);

  /// Default verification grid around a state with bulk velocity u and
  /// specific internal energy e: 8 thermal standard deviations, 24 nodes.
  static VelocityGrid for_state(const Vec3& u, double e, int n_per_axis = 24,
                                GridMode mode = GridMode::Hermite);

  GridMode mode() const { return mode_; }
  int n_per_axis() const { return n_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_ * n_; }
  const Vec3& center() const { return center_; }
  double half_width() const { return half_width_; }

  double node(int axis, int i) const { return nodes_[axis][i]; }
  double weight(int axis, int i) const { return weights_[axis][i]; }
  const std::vector<double>& nodes(int axis) const { return nodes_[axis]; }
  const std::vector<double>& weights(int axis) const { return weights_[axis]; }

  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
  }
  Vec3 velocity(int i, int j, int k) const {
    return {nodes_[0][i], nodes_[1][j], nodes_[2][k]};
  }
  double cell_weight(int i, int j, int k) const {
    return weights_[0][i] * weights_[1][j] * weights_[2][k];
  }

  Vec3 velocity(std::size_t flat) const {
    const int k = static_cast<int>(flat % n_);
    const int j = static_cast<int>((flat / n_) % n_);
    const int i = static_cast<int>(flat / (static_cast<std::size_t>(n_) * n_));
    return velocity(i, j, k);
  }
  double cell_weight(std::size_t flat) const {
    const int k = static_cast<int>(flat % n_);
    const int j = static_cast<int>((flat / n_) % n_);
    const int i = static_cast<int>(flat / (static_cast<std::size_t>(n_) * n_));
    return cell_weight(i, j, k);
  }

  double max_speed() const;

 private:
  VelocityGrid() = default;

  GridMode mode_ = GridMode::Uniform;
  int n_ = 0;
  Vec3 center_ = Vec3::Zero();
  double half_width_ = 0.0;
  std::array<std::vector<double>, 3> nodes_;
  std::array<std::vector<double>, 3> weights_;
};

/// Values of a distribution function at the nodes of a VelocityGrid.
class DistributionGrid {
 public:
  explicit DistributionGrid(const VelocityGrid& grid)
      : grid_(&grid), values_(grid.size(), 0.0) {}

  DistributionGrid(const VelocityGrid& grid, const std::function<double(const Vec3&)>& f);

  const VelocityGrid& grid() const { return *grid_; }
  double& operator()(int i, int j, int k) { return values_[grid_->index(i, j, k)]; }
  double operator()(int i, int j, int k) const { return values_[grid_->index(i, j, k)]; }
  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

 private:
  const VelocityGrid* grid_;
  std::vector<double> values_;
};

}  // namespace kcl
