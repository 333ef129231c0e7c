#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kcl/constants.hpp"
#include "kcl/grid.hpp"
#include "kcl/moments.hpp"

namespace kcl {

class RealizabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InsufficientSignalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace sim {

using Multipliers = Eigen::Matrix<double, 5, 1>;

/// Discrete Maxwellian exp(x0 + x.v - |x4| |v|^2) whose grid-quadrature
/// moments match the five conserved inputs exactly (Newton solve on the
/// multipliers). warm_start seeds the iteration; multipliers_out returns the
/// converged multipliers for reuse.
DistributionGrid discrete_equilibrium(const ConservedMoments& conserved, const VelocityGrid& grid,
                                      const GasConstants& c,
                                      const Multipliers* warm_start = nullptr,
                                      Multipliers* multipliers_out = nullptr);

enum class TauModelKind { Constant, HardSphere };
enum class InitKind { Uniform, Bimodal, ShearWave };

struct SimConfig {
  int n_cells = 64;
  double domain_length = 1.0;
  int n_velocity = 16;
  double v_half_width = 0.0;  // 0 = auto: 8 thermal standard deviations of e0

  TauModelKind tau_model = TauModelKind::Constant;
  double tau = 0.05;   // constant model; tau = 0 projects onto equilibrium
  double C_B = 1.0;    // hard-sphere model 1/tau = C_B rho sqrt(R_s theta)

  double cfl = 0.5;
  double t_end = 1.0;
  int output_every = 10;

  InitKind init = InitKind::Bimodal;
  double rho0 = 1.0;
  double e0 = 1.5;
  double amplitude = 0.2;  // density perturbation (bimodal) or shear velocity U
  double u_offset = 1.0;   // stream separation of the bimodal mixture
  int mode = 1;            // spatial wavenumber multiplier, k = 2 pi mode / L

  GasConstants gas;

  void validate() const;
};

/// `key = value` per line; '#' comments; unknown keys and malformed values are
/// reported with their line number.
SimConfig parse_sim_config(std::istream& in);
SimConfig parse_sim_config_file(const std::string& path);

struct SimState {
  const VelocityGrid* grid = nullptr;
  int n_cells = 0;
  double dx = 0.0;
  double time = 0.0;
  std::vector<double> f;  // n_cells x grid.size(), cell-major

  double& at(int cell, std::size_t node) { return f[cell * grid->size() + node]; }
  double at(int cell, std::size_t node) const { return f[cell * grid->size() + node]; }
};

struct Diagnostics {
  std::vector<double> time;
  std::vector<double> mass;
  std::vector<double> px, py, pz;
  std::vector<double> energy;
  std::vector<double> H;        // integrated entropy
  std::vector<double> min_xi;   // per-cell BGK entropy production, minimum
  std::vector<double> amp_shear;
  double dt = 0.0;
  long steps = 0;
};

class Simulator {
 public:
  explicit Simulator(const SimConfig& config);

  const SimState& state() const { return state_; }
  const VelocityGrid& grid() const { return grid_; }
  double dt() const { return dt_; }

  /// One upwind-advection + implicit-BGK-relaxation step.
  void step();

  /// Integrate to t_end, sampling diagnostics every output_every steps.
  Diagnostics run();

  /// Conserved totals (sum over cells times dx).
  ConservedMoments totals() const;

 private:
  void apply_advection();
  void apply_relaxation();
  void sample(Diagnostics& diag);
  ConservedMoments cell_moments(int cell) const;
  double cell_tau(const ConservedMoments& cm) const;

  SimConfig config_;
  VelocityGrid grid_;
  SimState state_;
  double dt_;
  double shear_wavenumber_;
  std::vector<double> advect_buffer_;
  std::vector<Multipliers> warm_;
  std::vector<bool> warm_valid_;
  // flattened node data shared by all cells
  std::vector<double> node_weight_, node_vx_, node_vsq_;
};

/// Least-squares slope of log|amp_shear| against time; returns
/// nu_eff = decay_rate * rho / k^2. Throws InsufficientSignalError when the
/// amplitude sits below the noise floor.
double measure_shear_decay(const Diagnostics& diag, double k, double rho);

void write_series_csv(std::ostream& out, const Diagnostics& diag);

}  // namespace sim

}  // namespace kcl
