#include "kcl/bgk_sim.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

namespace kcl::sim {

namespace {

// Per-axis quadrature sums S[q] = sum_i w_i exp(b v_i + g v_i^2) v_i^q for
// q = 0..4. The exponential-of-quadratic factorizes over axes, so all moments
// and the Newton Gram matrix are products of these 1D sums.
using AxisSums = std::array<double, 5>;

AxisSums axis_sums(const VelocityGrid& grid, int axis, double b, double g) {
  AxisSums S{0, 0, 0, 0, 0};
  const auto& nodes = grid.nodes(axis);
  const auto& weights = grid.weights(axis);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double v = nodes[i];
    double term = weights[i] * std::exp(b * v + g * v * v);
    for (int q = 0; q < 5; ++q) {
      S[q] += term;
      term *= v;
    }
  }
  return S;
}

// Quadrature moments of exp(x . phi) with phi = (1, vx, vy, vz, |v|^2), and
// the Gram matrix sum w f phi phi^T (the Newton Jacobian, SPD).
void equilibrium_moments(const Multipliers& x, const VelocityGrid& grid,
                         Eigen::Matrix<double, 5, 1>& m, Eigen::Matrix<double, 5, 5>* J) {
  const double E = std::exp(x[0]);
  const AxisSums X = axis_sums(grid, 0, x[1], x[4]);
  const AxisSums Y = axis_sums(grid, 1, x[2], x[4]);
  const AxisSums Z = axis_sums(grid, 2, x[3], x[4]);

  m[0] = E * X[0] * Y[0] * Z[0];
  m[1] = E * X[1] * Y[0] * Z[0];
  m[2] = E * X[0] * Y[1] * Z[0];
  m[3] = E * X[0] * Y[0] * Z[1];
  m[4] = E * (X[2] * Y[0] * Z[0] + X[0] * Y[2] * Z[0] + X[0] * Y[0] * Z[2]);

  if (!J) return;
  Eigen::Matrix<double, 5, 5>& G = *J;
  G(0, 0) = m[0];
  G(0, 1) = m[1];
  G(0, 2) = m[2];
  G(0, 3) = m[3];
  G(0, 4) = m[4];
  G(1, 1) = E * X[2] * Y[0] * Z[0];
  G(1, 2) = E * X[1] * Y[1] * Z[0];
  G(1, 3) = E * X[1] * Y[0] * Z[1];
  G(1, 4) = E * (X[3] * Y[0] * Z[0] + X[1] * Y[2] * Z[0] + X[1] * Y[0] * Z[2]);
  G(2, 2) = E * X[0] * Y[2] * Z[0];
  G(2, 3) = E * X[0] * Y[1] * Z[1];
  G(2, 4) = E * (X[2] * Y[1] * Z[0] + X[0] * Y[3] * Z[0] + X[0] * Y[1] * Z[2]);
  G(3, 3) = E * X[0] * Y[0] * Z[2];
  G(3, 4) = E * (X[2] * Y[0] * Z[1] + X[0] * Y[2] * Z[1] + X[0] * Y[0] * Z[3]);
  G(4, 4) = E * (X[4] * Y[0] * Z[0] + X[0] * Y[4] * Z[0] + X[0] * Y[0] * Z[4] +
                 2.0 * (X[2] * Y[2] * Z[0] + X[2] * Y[0] * Z[2] + X[0] * Y[2] * Z[2]));
  G = G.selfadjointView<Eigen::Upper>();
}

// f_eq node values E * ax_i * ay_j * az_k without per-node exponentials.
void fill_equilibrium(const Multipliers& x, const VelocityGrid& grid, double* out) {
  const int n = grid.n_per_axis();
  const double E = std::exp(x[0]);
  std::array<std::vector<double>, 3> a;
  for (int d = 0; d < 3; ++d) {
    a[d].resize(n);
    for (int i = 0; i < n; ++i) {
      const double v = grid.node(d, i);
      a[d][i] = std::exp(x[1 + d] * v + x[4] * v * v);
    }
  }
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double pre = E * a[0][i] * a[1][j];
      for (int k = 0; k < n; ++k) out[idx++] = pre * a[2][k];
    }
  }
}

Multipliers maxwellian_guess(const ConservedMoments& conserved, const GasConstants& c) {
  const MacroState macro = conserved.to_macro();
  const double T = (2.0 / 3.0) * macro.e;  // variance per axis (velocity units)
  Multipliers x;
  x[4] = -1.0 / (2.0 * T);
  x[1] = macro.u[0] / T;
  x[2] = macro.u[1] / T;
  x[3] = macro.u[2] / T;
  x[0] = std::log(macro.rho / c.m) - 1.5 * std::log(2.0 * std::numbers::pi * T) -
         macro.u.squaredNorm() / (2.0 * T);
  return x;
}

Multipliers solve_multipliers(const ConservedMoments& conserved, const VelocityGrid& grid,
                              const GasConstants& c, const Multipliers* warm_start) {
  Eigen::Matrix<double, 5, 1> target;
  target << conserved.rho / c.m, conserved.momentum[0] / c.m, conserved.momentum[1] / c.m,
      conserved.momentum[2] / c.m, 2.0 * conserved.total_energy / c.m;
  const double scale = std::max(target[0], target[4]);
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw RealizabilityError("discrete_equilibrium: non-positive moment targets");

  Multipliers x = warm_start ? *warm_start : maxwellian_guess(conserved, c);
  Eigen::Matrix<double, 5, 1> m;
  Eigen::Matrix<double, 5, 5> J;
  equilibrium_moments(x, grid, m, &J);
  double res = (m - target).norm();
  if (!std::isfinite(res)) {  // warm start can be stale after advection; restart cold
    x = maxwellian_guess(conserved, c);
    equilibrium_moments(x, grid, m, &J);
    res = (m - target).norm();
  }

  const double tol = 5e-13 * scale;
  for (int iter = 0; iter < 80; ++iter) {
    if (res <= tol) return x;
    Eigen::Matrix<double, 5, 1> dx = J.ldlt().solve(target - m);
    // keep the quadratic coefficient strictly negative
    if (x[4] + dx[4] > -1e-14) dx *= 0.5 * (-1e-14 - x[4]) / dx[4];
    double step = 1.0;
    for (int back = 0; back < 40; ++back) {
      const Multipliers x_try = x + step * dx;
      Eigen::Matrix<double, 5, 1> m_try;
      Eigen::Matrix<double, 5, 5> J_try;
      equilibrium_moments(x_try, grid, m_try, &J_try);
      const double res_try = (m_try - target).norm();
      if (std::isfinite(res_try) && res_try < res) {
        x = x_try;
        m = m_try;
        J = J_try;
        res = res_try;
        break;
      }
      step *= 0.5;
      if (back == 39) {
        // Stalled at the quadrature roundoff floor; accept if close enough.
        if (res <= 1e-10 * scale) return x;
        throw RealizabilityError("discrete_equilibrium: Newton line search stalled (residual " +
                                 std::to_string(res / scale) + ")");
      }
    }
  }
  if (res <= 1e-10 * scale) return x;  // accept near-converged
  throw RealizabilityError(
      "discrete_equilibrium: moments not realizable on this velocity grid (residual " +
      std::to_string(res / scale) + ")");
}

}  // namespace

DistributionGrid discrete_equilibrium(const ConservedMoments& conserved, const VelocityGrid& grid,
                                      const GasConstants& c, const Multipliers* warm_start,
                                      Multipliers* multipliers_out) {
  const Multipliers x = solve_multipliers(conserved, grid, c, warm_start);
  if (multipliers_out) *multipliers_out = x;
  DistributionGrid f(grid);
  fill_equilibrium(x, grid, f.values().data());
  return f;
}

void SimConfig::validate() const {
  if (n_cells < 4) throw ConfigError("n_cells must be at least 4");
  if (!(domain_length > 0)) throw ConfigError("domain_length must be positive");
  if (n_velocity < 2) throw ConfigError("n_velocity must be at least 2");
  if (v_half_width < 0) throw ConfigError("v_half_width must be non-negative");
  if (tau_model == TauModelKind::Constant && tau < 0)
    throw ConfigError("tau must be non-negative");
  if (tau_model == TauModelKind::HardSphere && !(C_B > 0))
    throw ConfigError("C_B must be positive");
  if (!(cfl > 0) || cfl > 1.0) throw ConfigError("cfl must lie in (0, 1]");
  if (t_end < 0) throw ConfigError("t_end must be non-negative");
  if (output_every < 1) throw ConfigError("output_every must be at least 1");
  if (!(rho0 > 0) || !(e0 > 0)) throw ConfigError("rho0 and e0 must be positive");
  if (init == InitKind::Bimodal && std::abs(amplitude) >= 1.0)
    throw ConfigError("bimodal density amplitude must satisfy |amplitude| < 1");
  if (mode < 1) throw ConfigError("mode must be a positive integer");
}

namespace {

[[noreturn]] void config_fail(int line, const std::string& msg) {
  throw ConfigError("line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& s, int line, const std::string& key) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    config_fail(line, "value for '" + key + "' is not a number: '" + s + "'");
  }
  if (pos != s.size()) config_fail(line, "trailing characters after number for '" + key + "'");
  return v;
}

int parse_int(const std::string& s, int line, const std::string& key) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    config_fail(line, "value for '" + key + "' is not an integer: '" + s + "'");
  }
  if (pos != s.size()) config_fail(line, "trailing characters after integer for '" + key + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

SimConfig parse_sim_config(std::istream& in) {
  SimConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) config_fail(lineno, "expected 'key = value'");
    const std::string key = trim(body.substr(0, eq));
    const std::string val = trim(body.substr(eq + 1));
    if (key.empty()) config_fail(lineno, "empty key");
    if (val.empty()) config_fail(lineno, "empty value for '" + key + "'");

    if (key == "n_cells") cfg.n_cells = parse_int(val, lineno, key);
    else if (key == "domain_length") cfg.domain_length = parse_double(val, lineno, key);
    else if (key == "n_velocity") cfg.n_velocity = parse_int(val, lineno, key);
    else if (key == "v_half_width") cfg.v_half_width = parse_double(val, lineno, key);
    else if (key == "tau_model") {
      if (val == "constant") cfg.tau_model = TauModelKind::Constant;
      else if (val == "hard_sphere") cfg.tau_model = TauModelKind::HardSphere;
      else config_fail(lineno, "tau_model must be 'constant' or 'hard_sphere'");
    } else if (key == "tau") cfg.tau = parse_double(val, lineno, key);
    else if (key == "C_B") cfg.C_B = parse_double(val, lineno, key);
    else if (key == "cfl") cfg.cfl = parse_double(val, lineno, key);
    else if (key == "t_end") cfg.t_end = parse_double(val, lineno, key);
    else if (key == "output_every") cfg.output_every = parse_int(val, lineno, key);
    else if (key == "init") {
      if (val == "uniform") cfg.init = InitKind::Uniform;
      else if (val == "bimodal") cfg.init = InitKind::Bimodal;
      else if (val == "shear_wave") cfg.init = InitKind::ShearWave;
      else config_fail(lineno, "init must be 'uniform', 'bimodal', or 'shear_wave'");
    } else if (key == "rho0") cfg.rho0 = parse_double(val, lineno, key);
    else if (key == "e0") cfg.e0 = parse_double(val, lineno, key);
    else if (key == "amplitude") cfg.amplitude = parse_double(val, lineno, key);
    else if (key == "u_offset") cfg.u_offset = parse_double(val, lineno, key);
    else if (key == "mode") cfg.mode = parse_int(val, lineno, key);
    else if (key == "boundary") {
      if (val != "periodic") config_fail(lineno, "only 'periodic' boundaries are supported");
    } else config_fail(lineno, "unknown key '" + key + "'");
  }
  try {
    cfg.validate();
  } catch (const ConfigError& err) {
    throw ConfigError(std::string("configuration invalid: ") + err.what());
  }
  return cfg;
}

SimConfig parse_sim_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  return parse_sim_config(in);
}

namespace {

VelocityGrid make_sim_grid(const SimConfig& cfg) {
  double hw = cfg.v_half_width;
  if (hw == 0.0) {
    const double sigma = std::sqrt((2.0 / 3.0) * cfg.e0);
    hw = 8.0 * sigma + std::abs(cfg.u_offset);
  }
  return VelocityGrid::uniform(Vec3::Zero(), hw, cfg.n_velocity);
}

double maxwellian_value(double n0, const Vec3& u, double e, const Vec3& v) {
  const double T = (2.0 / 3.0) * e;
  return n0 * std::pow(2.0 * std::numbers::pi * T, -1.5) *
         std::exp(-(v - u).squaredNorm() / (2.0 * T));
}

}  // namespace

Simulator::Simulator(const SimConfig& config)
    : config_(config), grid_(make_sim_grid(config )) {
  config_.validate();
  const int nc = config_.n_cells;
  const std::size_t nv = grid_.size();
  state_.grid = &grid_;
  state_.n_cells = nc;
  state_.dx = config_.domain_length / nc;
  state_.time = 0.0;
  state_.f.assign(static_cast<std::size_t>(nc) * nv, 0.0);
  advect_buffer_.resize(state_.f.size());
  warm_.resize(nc);
  warm_valid_.assign(nc, false);

  node_weight_.resize(nv);
  node_vx_.resize(nv);
  node_vsq_.resize(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    const Vec3 v = grid_.velocity(i);
    node_weight_[i] = grid_.cell_weight(i);
    node_vx_[i] = v[0];
    node_vsq_[i] = v.squaredNorm();
  }

  shear_wavenumber_ = 2.0 * std::numbers::pi * config_.mode / config_.domain_length;

  const double n0 = config_.rho0 / config_.gas.m;
  for (int cell = 0; cell < nc; ++cell) {
    const double x = (cell + 0.5) * state_.dx;
    for (std::size_t i = 0; i < nv; ++i) {
      const Vec3 v = grid_.velocity(i);
      double val = 0.0;
      switch (config_.init) {
        case InitKind::Uniform:
          val = maxwellian_value(n0, Vec3::Zero(), config_.e0, v);
          break;
        case InitKind::Bimodal: {
          const double nx = n0 * (1.0 + config_.amplitude * std::sin(shear_wavenumber_ * x));
          val = 0.5 * maxwellian_value(nx, Vec3(config_.u_offset, 0, 0), config_.e0, v) +
                0.5 * maxwellian_value(nx, Vec3(-config_.u_offset, 0, 0), config_.e0, v);
          break;
        }
        case InitKind::ShearWave: {
          const Vec3 u(0.0, config_.amplitude * std::sin(shear_wavenumber_ * x), 0.0);
          val = maxwellian_value(n0, u, config_.e0, v);
          break;
        }
      }
      state_.at(cell, i) = val;
    }
  }

  double dt = config_.cfl * state_.dx / grid_.max_speed();
  if (config_.tau_model == TauModelKind::Constant && config_.tau > 0.0) {
    dt = std::min(dt, config_.cfl * config_.tau);
  } else if (config_.tau_model == TauModelKind::HardSphere) {
    double tau_min = std::numeric_limits<double>::infinity();
    for (int cell = 0; cell < nc; ++cell) tau_min = std::min(tau_min, cell_tau(cell_moments(cell)));
    dt = std::min(dt, config_.cfl * tau_min);
  }
  dt_ = dt;
}

ConservedMoments Simulator::cell_moments(int cell) const {
  const std::size_t nv = grid_.size();
  const double* f = state_.f.data() + static_cast<std::size_t>(cell) * nv;
  double n = 0, px = 0, py = 0, pz = 0, en = 0;
  for (std::size_t i = 0; i < nv; ++i) {
    const double wf = node_weight_[i] * f[i];
    n += wf;
    const Vec3 v = grid_.velocity(i);
    px += wf * v[0];
    py += wf * v[1];
    pz += wf * v[2];
    en += wf * node_vsq_[i];
  }
  const double m = config_.gas.m;
  return ConservedMoments{m * n, m * Vec3(px, py, pz), 0.5 * m * en};
}

void Simulator::apply_advection() {
  const int nc = state_.n_cells;
  const std::size_t nv = grid_.size();
  const double dtdx = dt_ / state_.dx;
  for (std::size_t i = 0; i < nv; ++i) {
    const double c = node_vx_[i] * dtdx;
    if (c >= 0.0) {
      for (int cell = 0; cell < nc; ++cell) {
        const int left = (cell == 0) ? nc - 1 : cell - 1;
        advect_buffer_[cell * nv + i] =
            state_.at(cell, i) - c * (state_.at(cell, i) - state_.at(left, i));
      }
    } else {
      for (int cell = 0; cell < nc; ++cell) {
        const int right = (cell == nc - 1) ? 0 : cell + 1;
        advect_buffer_[cell * nv + i] =
            state_.at(cell, i) - c * (state_.at(right, i) - state_.at(cell, i));
      }
    }
  }
  state_.f.swap(advect_buffer_);
}

double Simulator::cell_tau(const ConservedMoments& cm) const {
  if (config_.tau_model == TauModelKind::Constant) return config_.tau;
  const MacroState macro = cm.to_macro();
  const double theta = (2.0 / 3.0) * macro.e / config_.gas.R_s;
  return 1.0 / (config_.C_B * macro.rho * std::sqrt(config_.gas.R_s * theta));
}

void Simulator::apply_relaxation() {
  const std::size_t nv = grid_.size();
  std::vector<double> feq(nv);
  for (int cell = 0; cell < state_.n_cells; ++cell) {
    const ConservedMoments cm = cell_moments(cell);
    const Multipliers* warm = warm_valid_[cell] ? &warm_[cell] : nullptr;
    const Multipliers x = solve_multipliers(cm, grid_, config_.gas, warm);
    warm_[cell] = x;
    warm_valid_[cell] = true;
    fill_equilibrium(x, grid_, feq.data());

    const double tau = cell_tau(cm);
    double* f = state_.f.data() + static_cast<std::size_t>(cell) * nv;
    if (tau <= 0.0) {
      std::copy(feq.begin(), feq.end(), f);
    } else {
      const double r = dt_ / tau;
      const double denom = 1.0 + r;
      for (std::size_t i = 0; i < nv; ++i) f[i] = (f[i] + r * feq[i]) / denom;
    }
  }
}

void Simulator::step() {
  apply_advection();
  apply_relaxation();
  state_.time += dt_;
}

ConservedMoments Simulator::totals() const {
  double rho = 0, en = 0;
  Vec3 p = Vec3::Zero();
  for (int cell = 0; cell < state_.n_cells; ++cell) {
    const ConservedMoments cm = cell_moments(cell);
    rho += cm.rho;
    p += cm.momentum;
    en += cm.total_energy;
  }
  return ConservedMoments{rho * state_.dx, p * state_.dx, en * state_.dx};
}

void Simulator::sample(Diagnostics& diag) {
  const std::size_t nv = grid_.size();
  const double kB = config_.gas.k_B;

  double mass = 0, px = 0, py = 0, pz = 0, en = 0, H = 0, amp = 0;
  double min_xi = std::numeric_limits<double>::infinity();
  std::vector<double> feq(nv);

  for (int cell = 0; cell < state_.n_cells; ++cell) {
    const double x = (cell + 0.5) * state_.dx;
    const ConservedMoments cm = cell_moments(cell);
    mass += cm.rho;
    px += cm.momentum[0];
    py += cm.momentum[1];
    pz += cm.momentum[2];
    en += cm.total_energy;

    const double* f = state_.f.data() + static_cast<std::size_t>(cell) * nv;
    // rho eta = -k_B int f log f
    double s = 0;
    for (std::size_t i = 0; i < nv; ++i) {
      const double fi = std::max(f[i], 1e-300);
      s -= node_weight_[i] * f[i] * std::log(fi);
    }
    H += kB * s;

    // per-cell BGK entropy production (1/tau) int k_B (f - f_eq) log(f/f_eq),
    // pointwise non-negative
    const Multipliers* warm = warm_valid_[cell] ? &warm_[cell] : nullptr;
    const Multipliers xm = solve_multipliers(cm, grid_, config_.gas, warm);
    warm_[cell] = xm;
    warm_valid_[cell] = true;
    const double tau = cell_tau(cm);
    if (tau > 0.0) {
      fill_equilibrium(xm, grid_, feq.data());
      double xi = 0;
      for (std::size_t i = 0; i < nv; ++i) {
        const double fi = std::max(f[i], 1e-300);
        xi += node_weight_[i] * (f[i] - feq[i]) * std::log(fi / feq[i]);
      }
      min_xi = std::min(min_xi, kB * xi / tau);
    } else {
      min_xi = std::min(min_xi, 0.0);
    }

    const double uy = cm.momentum[1] / cm.rho;
    amp += cm.rho * uy * std::sin(shear_wavenumber_ * x);
  }

  const double dx = state_.dx;
  diag.time.push_back(state_.time);
  diag.mass.push_back(mass * dx);
  diag.px.push_back(px * dx);
  diag.py.push_back(py * dx);
  diag.pz.push_back(pz * dx);
  diag.energy.push_back(en * dx);
  diag.H.push_back(H * dx);
  diag.min_xi.push_back(min_xi);
  diag.amp_shear.push_back(2.0 * amp * dx / config_.domain_length);
}

Diagnostics Simulator::run() {
  Diagnostics diag;
  diag.dt = dt_;
  sample(diag);
  long step_count = 0;
  while (state_.time < config_.t_end - 1e-12 * config_.t_end) {
    // shrink the final step to land on t_end
    const double dt_save = dt_;
    if (state_.time + dt_ > config_.t_end) dt_ = config_.t_end - state_.time;
    step();
    dt_ = dt_save;
    ++step_count;
    if (step_count % config_.output_every == 0 ||
        state_.time >= config_.t_end - 1e-12 * config_.t_end) {
      sample(diag);
    }
  }
  diag.steps = step_count;
  return diag;
}

double measure_shear_decay(const Diagnostics& diag, double k, double rho) {
  if (diag.time.size() < 3)
    throw InsufficientSignalError("shear decay fit needs at least 3 samples");
  const double amp0 = std::abs(diag.amp_shear.front());
  const double floor = std::max(1e-12, 1e-8 * amp0);
  std::vector<double> t, y;
  for (std::size_t i = 0; i < diag.time.size(); ++i) {
    if (std::abs(diag.amp_shear[i]) <= floor) break;  // stop at first noise-floor hit
    t.push_back(diag.time[i]);
    y.push_back(std::log(std::abs(diag.amp_shear[i])));
  }
  if (t.size() < 3)
    throw InsufficientSignalError("shear amplitude below noise floor; cannot fit decay rate");
  const std::size_t n = t.size();
  double st = 0, sy = 0, stt = 0, sty = 0;
  for (std::size_t i = 0; i < n; ++i) {
    st += t[i];
    sy += y[i];
    stt += t[i] * t[i];
    sty += t[i] * y[i];
  }
  const double denom = n * stt - st * st;
  if (std::abs(denom) < 1e-300)
    throw InsufficientSignalError("degenerate time samples in decay fit");
  const double slope = (n * sty - st * sy) / denom;
  const double rate = -slope;
  return rate * rho / (k * k);
}

void write_series_csv(std::ostream& out, const Diagnostics& diag) {
  out << "t,mass,px,py,pz,energy,H,min_xi,amp_shear\n";
  out.precision(17);
  for (std::size_t i = 0; i < diag.time.size(); ++i) {
    out << diag.time[i] << ',' << diag.mass[i] << ',' << diag.px[i] << ',' << diag.py[i] << ','
        << diag.pz[i] << ',' << diag.energy[i] << ',' << diag.H[i] << ',' << diag.min_xi[i] << ','
        << diag.amp_shear[i] << '\n';
  }
}

}  // namespace kcl::sim
