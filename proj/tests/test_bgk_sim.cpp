#include <doctest.h>

#include <cmath>
#include <sstream>

#include "kcl/bgk_sim.hpp"
#include "kcl/chapman_enskog.hpp"

using namespace kcl;

TEST_CASE("config parser: round-trip of a full file") {
  std::istringstream in(
      "# comment line\n"
      "n_cells = 32\n"
      "n_velocity = 12\n"
      "tau_model = hard_sphere\n"
      "C_B = 2.5\n"
      "cfl = 0.4\n"
      "t_end = 0.25\n"
      "init = shear_wave\n"
      "amplitude = 0.03\n");
  const auto cfg = sim::parse_sim_config(in);
  CHECK(cfg.n_cells == 32);
  CHECK(cfg.n_velocity == 12);
  CHECK(cfg.tau_model == sim::TauModelKind::HardSphere);
  CHECK(cfg.C_B == doctest::Approx(2.5));
  CHECK(cfg.init == sim::InitKind::ShearWave);
  CHECK(cfg.amplitude == doctest::Approx(0.03));
}

TEST_CASE("config parser: errors carry the offending line number") {
  std::istringstream bad_value("n_cells = 16\ntau = fast\n");
  CHECK_THROWS_WITH_AS(sim::parse_sim_config(bad_value),
                       doctest::Contains("line 2"), ConfigError);
  std::istringstream unknown("viscosity = 1\n");
  CHECK_THROWS_WITH_AS(sim::parse_sim_config(unknown),
                       doctest::Contains("line 1"), ConfigError);
  CHECK_THROWS_AS(sim::parse_sim_config_file("/nonexistent/config.txt"), ConfigError);
}

TEST_CASE("config validation rejects out-of-range values") {
  sim::SimConfig cfg;
  cfg.n_cells = 3;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = sim::SimConfig{};
  cfg.cfl = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = sim::SimConfig{};
  cfg.amplitude = 1.0;  // bimodal density must stay positive
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = sim::SimConfig{};
  cfg.t_end = 0.0;  // a single-sample run is allowed
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("discrete equilibrium matches its target moments on a coarse grid") {
  const GasConstants c;
  const auto grid = VelocityGrid::uniform(Vec3::Zero(), 8.0, 16);
  ConservedMoments target;
  target.rho = 1.3;
  target.momentum = Vec3(0.2, -0.1, 0.05);
  target.total_energy = 2.0;
  sim::Multipliers mult;
  const auto f = sim::discrete_equilibrium(target, grid, c, nullptr, &mult);
  const auto cm = conserved_moments(f, c);
  CHECK(cm.rho == doctest::Approx(target.rho).epsilon(1e-11));
  CHECK((cm.momentum - target.momentum).norm() < 1e-11);
  CHECK(cm.total_energy == doctest::Approx(target.total_energy).epsilon(1e-11));

  // warm start from the converged multipliers succeeds immediately
  const auto f2 = sim::discrete_equilibrium(target, grid, c, &mult);
  CHECK(conserved_moments(f2, c).rho == doctest::Approx(target.rho).epsilon(1e-11));
}

TEST_CASE("discrete equilibrium agrees with the continuous Maxwellian on a fine grid") {
  const GasConstants c;
  const MacroState macro(1.0, Vec3(0.3, 0.0, 0.0), 1.5);
  const auto grid = VelocityGrid::uniform(macro.u, 9.0, 48);
  ConservedMoments target;
  target.rho = macro.rho;
  target.momentum = macro.rho * macro.u;
  target.total_energy = macro.rho * (macro.e + 0.5 * macro.u.squaredNorm());
  const auto f = sim::discrete_equilibrium(target, grid, c);
  double max_rel = 0.0;
  const int n = grid.n_per_axis();
  for (int i = n / 4; i < 3 * n / 4; ++i) {  // compare away from the truncated tails
    const double exact = ce::eval_maxwellian(macro, c, grid.velocity(i, n / 2, n / 2));
    const double got = f(i, n / 2, n / 2);
    max_rel = std::max(max_rel, std::abs(got - exact) / exact);
  }
  CHECK(max_rel < 1e-3);
}

TEST_CASE("t_end = 0 yields a single diagnostics sample") {
  sim::SimConfig cfg;
  cfg.n_cells = 8;
  cfg.n_velocity = 8;
  cfg.t_end = 0.0;
  sim::Simulator s(cfg);
  const auto diag = s.run();
  CHECK(diag.steps == 0);
  CHECK(diag.time.size() == 1);
  std::ostringstream csv;
  sim::write_series_csv(csv, diag);
  // header plus exactly one data row
  const std::string text = csv.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  CHECK(text.rfind("t,mass,px,py,pz,energy,H,min_xi,amp_shear\n", 0) == 0);
}

TEST_CASE("short bimodal run conserves totals and increases entropy") {
  sim::SimConfig cfg;
  cfg.n_cells = 16;
  cfg.n_velocity = 10;
  cfg.tau = 0.05;
  cfg.t_end = 0.05;
  cfg.output_every = 1;
  sim::Simulator s(cfg);
  const auto diag = s.run();
  CHECK(diag.steps > 0);
  CHECK(std::abs(diag.mass.back() - diag.mass.front()) < 1e-11 * diag.mass.front());
  CHECK(std::abs(diag.energy.back() - diag.energy.front()) < 1e-11 * diag.energy.front());
  for (std::size_t i = 1; i < diag.H.size(); ++i) {
    CHECK(diag.H[i] >= diag.H[i - 1] - 1e-10 * std::abs(diag.H[i - 1]));
  }
  for (double xi : diag.min_xi) CHECK(xi >= -1e-12);
}

TEST_CASE("shear decay measurement needs a usable signal") {
  sim::Diagnostics diag;
  diag.time = {0.0, 0.1};
  diag.amp_shear = {1e-16, 1e-17};  // below the noise floor
  CHECK_THROWS_AS(sim::measure_shear_decay(diag, 2 * M_PI, 1.0), InsufficientSignalError);
}

TEST_CASE("hard-sphere tau model runs and keeps entropy monotone") {
  sim::SimConfig cfg;
  cfg.n_cells = 8;
  cfg.n_velocity = 8;
  cfg.tau_model = sim::TauModelKind::HardSphere;
  cfg.C_B = 10.0;
  cfg.t_end = 0.02;
  cfg.output_every = 1;
  sim::Simulator s(cfg);
  const auto diag = s.run();
  for (std::size_t i = 1; i < diag.H.size(); ++i) {
    CHECK(diag.H[i] >= diag.H[i - 1] - 1e-10 * std::abs(diag.H[i - 1]));
  }
}
