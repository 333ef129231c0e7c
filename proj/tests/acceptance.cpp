// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "kcl/bgk_sim.hpp"
#include "kcl/chapman_enskog.hpp"
#include "kcl/closure.hpp"
#include "kcl/curtiss.hpp"
#include "kcl/kernel_scaling.hpp"
#include "kcl/moments.hpp"
#include "kcl/thermo.hpp"

using namespace kcl;

namespace {

int failures = 0;

void line(int id, bool pass, const char* title, const std::string& detail) {
  std::printf("criterion %02d %s  %s (%s)\n", id, pass ? "PASS" : "FAIL", title, detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double now_seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

MacroState random_macro(std::mt19937& rng) {
  std::uniform_real_distribution<double> rho(0.5, 2.0), vel(-0.5, 0.5), energy(1.0, 2.0);
  return MacroState(rho(rng), Vec3(vel(rng), vel(rng), vel(rng)), energy(rng));
}

CEState random_ce_state(std::mt19937& rng) {
  std::uniform_real_distribution<double> g(-0.3, 0.3), tt(0.2, 1.0);
  CEState state{random_macro(rng), GradientState{}, tt(rng), 1e-2};
  Mat3 raw;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) raw(i, j) = g(rng);
  state.grads.D_full = 0.5 * (raw + raw.transpose());
  state.grads.grad_e = Vec3(g(rng), g(rng), g(rng));
  return state;
}

// 1. Maxwellian moment fidelity on the default verification grid.
void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  const GasConstants c;
  std::mt19937 rng(101);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const MacroState macro = random_macro(rng);
    const auto grid = VelocityGrid::for_state(macro.u, macro.e);
    const auto cm = conserved_moments(ce::maxwellian_grid(macro, c, grid), c);
    const double total_e = macro.rho * (macro.e + 0.5 * macro.u.squaredNorm());
    worst = std::max(worst, std::abs(cm.rho - macro.rho) / macro.rho);
    worst = std::max(worst, (cm.momentum - macro.rho * macro.u).norm() / macro.rho);
    worst = std::max(worst, std::abs(cm.total_energy - total_e) / total_e);
  }
  const double elapsed = now_seconds(start);
  line(1, worst < 1e-8 && elapsed < 10.0, "Maxwellian moment fidelity, 50 random states",
       fmt("max rel err %.2e, %.1f s", worst, elapsed));
}

// 2. Stokes identity -tr(T)/3 = (2/3) rho e on arbitrary distributions.
void criterion_2() {
  const GasConstants c;
  std::mt19937 rng(202);
  std::uniform_real_distribution<double> amp(0.1, 1.0), center(-1.5, 1.5), width(0.4, 1.2);
  const auto grid = VelocityGrid::uniform(Vec3::Zero(), 8.0, 24);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    DistributionGrid f(grid, [&, a1 = amp(rng), a2 = amp(rng), c1 = Vec3(center(rng), center(rng), center(rng)),
                              c2 = Vec3(center(rng), center(rng), center(rng)), w1 = width(rng),
                              w2 = width(rng)](const Vec3& v) {
      return a1 * std::exp(-(v - c1).squaredNorm() / (2 * w1 * w1)) +
             a2 * std::exp(-(v - c2).squaredNorm() / (2 * w2 * w2));
    });
    const auto macro = conserved_moments(f, c).to_macro();
    const double p_mech = -stress_tensor(f, macro.u, c).trace() / 3.0;
    const double p_thermo = (2.0 / 3.0) * macro.rho * macro.e;
    worst = std::max(worst, std::abs(p_mech - p_thermo) / p_thermo);
  }
  line(2, worst < 1e-8, "Stokes identity on arbitrary random distributions",
       fmt("max rel err %.2e", worst));
}

// 3. Entropy-production quadrature vs closed form, 100 random states.
void criterion_3() {
  const GasConstants c;
  std::mt19937 rng(303);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const CEState state = random_ce_state(rng);
    const auto grid = VelocityGrid::for_state(state.macro.u, state.macro.e);
    const double quad = ce::entropy_production_quadrature(state, grid, c);
    const double closed = ce::entropy_production_closed_form(state, c);
    worst = std::max(worst, std::abs(quad - closed) / closed);
  }
  line(3, worst < 1e-6, "entropy-production oracle equivalence, 100 random states",
       fmt("max rel err %.2e", worst));
}

// 4. NSF flux recovery and the fixed Prandtl-type ratio.
void criterion_4() {
  const GasConstants c;
  std::mt19937 rng(404);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const CEState state = random_ce_state(rng);
    const auto grid = VelocityGrid::for_state(state.macro.u, state.macro.e);
    const double p = (2.0 / 3.0) * state.macro.rho * state.macro.e;
    const auto coeffs = ce::transport_coefficients(state.tau(), p, c);
    const FluxSet fl = ce::first_order_fluxes(state, grid, c);
    const Mat3 T_expected = -p * Mat3::Identity() + 2.0 * coeffs.nu * state.grads.deviator();
    const Vec3 Q_expected = -coeffs.kappa * state.grads.grad_theta(c);
    worst = std::max(worst, (fl.T - T_expected).norm() / p);
    worst = std::max(worst, (fl.Q - Q_expected).norm() /
                                std::max(Q_expected.norm(), p * std::sqrt(state.macro.e)));
  }
  const auto coeffs = ce::transport_coefficients(0.37, 1.23, GasConstants(1.7, 2.9));
  const double ratio = coeffs.kappa / (GasConstants(1.7, 2.9).R_s * coeffs.nu);
  const bool ratio_exact = ratio == 2.5;
  line(4, worst < 1e-6 && ratio_exact, "NSF flux recovery, kappa/(R_s nu) = 5/2",
       fmt("max rel err %.2e, ratio %.17g", worst, ratio));
}

// 5. Closure equivalence plus brute-force KKT optimality.
void criterion_5() {
  const GasConstants c;
  std::mt19937 rng(505);
  std::uniform_real_distribution<double> unif(-0.5, 0.5), pos(0.1, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const double theta = pos(rng) + 0.5, p = pos(rng) + 0.5, tau = pos(rng);
    const auto coeffs = ce::transport_coefficients(tau, p, c);
    AffinitySet aff;
    Mat3 raw;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) raw(i, j) = unif(rng);
    aff.D_full = 0.5 * (raw + raw.transpose());
    aff.g_theta = Vec3(unif(rng), unif(rng), unif(rng));

    const FluxSet a = closure::rs_closure_quadratic(aff, coeffs, theta, p);
    const FluxSet b = closure::linear_irreversible_closure(aff, coeffs, theta, p);
    closure::ProducerSpec spec;
    spec.producer = std::make_shared<closure::QuadraticProducer>(coeffs, theta);
    spec.iota = [&](const Vec8& x) {
      return tau * (2.0 * coeffs.nu * x.head<5>().squaredNorm() +
                    coeffs.kappa * theta * x.tail<3>().squaredNorm());
    };
    const Vec8 A = closure::flatten_affinity(aff);
    const Vec8 Ja = closure::flatten(a.T + p * Mat3::Identity(), a.Q);
    const Vec8 Jb = closure::flatten(b.T + p * Mat3::Identity(), b.Q);
    const Vec8 Jc = closure::min_relaxation_closure(spec, A).J;
    const double scale = std::max(Ja.norm(), 1e-300);
    worst = std::max(worst, (Ja - Jb).norm() / scale);
    worst = std::max(worst, (Ja - Jc).norm() / scale);
  }

  // Brute force on the reduced 5-D (stress-only) instance: for a feasible
  // direction d the constraint fixes the scale, so the whole feasible set is
  // sampled by direction alone.
  const double nu = 0.31;
  Eigen::Matrix<double, 5, 1> A5;
  A5 << 0.4, -0.2, 0.1, 0.3, -0.5;
  const double optimum = 2.0 * nu * A5.squaredNorm();  // theta xi at the KKT point
  std::normal_distribution<double> gauss(0.0, 1.0);
  double brute_best = 0.0;
  for (int i = 0; i < 1000000; ++i) {
    Eigen::Matrix<double, 5, 1> d;
    for (int k = 0; k < 5; ++k) d[k] = gauss(rng);
    const double q = d.squaredNorm() / (2.0 * nu);
    const double s = d.dot(A5) / q;                    // feasibility: s^2 q = s d.A
    brute_best = std::max(brute_best, s * s * q);
  }
  const bool kkt_beats = brute_best <= optimum * (1.0 + 1e-6);
  line(5, worst < 1e-8 && kkt_beats,
       "closure equivalence (100 instances) + KKT vs 1e6 brute-force samples",
       fmt("max rel err %.2e, brute/KKT %.9f", worst, brute_best / optimum));
}

// 6. H-theorem and conservation at desk scale: 64 x 16^3, 2000 steps.
void criterion_6() {
  const auto start = std::chrono::steady_clock::now();
  sim::SimConfig cfg;
  cfg.n_cells = 64;
  cfg.n_velocity = 16;
  cfg.tau = 0.05;
  cfg.init = sim::InitKind::Bimodal;
  cfg.amplitude = 0.2;
  cfg.u_offset = 1.0;
  cfg.output_every = 1;
  cfg.t_end = 1.0;  // placeholder; reset below to exactly 2000 steps
  {
    sim::Simulator probe(cfg);
    cfg.t_end = 1999.5 * probe.dt();
  }
  sim::Simulator s(cfg);
  const auto diag = s.run();

  double worst_dh = 0.0;
  for (std::size_t i = 1; i < diag.H.size(); ++i) {
    worst_dh = std::min(worst_dh, (diag.H[i] - diag.H[i - 1]) / std::abs(diag.H[i - 1]));
  }
  const double p_scale = diag.mass.front() * cfg.u_offset;
  double drift = std::abs(diag.mass.back() - diag.mass.front()) / diag.mass.front();
  drift = std::max(drift, std::abs(diag.energy.back() - diag.energy.front()) / diag.energy.front());
  drift = std::max(drift, std::abs(diag.px.back() - diag.px.front()) / p_scale);
  drift = std::max(drift, std::abs(diag.py.back() - diag.py.front()) / p_scale);
  drift = std::max(drift, std::abs(diag.pz.back() - diag.pz.front()) / p_scale);
  const double elapsed = now_seconds(start);
  const bool pass = diag.steps >= 2000 && worst_dh >= -1e-10 && drift < 1e-12 && elapsed < 300.0;
  line(6, pass, "H-theorem over 2000 bimodal steps, 64 x 16^3",
       fmt("min dH/|H| %.2e, max drift %.2e, %.0f s", worst_dh, drift, elapsed));
}

// 7. Shear-wave viscosity matches tau p after the zero-tau control.
void criterion_7() {
  const double p = 1.0;  // rho0 = 1, e0 = 1.5
  auto run_shear = [](double tau) {
    sim::SimConfig cfg;
    cfg.n_cells = 64;
    cfg.n_velocity = 16;
    cfg.tau = tau;
    cfg.t_end = 2.0;
    cfg.init = sim::InitKind::ShearWave;
    cfg.amplitude = 0.01;
    cfg.output_every = 10;
    sim::Simulator s(cfg);
    const auto diag = s.run();
    return sim::measure_shear_decay(diag, 2.0 * M_PI / cfg.domain_length, cfg.rho0);
  };
  const double nu_control = run_shear(0.0);
  double worst = 0.0;
  for (double tau : {0.005, 0.01, 0.02}) {
    const double nu_corrected = run_shear(tau) - nu_control;
    worst = std::max(worst, std::abs(nu_corrected - tau * p) / (tau * p));
  }
  line(7, worst < 0.10, "shear-wave viscosity within 10% of tau p, tau in {0.005, 0.01, 0.02}",
       fmt("max rel err %.3f, control nu %.2e", worst, nu_control));
}

// 8. Power-law kernel temperature scaling.
void criterion_8() {
  const GasConstants c;
  double worst = 0.0;
  bool flags_ok = true;
  for (double lambda : {0.0, 1.0, 2.0, 3.0}) {
    const KernelSpec spec{lambda, 1.0};
    worst = std::max(worst, std::abs(kernel::fit_temperature_exponent(spec, c) - 0.5 * lambda));
    if (lambda > 0.0) {
      const auto ts = kernel::transport_scaling_exponent(lambda);
      flags_ok = flags_ok && (ts.exponent == 1.0 - 2.0 / lambda) &&
                 (ts.within_paper_range == (lambda < 2.0));
    }
  }
  line(8, worst < 1e-3 && flags_ok, "kernel temperature exponent lambda/2, transport flag",
       fmt("max |fit - lambda/2| %.2e", worst));
}

// 9. Curtiss isotropy and the Ericksen variational identity.
void criterion_9() {
  const GasConstants c;
  CurtissMacro macro;
  macro.rho = 1.3;
  macro.theta = 0.9;
  macro.inertia = 0.8 * (Mat3::Identity() - Vec3::UnitZ() * Vec3::UnitZ().transpose());
  const double p = macro.rho * c.R_s * macro.theta;
  const auto fluxes = curtiss::curtiss_zeroth_fluxes(macro, c);
  double off_diag = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) off_diag = std::max(off_diag, std::abs(fluxes.T(i, j)));
  const double odd_scale = macro.rho * std::pow(c.R_s * macro.theta, 1.5);
  const double odd = std::max(fluxes.Q.norm(), fluxes.M.norm()) / odd_scale;

  NematicField field;
  field.n = Vec3::UnitZ();
  field.grad_n << 0.4, -0.1, 0.0, 0.2, 0.3, 0.0, 0.0, 0.0, 0.0;
  field.lambda_inertia = 0.8;
  const auto er = curtiss::ericksen_fluxes(field, macro.theta, macro.rho, c);
  std::mt19937 rng(909);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  double res = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    Mat3 gv, gw;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        gv(i, j) = unif(rng);
        gw(i, j) = unif(rng);
      }
    res = std::max(res, std::abs(curtiss::variational_residual(er.T_star, er.M_star, field,
                                                               macro.theta, macro.rho, gv, gw, c)));
  }
  const double ratio =
      curtiss::leslie_stress_comparison(field, macro.theta, macro.rho, c).coefficient_ratio;
  const bool pass = off_diag < 1e-10 * p && odd < 1e-8 && res < 1e-12 &&
                    std::abs(ratio - 2.0) < 1e-12;
  line(9, pass, "Curtiss isotropy, Ericksen identity, coefficient ratio 2",
       fmt("off-diag %.1e, residual %.1e, ratio %.15g", off_diag, res, ratio));
}

// 10. O(Kn^2) defects for the entropy density and for Phi - Q/theta.
void criterion_10() {
  const GasConstants c;
  CEState state{MacroState(1.2, Vec3(0.1, -0.05, 0.2), 1.5), GradientState{}, 0.8, 0.0};
  state.grads.D_full << 0.30, 0.10, -0.05, 0.10, -0.20, 0.15, -0.05, 0.15, 0.08;
  state.grads.grad_e = Vec3(0.25, -0.10, 0.05);
  const auto grid = VelocityGrid::for_state(state.macro.u, state.macro.e);
  const double theta = thermo::temperature(state.macro.e, c);

  std::vector<double> entropy_defect, flux_defect;
  for (double kn : {0.04, 0.02, 0.01, 0.005}) {
    state.Kn = kn;
    entropy_defect.push_back(
        std::abs(ce::expansion_independence_report(state, grid, c).entropy_delta));
    auto f = ce::truncated_grid(state, c, grid);
    // the formal truncation dips negative far in the tail; floor it there
    for (double& v : f.values()) v = std::max(v, kEntropyFloor);
    const Vec3 phi = entropy_flux(f, state.macro.u, c);
    const Vec3 q = heat_flux(f, state.macro.u, c);
    flux_defect.push_back((phi - q / theta).norm());
  }
  double min_ratio = 1e300;
  for (std::size_t i = 1; i < entropy_defect.size(); ++i) {
    min_ratio = std::min(min_ratio, entropy_defect[i - 1] / entropy_defect[i]);
    min_ratio = std::min(min_ratio, flux_defect[i - 1] / flux_defect[i]);
  }
  line(10, min_ratio >= 3.5, "O(Kn^2) defects across three halvings of Kn",
       fmt("min halving ratio %.2f (entropy defect %.2e at Kn = 0.04)", min_ratio,
           entropy_defect.front()));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures == 0) {
    std::printf("acceptance: ALL 10 CRITERIA PASS\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
