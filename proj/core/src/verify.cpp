#include "kcl/verify.hpp"

#include <chrono>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "kcl/chapman_enskog.hpp"
#include "kcl/closure.hpp"
#include "kcl/curtiss.hpp"
#include "kcl/kernel_scaling.hpp"
#include "kcl/moments.hpp"
#include "kcl/thermo.hpp"

namespace kcl::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Shared near-equilibrium reference state for the gradient-driven suites.
CEState reference_ce_state() {
  MacroState macro(1.2, Vec3(0.1, -0.05, 0.2), 1.5);
  GradientState grads;
  grads.D_full << 0.30, 0.10, -0.05,
                  0.10, -0.20, 0.15,
                 -0.05, 0.15, 0.08;
  grads.grad_e = Vec3(0.25, -0.10, 0.05);
  CEState state{macro, grads, 0.8, 1e-2};
  return state;
}

AffinitySet reference_affinities(const CEState& state, const GasConstants& c) {
  AffinitySet aff;
  aff.D_full = state.grads.D_full;
  const double theta = thermo::temperature(state.macro.e, c);
  aff.g_theta = -state.grads.grad_theta(c) / theta;
  return aff;
}

}  // namespace

report::Suite maxwellian_suite(double tolerance_scale) {
  const auto t0 = Clock::now();
  const GasConstants c;
  report::Suite suite;
  suite.name = "maxwellian";
  auto add = [&](const std::string& id, const std::string& desc, double value, double expected,
                 double tol) {
    suite.checks.push_back(report::make_check(id, desc, value, expected, tol * tolerance_scale));
  };

  {
    const MacroState macro(1.2, Vec3(0.3, -0.1, 0.2), 2.0);
    const VelocityGrid grid = VelocityGrid::for_state(macro.u, macro.e);
    const DistributionGrid f0 = ce::maxwellian_grid(macro, c, grid);
    const ConservedMoments cm = conserved_moments(f0, c);
    const MacroState back = cm.to_macro();
    add("moment-rho", "density recovered from Maxwellian quadrature",
        std::abs(back.rho - macro.rho) / macro.rho, 0.0, 1e-12);
    add("moment-u", "bulk velocity recovered from Maxwellian quadrature",
        (back.u - macro.u).norm(), 0.0, 1e-12);
    add("moment-e", "internal energy recovered from Maxwellian quadrature",
        std::abs(back.e - macro.e) / macro.e, 0.0, 1e-12);

    const double p = thermo::pressure(macro.rho, macro.e, c);
    const Mat3 T = stress_tensor(f0, macro.u, c);
    add("stress-isotropic", "equilibrium stress equals -pI",
        (T + p * Mat3::Identity()).norm() / p, 0.0, 1e-12);
    add("heat-flux-zero", "equilibrium heat flux vanishes",
        heat_flux(f0, macro.u, c).norm() / (macro.rho * macro.e * std::sqrt(macro.e)), 0.0,
        1e-12);
  }

  {
    const MacroState macro(1.0, Vec3::Zero(), 1.5);
    const VelocityGrid grid = VelocityGrid::for_state(macro.u, macro.e);
    const DistributionGrid f0 = ce::maxwellian_grid(macro, c, grid);
    const double s_quad = entropy_density(f0, c);
    const double s_closed = thermo::equilibrium_entropy(macro.rho, macro.e, c);
    add("entropy-quadrature", "quadrature entropy matches the closed form",
        std::abs(s_quad - s_closed), 0.0, 1e-10);
    add("entropy-value", "equilibrium entropy at rho=1, e=3/2 in units m=k_B=1", s_closed,
        4.2568156, 5e-7);
    const double e_back =
        thermo::internal_energy_from_entropy(macro.rho, s_closed / macro.rho, c);
    add("entropy-inverse", "entropy and energy constitutive relations invert exactly",
        std::abs(e_back - macro.e) / macro.e, 0.0, 1e-13);
  }

  return suite.runtime_seconds = seconds_since(t0), suite;
}

report::Suite thermo_suite(double tolerance_scale) {
  const auto t0 = Clock::now();
  const GasConstants c;
  report::Suite suite;
  suite.name = "thermo";
  auto add = [&](const std::string& id, const std::string& desc, double value, double expected,
                 double tol) {
    suite.checks.push_back(report::make_check(id, desc, value, expected, tol * tolerance_scale));
  };

  const double rho = 1.3, e = 2.1;
  const double theta = thermo::temperature(e, c);
  const double p = thermo::pressure(rho, e, c);
  add("pressure-ideal", "p = (2/3) rho e equals rho R_s theta",
      std::abs(p - rho * c.R_s * theta), 0.0, 1e-15);

  {
    const MacroState macro(rho, Vec3(0.2, 0.1, -0.3), e);
    const VelocityGrid grid = VelocityGrid::for_state(macro.u, macro.e);
    const DistributionGrid f0 = ce::maxwellian_grid(macro, c, grid);
    const Mat3 T = stress_tensor(f0, macro.u, c);
    add("stokes-identity", "-tr(T)/3 of the equilibrium stress equals (2/3) rho e",
        std::abs(-thermo::mechanical_pressure(T) - (2.0 / 3.0) * rho * e) / p, 0.0, 1e-12);
  }

  {
    const CEState state = reference_ce_state();
    const double theta_s = thermo::temperature(state.macro.e, c);
    const double p_s = thermo::pressure(state.macro.rho, state.macro.e, c);
    const TransportCoefficients tc = ce::transport_coefficients(state.tau(), p_s, c);
    const AffinitySet aff = reference_affinities(state, c);
    const FluxSet fluxes = closure::rs_closure_quadratic(aff, tc, theta_s, p_s);
    const double cd = thermo::clausius_duhem_production(fluxes, aff, p_s, theta_s);
    const double closed = ce::entropy_production_closed_form(state, c);
    add("clausius-duhem", "macroscopic production matches the kinetic closed form",
        std::abs(cd - closed) / closed, 0.0, 1e-12);
    add("production-nonneg", "Clausius-Duhem production is non-negative", cd >= 0.0 ? 1.0 : 0.0,
        1.0, 0.0);
  }

  return suite.runtime_seconds = seconds_since(t0), suite;
}

report::Suite chapman_enskog_suite(double tolerance_scale) {
  const auto t0 = Clock::now();
  const GasConstants c;
  report::Suite suite;
  suite.name = "chapman-enskog";
  auto add = [&](const std::string& id, const std::string& desc, double value, double expected,
                 double tol) {
    suite.checks.push_back(report::make_check(id, desc, value, expected, tol * tolerance_scale));
  };

  const CEState state = reference_ce_state();
  const VelocityGrid grid = VelocityGrid::for_state(state.macro.u, state.macro.e);
  const double p = thermo::pressure(state.macro.rho, state.macro.e, c);
  const TransportCoefficients tc = ce::transport_coefficients(state.tau(), p, c);

  const ce::SolvabilityReport sol = ce::check_solvability(state, grid, c);
  double max_res = 0.0;
  for (double r : sol.residuals) max_res = std::max(max_res, r);
  add("solvability", "five moments of the first-order correction vanish", max_res, 0.0, 1e-10);

  const ce::ExpansionReport exp = ce::expansion_independence_report(state, grid, c);
  double max_delta = 0.0;
  for (double d : exp.deltas) max_delta = std::max(max_delta, d);
  add("expansion-moments", "order-0 and order-1 truncations share conserved moments", max_delta,
      0.0, 1e-10);
  add("expansion-entropy", "entropy shift of the truncation is O(Kn^2)",
      std::abs(exp.entropy_delta), 0.0, 10.0 * state.Kn * state.Kn);

  const FluxSet fluxes = ce::first_order_fluxes(state, grid, c);
  const Mat3 Dd = state.grads.deviator();
  const Vec3 grad_theta = state.grads.grad_theta(c);
  add("stress-newtonian", "quadrature stress equals -pI + 2 nu D^d",
      (fluxes.T + p * Mat3::Identity() - 2.0 * tc.nu * Dd).norm() / (2.0 * tc.nu * Dd.norm()),
      0.0, 1e-10);
  add("heat-fourier", "quadrature heat flux equals -kappa grad(theta)",
      (fluxes.Q + tc.kappa * grad_theta).norm() / (tc.kappa * grad_theta.norm()), 0.0, 1e-10);

  // Extract the coefficients themselves from the quadrature fluxes.
  const double nu_q = (fluxes.T + p * Mat3::Identity()).cwiseProduct(Dd).sum() /
                      (2.0 * Dd.cwiseProduct(Dd).sum());
  const double kappa_q = -fluxes.Q.dot(grad_theta) / grad_theta.squaredNorm();
  add("viscosity", "nu from quadrature equals tau p", std::abs(nu_q - tc.nu) / tc.nu, 0.0, 1e-10);
  add("conductivity", "kappa from quadrature equals (5/2) R_s tau p",
      std::abs(kappa_q - tc.kappa) / tc.kappa, 0.0, 1e-10);

  const double xi_quad = ce::entropy_production_quadrature(state, grid, c);
  const double xi_closed = ce::entropy_production_closed_form(state, c);
  add("production-quadrature", "squared-correction production matches the closed form",
      std::abs(xi_quad - xi_closed) / xi_closed, 0.0, 1e-10);

  // The relaxation-form production converges to the squared-correction form as
  // Kn -> 0 (first order in Kn).
  {
    CEState small = state;
    small.Kn = 1e-3;
    const DistributionGrid f = ce::truncated_grid(small, c, grid);
    const double xi_bgk = ce::bgk_entropy_production(f, small.macro, small.tau(), c);
    const double xi_sq = ce::entropy_production_quadrature(small, grid, c);
    add("production-bgk", "relaxation-form production agrees to O(Kn)",
        std::abs(xi_bgk - xi_sq) / xi_sq, 0.0, 1e-2);
  }

  return suite.runtime_seconds = seconds_since(t0), suite;
}

report::Suite closure_suite(double tolerance_scale) {
  const auto t0 = Clock::now();
  const GasConstants c;
  report::Suite suite;
  suite.name = "closure";
  auto add = [&](const std::string& id, const std::string& desc, double value, double expected,
                 double tol) {
    suite.checks.push_back(report::make_check(id, desc, value, expected, tol * tolerance_scale));
  };

  const CEState state = reference_ce_state();
  const double theta = thermo::temperature(state.macro.e, c);
  const double p = thermo::pressure(state.macro.rho, state.macro.e, c);
  const double tau = state.tau();
  const TransportCoefficients tc = ce::transport_coefficients(tau, p, c);
  const AffinitySet aff = reference_affinities(state, c);
  const Vec8 A = closure::flatten_affinity(aff);

  const FluxSet closed = closure::rs_closure_quadratic(aff, tc, theta, p);
  const FluxSet linear = closure::linear_irreversible_closure(aff, tc, theta, p);
  add("two-routes", "variational and polarization routes agree",
      ((closed.T - linear.T).norm() + (closed.Q - linear.Q).norm()) /
          (closed.T.norm() + closed.Q.norm()),
      0.0, 1e-12);

  const auto producer = std::make_shared<closure::QuadraticProducer>(tc, theta);
  const closure::NumericSolution num = closure::rs_closure_numeric(*producer, A);
  const Vec8 J_closed =
      closure::flatten(closed.T + p * Mat3::Identity(), closed.Q);
  add("kkt-solution", "Newton KKT maximizer matches the closed form",
      (num.J - J_closed).norm() / J_closed.norm(), 0.0, 1e-8);
  add("kkt-multiplier", "constraint multiplier of the quadratic producer", num.multiplier, 2.0,
      1e-8);
  add("kkt-residual", "stationarity residual of the converged solution", num.kkt_residual, 0.0,
      1e-9);

  {
    // iota chosen so the minimal relaxation time reproduces tau.
    closure::ProducerSpec spec;
    spec.producer = producer;
    spec.alpha = 1.0;
    spec.iota = [&](const Vec8& a) {
      return tau * (2.0 * tc.nu * a.head<5>().squaredNorm() +
                    tc.kappa * theta * a.tail<3>().squaredNorm());
    };
    const closure::MinRelaxationSolution dual = closure::min_relaxation_closure(spec, A);
    add("dual-tau", "minimal-relaxation dual recovers the relaxation time",
        std::abs(dual.tau_star - tau) / tau, 0.0, 1e-8);
    add("dual-flux", "dual and primal share the maximizer", (dual.J - J_closed).norm(), 0.0,
        1e-8);
  }

  {
    AffinitySet aff2;
    aff2.D_full << -0.1, 0.0, 0.2, 0.0, 0.3, -0.1, 0.2, -0.1, -0.2;
    aff2.g_theta = Vec3(-0.4, 0.2, 0.1);
    const Vec8 A2 = closure::flatten_affinity(aff2);
    auto flux_map = [&](const Vec8& a) { return closure::rs_closure_numeric(*producer, a).J; };
    add("linearity", "numeric closure of a quadratic producer is linear",
        closure::linearity_defect(flux_map, A, A2), 0.0, 1e-7);
  }

  {
    const closure::EulerLimitReport euler =
        closure::euler_limit(aff, state.macro.rho, theta, 1.0, c);
    add("euler-stress", "dissipative stress vanishes in the Kn -> 0 limit",
        (euler.limit.T + p * Mat3::Identity()).norm() / p, 0.0, 1e-10);
    add("euler-heat", "heat flux vanishes in the Kn -> 0 limit", euler.limit.Q.norm() / p, 0.0,
        1e-10);
  }

  {
    const double C_B = 2.5;
    const double tau_hs = closure::bgk_relaxation_time(state.macro.rho, theta, c, C_B);
    const double theta_back = closure::bgk_theta_from_tau(state.macro.rho, tau_hs, c, C_B);
    add("hard-sphere-inverse", "relaxation-time law and its inverse round-trip",
        std::abs(theta_back - theta) / theta, 0.0, 1e-13);
  }

  return suite.runtime_seconds = seconds_since(t0), suite;
}

report::Suite scaling_suite(double tolerance_scale) {
  const auto t0 = Clock::now();
  const GasConstants c;
  report::Suite suite;
  suite.name = "scaling";
  auto add = [&](const std::string& id, const std::string& desc, double value, double expected,
                 double tol) {
    suite.checks.push_back(report::make_check(id, desc, value, expected, tol * tolerance_scale));
  };

  add("mean-speed", "E|w| at theta = 1 equals sqrt(8/pi)",
      kernel::maxwellian_speed_moment_closed_form(1.0, 1.0, c),
      std::sqrt(8.0 / std::numbers::pi), 1e-14);

  for (double lambda : {1.0, 1.5}) {
    const double theta = (lambda == 1.0) ? 1.0 : 2.0;
    const double closed = kernel::maxwellian_speed_moment_closed_form(lambda, theta, c);
    const double quad = kernel::maxwellian_speed_moment_quadrature(lambda, theta, c);
    add("radial-quadrature-" + std::to_string(lambda).substr(0, 3),
        "radial quadrature matches the Gamma-function closed form",
        std::abs(quad - closed) / closed, 0.0, 1e-10);
  }

  {
    const KernelSpec spec{1.0, 0.7};
    add("frequency-slope", "log-log slope of 1/tau in theta equals lambda/2",
        kernel::fit_temperature_exponent(spec, c), 0.5, 1e-12);
    add("frequency-slope-quadrature", "slope refit from quadrature data",
        kernel::fit_temperature_exponent(spec, c, true), 0.5, 1e-8);
  }

  {
    const auto hs = kernel::transport_scaling_exponent(1.0);
    add("transport-exponent", "nu ~ (rho tau)^(1 - 2/lambda) at lambda = 1", hs.exponent, -1.0,
        1e-15);
    add("transport-range-ok", "lambda = 1 lies in the backed range",
        hs.within_paper_range ? 1.0 : 0.0, 1.0, 0.0);
    const auto edge = kernel::transport_scaling_exponent(2.0);
    add("transport-range-flag", "lambda = 2 is flagged out of range",
        edge.within_paper_range ? 1.0 : 0.0, 0.0, 0.0);
  }

  return suite.runtime_seconds = seconds_since(t0), suite;
}

report::Suite curtiss_suite(double tolerance_scale) {
  const auto t0 = Clock::now();
  const GasConstants c;
  report::Suite suite;
  suite.name = "curtiss";
  auto add = [&](const std::string& id, const std::string& desc, double value, double expected,
                 double tol) {
    suite.checks.push_back(report::make_check(id, desc, value, expected, tol * tolerance_scale));
  };

  NematicField field;
  field.n = Vec3::UnitZ();
  field.grad_n << 0.3, -0.1, 0.2,
                  0.1, 0.25, -0.05,
                  0.0, 0.0, 0.0;  // director stays unit length
  field.lambda_inertia = 0.8;
  const double theta = 1.4, rho = 1.1;

  add("energy-gradient", "analytic de/dgrad_n matches central differences",
      (curtiss::energy_gradient_grad_n(theta, rho, field, c) -
       curtiss::energy_gradient_grad_n_fd(theta, rho, field, c))
          .norm(),
      0.0, 1e-8);

  {
    CurtissMacro macro;
    macro.rho = rho;
    macro.theta = theta;
    macro.inertia = field.lambda_inertia *
                    (Mat3::Identity() - field.n * field.n.transpose());
    const CoupleFluxSet fluxes = curtiss::curtiss_zeroth_fluxes(macro, c);
    const double p = rho * c.R_s * theta;
    add("zeroth-stress", "degenerate-inertia equilibrium stress is -pI",
        (fluxes.T + p * Mat3::Identity()).norm() / p, 0.0, 1e-10);
    add("zeroth-heat", "equilibrium heat flux vanishes", fluxes.Q.norm() / p, 0.0, 1e-10);
    add("zeroth-couple", "equilibrium couple stress vanishes", fluxes.M.norm() / p, 0.0, 1e-10);
  }

  {
    const curtiss::EricksenFluxes er = curtiss::ericksen_fluxes(field, theta, rho, c);
    Mat3 grad_v, grad_omega;
    grad_v << 0.2, -0.1, 0.3, 0.05, 0.1, -0.2, 0.15, 0.0, 0.1;
    grad_omega << -0.1, 0.2, 0.0, 0.3, -0.05, 0.1, 0.2, 0.1, -0.3;
    add("variational-identity", "energy-derived fluxes annihilate the working residual",
        std::abs(curtiss::variational_residual(er.T_star, er.M_star, field, theta, rho, grad_v,
                                               grad_omega, c)),
        0.0, 1e-12);
  }

  {
    const curtiss::LeslieComparison cmp =
        curtiss::leslie_stress_comparison(field, theta, rho, c);
    add("coefficient-ratio", "energy-derived stress is twice the printed momentum term",
        cmp.coefficient_ratio, 2.0, 1e-12);
    add("stress-parallel", "the two stress candidates are proportional",
        (cmp.energy_derived - cmp.coefficient_ratio * cmp.momentum_equation).norm() /
            cmp.energy_derived.norm(),
        0.0, 1e-12);
  }

  return suite.runtime_seconds = seconds_since(t0), suite;
}

std::vector<std::string> suite_names() {
  return {"maxwellian", "thermo", "chapman-enskog", "closure", "scaling", "curtiss"};
}

std::vector<report::Suite> run_suites(const std::string& name, double tolerance_scale) {
  std::vector<report::Suite> out;
  auto run_one = [&](const std::string& n) {
    if (n == "maxwellian") out.push_back(maxwellian_suite(tolerance_scale));
    else if (n == "thermo") out.push_back(thermo_suite(tolerance_scale));
    else if (n == "chapman-enskog") out.push_back(chapman_enskog_suite(tolerance_scale));
    else if (n == "closure") out.push_back(closure_suite(tolerance_scale));
    else if (n == "scaling") out.push_back(scaling_suite(tolerance_scale));
    else if (n == "curtiss") out.push_back(curtiss_suite(tolerance_scale));
    else throw std::invalid_argument("unknown verification suite: " + n);
  };
  if (name == "all") {
    for (const std::string& n : suite_names()) run_one(n);
  } else {
    run_one(name);
  }
  return out;
}

}  // namespace kcl::verify
