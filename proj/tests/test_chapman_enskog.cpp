#include <doctest.h>

#include <cmath>

#include "kcl/chapman_enskog.hpp"

using namespace kcl;

namespace {

CEState make_state() {
  CEState state{MacroState(1.2, Vec3(0.1, -0.05, 0.2), 1.5), GradientState{}, 0.8, 1e-2};
  state.grads.D_full << 0.30, 0.10, -0.05, 0.10, -0.20, 0.15, -0.05, 0.15, 0.08;
  state.grads.grad_e = Vec3(0.25, -0.10, 0.05);
  return state;
}

}  // namespace

TEST_CASE("the Maxwellian peaks at the bulk velocity and f1 vanishes there") {
  const GasConstants c;
  const CEState state = make_state();
  const Vec3& u = state.macro.u;
  CHECK(ce::eval_maxwellian(state.macro, c, u) >
        ce::eval_maxwellian(state.macro, c, u + Vec3(0.5, 0, 0)));
  CHECK(ce::eval_f1(state, c, u) == doctest::Approx(0.0));
}

TEST_CASE("f1 satisfies the solvability conditions") {
  const GasConstants c;
  const CEState state = make_state();
  const auto grid = VelocityGrid::for_state(state.macro.u, state.macro.e);
  const auto report = ce::check_solvability(state, grid, c);
  CHECK(report.pass);
  for (double r : report.residuals) CHECK(std::abs(r) < 1e-10);
}

TEST_CASE("first-order fluxes match the Navier-Stokes-Fourier closed forms") {
  const GasConstants c;
  const CEState state = make_state();
  const auto grid = VelocityGrid::for_state(state.macro.u, state.macro.e);
  const double p = (2.0 / 3.0) * state.macro.rho * state.macro.e;
  const auto coeffs = ce::transport_coefficients(state.tau(), p, c);
  const FluxSet fl = ce::first_order_fluxes(state, grid, c);
  const Mat3 T_expected = -p * Mat3::Identity() + 2.0 * coeffs.nu * state.grads.deviator();
  const Vec3 Q_expected = -coeffs.kappa * state.grads.grad_theta(c);
  CHECK((fl.T - T_expected).norm() < 1e-6 * p);
  CHECK((fl.Q - Q_expected).norm() < 1e-6 * Q_expected.norm());
}

TEST_CASE("transport coefficients obey nu = tau p and kappa/(R_s nu) = 5/2") {
  const GasConstants c(1.5, 2.0);
  const auto coeffs = ce::transport_coefficients(0.3, 0.7, c);
  CHECK(coeffs.nu == doctest::Approx(0.21));
  CHECK(coeffs.kappa / (c.R_s * coeffs.nu) == doctest::Approx(2.5));
}

TEST_CASE("entropy production: quadrature equals the closed form") {
  const GasConstants c;
  const CEState state = make_state();
  const auto grid = VelocityGrid::for_state(state.macro.u, state.macro.e);
  const double quad = ce::entropy_production_quadrature(state, grid, c);
  const double closed = ce::entropy_production_closed_form(state, c);
  CHECK(quad == doctest::Approx(closed).epsilon(1e-8));
  CHECK(closed > 0.0);
}

TEST_CASE("BGK-form production approaches the quadratic form at small Kn") {
  const GasConstants c;
  CEState state = make_state();
  state.Kn = 1e-3;
  const auto grid = VelocityGrid::for_state(state.macro.u, state.macro.e);
  const auto f = ce::truncated_grid(state, c, grid);
  const double bgk = ce::bgk_entropy_production(f, state.macro, state.tau(), c);
  const double closed = ce::entropy_production_closed_form(state, c);
  CHECK(bgk == doctest::Approx(closed).epsilon(1e-2));
}

TEST_CASE("expansion deltas of the conserved fields scale as O(Kn^2)") {
  const GasConstants c;
  CEState state = make_state();
  const auto grid = VelocityGrid::for_state(state.macro.u, state.macro.e);
  state.Kn = 0.04;
  const auto coarse = ce::expansion_independence_report(state, grid, c);
  state.Kn = 0.02;
  const auto fine = ce::expansion_independence_report(state, grid, c);
  CHECK(std::abs(coarse.entropy_delta / fine.entropy_delta) > 3.5);
  for (int i = 0; i < 5; ++i) {
    if (std::abs(coarse.deltas[i]) > 1e-12)
      CHECK(std::abs(coarse.deltas[i] / fine.deltas[i]) > 3.5);
  }
}
