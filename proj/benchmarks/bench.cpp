#include <benchmark/benchmark.h>

#include "kcl/bgk_sim.hpp"
#include "kcl/chapman_enskog.hpp"
#include "kcl/moments.hpp"

using namespace kcl;

namespace {

const GasConstants kGas;

void BM_maxwellian_moments(benchmark::State& state) {
  const MacroState macro(1.2, Vec3(0.1, -0.05, 0.2), 1.5);
  const auto grid = VelocityGrid::for_state(macro.u, macro.e, static_cast<int>(state.range(0)));
  const auto f = ce::maxwellian_grid(macro, kGas, grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(conserved_moments(f, kGas));
  }
}
BENCHMARK(BM_maxwellian_moments)->Arg(16)->Arg(24)->Arg(32);

void BM_discrete_equilibrium(benchmark::State& state) {
  const auto grid = VelocityGrid::uniform(Vec3::Zero(), 8.0, static_cast<int>(state.range(0)));
  ConservedMoments target;
  target.rho = 1.0;
  target.momentum = Vec3(0.3, 0.0, 0.0);
  target.total_energy = 1.6;
  sim::Multipliers warm;
  bool have_warm = false;
  for (auto _ : state) {
    const auto f =
        sim::discrete_equilibrium(target, grid, kGas, have_warm ? &warm : nullptr, &warm);
    have_warm = true;
    benchmark::DoNotOptimize(f.values().data());
  }
}
BENCHMARK(BM_discrete_equilibrium)->Arg(16)->Arg(24);

void BM_sim_step(benchmark::State& state) {
  sim::SimConfig cfg;
  cfg.n_cells = static_cast<int>(state.range(0));
  cfg.n_velocity = 16;
  cfg.tau = 0.05;
  cfg.t_end = 1e9;  // stepping manually
  sim::Simulator s(cfg);
  for (auto _ : state) {
    s.step();
  }
  state.SetItemsProcessed(state.iterations() * cfg.n_cells);
}
BENCHMARK(BM_sim_step)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
