#include <benchmark/benchmark.h>

#include <cmath>

#include "wellblock/wellblock.hpp"

namespace wb = wellblock;

static void BM_BesselJ0(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(wb::bessel::j0(x));
}
BENCHMARK(BM_BesselJ0)->Arg(5)->Arg(100)->Arg(1000);

static void BM_BesselY1(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(wb::bessel::y1(x));
}
BENCHMARK(BM_BesselY1)->Arg(5)->Arg(100)->Arg(1000);

static void BM_RadialEigenpair(benchmark::State& state) {
  const auto g = wb::RadialAnnulus::make(0.05, 50.0);
  for (auto _ : state) benchmark::DoNotOptimize(wb::analytic::bd_eigenpair_radial(g));
}
BENCHMARK(BM_RadialEigenpair);

static void BM_PssRadialRadius(benchmark::State& state) {
  const auto grid = wb::GridSpec::make(1.0, 10, 0.1);
  const auto g = wb::RadialAnnulus::make(0.1, 100.0);
  for (auto _ : state) benchmark::DoNotOptimize(wb::r0_pss_radial(grid, g));
}
BENCHMARK(BM_PssRadialRadius);

static void BM_BdSlabRadius(benchmark::State& state) {
  const auto grid = wb::GridSpec::make(1.0, 10, 1e-6);
  const auto g = wb::Slab1D::make(10.0);
  for (auto _ : state) benchmark::DoNotOptimize(wb::r0_bd_1d({}, grid, g, 1e-6));
}
BENCHMARK(BM_BdSlabRadius);

static wb::ValidatedProblem slab(std::size_t n) {
  wb::ProblemInputs in;
  in.exterior = 10.0;
  in.delta = 10.0 / static_cast<double>(n);
  in.blocks = n;
  in.tau = 1e-2;
  return wb::validate_problem(in);
}

static void BM_FdSlabImplicit(benchmark::State& state) {
  const auto p = slab(static_cast<std::size_t>(state.range(0)));
  const auto init = wb::fd::initial_field(p, [](double, double) { return 0.0; });
  wb::fd::TransientOptions o;
  o.t_end = 1.0;
  o.sample_every = 100;
  for (auto _ : state)
    benchmark::DoNotOptimize(wb::fd::fd_transient(p, wb::fd::BoundarySpec{}, 1.0, init, o));
}
BENCHMARK(BM_FdSlabImplicit)->Arg(100)->Arg(1000);

static void BM_FdPlaneImplicit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  wb::ProblemInputs in;
  in.geometry = wb::GeometryKind::RadialAnnulus;
  in.well_radius = 0.1;
  in.exterior = static_cast<double>(n);
  in.delta = 1.0;
  in.blocks = n;
  in.tau = 0.1;
  const auto p = wb::validate_problem(in);
  const auto init = wb::fd::initial_field(p, [](double, double) { return 0.0; });
  wb::fd::TransientOptions o;
  o.tau = 0.1;
  o.t_end = 1.0;
  o.sample_every = 10;
  for (auto _ : state)
    benchmark::DoNotOptimize(wb::fd::fd_transient(p, wb::fd::BoundarySpec{}, 1.0, init, o));
}
BENCHMARK(BM_FdPlaneImplicit)->Arg(10)->Arg(40);
BENCHMARK_MAIN();
