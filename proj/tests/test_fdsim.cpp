#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "wellblock/analytic.hpp"
#include "wellblock/fdsim.hpp"

namespace wb = wellblock;
namespace fd = wellblock::fd;

namespace {

wb::ValidatedProblem slab(double re, double d, double tau, double K = 1.0) {
  wb::ProblemInputs in;
  in.conductivity = K;
  in.exterior = re;
  in.delta = d;
  in.blocks = static_cast<std::size_t>(std::llround(re / d));
  in.tau = tau;
  return wb::validate_problem(in);
}

wb::ValidatedProblem plane(double d, std::size_t n, double tau) {
  wb::ProblemInputs in;
  in.geometry = wb::GeometryKind::RadialAnnulus;
  in.well_radius = 0.1;
  in.exterior = 2.0 * d * static_cast<double>(n);
  in.delta = d;
  in.blocks = n;
  in.tau = tau;
  return wb::validate_problem(in);
}

}  // namespace

TEST(FdSim, SlabLayout) {
  const auto x = fd::node_positions(slab(1.0, 0.25, 0.1));
  ASSERT_EQ(x.size(), 5u);
  EXPECT_DOUBLE_EQ(x[0], 0.125);
  EXPECT_DOUBLE_EQ(x[1], 0.25);
  EXPECT_DOUBLE_EQ(x[4], 1.0);
}

TEST(FdSim, SteadySlabIsExactForLinearProfiles) {
  const auto p = slab(10.0, 0.1, 1e-2, 2.0);
  const auto f = fd::fd_steady_1d(p, 1.5, 3.0);
  const auto prof = wb::analytic::ss_profile_1d(p.params(), wb::Slab1D::make(10.0), 1.5, 3.0);
  const auto x = fd::node_positions(p);
  for (std::size_t i = 0; i < x.size(); ++i) ASSERT_NEAR(f.at(i), prof.pressure(x[i]), 1e-10) << i;
  EXPECT_NEAR(f.well_rate, 1.5, 1e-12);
}

TEST(FdSim, SteadyPlaneIsSymmetric) {
  const auto p = plane(1.0, 5, 0.1);
  const auto f = fd::fd_steady_2d(p, 1.0, 0.0);
  ASSERT_EQ(f.nx, 11u);
  EXPECT_EQ(f.well_i, 5u);
  for (std::size_t j = 0; j < f.ny; ++j)
    for (std::size_t i = 0; i < f.nx; ++i) {
      EXPECT_NEAR(f.at(i, j), f.at(j, i), 1e-12);
      EXPECT_NEAR(f.at(i, j), f.at(f.nx - 1 - i, j), 1e-12);
    }
  EXPECT_LT(f.well_pressure(), f.neighbor_pressure());
  EXPECT_LT(f.neighbor_pressure(), 0.0);
}

TEST(FdSim, ImplicitStepConservesContent) {
  for (auto g : {slab(4.0, 0.2, 0.05), plane(0.5, 6, 0.05)}) {
    auto init = fd::initial_field(g, [](double x, double y) { return 0.1 * x * x + y; });
    fd::TransientOptions o;
    o.tau = 0.05;
    o.t_end = 0.5;
    const auto series = fd::fd_transient(g, fd::BoundarySpec::for_regime(wb::Regime::PseudoSteadyState), 0.7, init, o);
    ASSERT_EQ(series.size(), 11u);
    for (std::size_t k = 0; k + 1 < series.size(); ++k) {
      const double rate = (fd::total_content(g, series[k + 1]) - fd::total_content(g, series[k])) / o.tau;
      ASSERT_NEAR(rate, -0.7, 1e-10) << k;
    }
    EXPECT_NEAR(series.back().t, 0.5, 1e-12);
  }
}

TEST(FdSim, ExplicitMatchesImplicitForSmallSteps) {
  const auto g = slab(2.0, 0.2, 1e-3);
  const auto init = fd::initial_field(g, [](double x, double) { return std::cos(x); });
  fd::TransientOptions o;
  o.tau = 1e-3;
  o.t_end = 0.2;
  o.sample_every = 200;
  const auto bc = fd::BoundarySpec::for_regime(wb::Regime::PseudoSteadyState);
  const auto a = fd::fd_transient(g, bc, 1.0, init, o);
  o.scheme = fd::TimeScheme::Explicit;
  const auto b = fd::fd_transient(g, bc, 1.0, init, o);
  for (std::size_t i = 0; i < a.back().nx; ++i) EXPECT_NEAR(a.back().at(i), b.back().at(i), 2e-3);
}

TEST(FdSim, ExplicitStabilityIsChecked) {
  const auto g = slab(2.0, 0.2, 0.5);
  fd::TransientOptions o;
  o.tau = 0.5;
  o.t_end = 1.0;
  o.scheme = fd::TimeScheme::Explicit;
  EXPECT_THROW(fd::fd_transient(g, fd::BoundarySpec{}, 1.0, fd::initial_field(g, [](double, double) { return 0.0; }), o),
               wb::StabilityViolation);
  const auto pl = plane(0.5, 4, 1.0);
  EXPECT_THROW(fd::fd_transient(pl, fd::BoundarySpec{}, 1.0, fd::initial_field(pl, [](double, double) { return 0.0; }), o),
               wb::StabilityViolation);
}

TEST(FdSim, BoundaryDominatedDecayRate) {
  const double re = 10.0;
  const auto g = slab(re, 0.1, 1e-2);
  const auto m = wb::analytic::bd_mode_1d(g.params(), wb::Slab1D::make(re));
  const auto init = fd::initial_field(g, [&](double x, double) { return m.shape(x); });
  fd::TransientOptions o;
  o.tau = 1e-2;
  o.t_end = 1.0 / m.decay_rate;
  o.sample_every = 100;
  const auto s = fd::fd_transient(g, fd::BoundarySpec::for_regime(wb::Regime::BoundaryDominated), 0.0, init, o);
  const double measured = -std::log(s.back().at(50) / s.front().at(50)) / (s.back().t - s.front().t);
  EXPECT_NEAR(measured / m.decay_rate, 1.0, 2e-2);
  EXPECT_GT(s.back().well_rate, 0.0);
}

TEST(FdSim, SampleExtraction) {
  const auto g = slab(1.0, 0.1, 0.01);
  fd::TransientOptions o;
  o.tau = 0.01;
  o.t_end = 0.05;
  const auto s = fd::fd_transient(g, fd::BoundarySpec{}, 1.0, fd::initial_field(g, [](double, double) { return 0.0; }), o);
  const auto samples = fd::extract_mb_samples(s);
  ASSERT_EQ(samples.size(), s.size() - 1);
  EXPECT_DOUBLE_EQ(samples[0].p0_s, s[0].well_pressure());
  EXPECT_DOUBLE_EQ(samples[0].p0_s_tau, s[1].well_pressure());
  EXPECT_NEAR(samples[0].tau, 0.01, 1e-15);
  EXPECT_THROW(fd::extract_mb_samples({s[0]}), wb::InsufficientSamples);
}
