#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "wellblock/analytic.hpp"

namespace wb = wellblock;
namespace an = wellblock::analytic;
using std::numbers::pi;

namespace {

// Second derivative by central differences.
template <class F>
double d2(F f, double x, double h = 1e-3) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

template <class F>
double d1(F f, double x, double h = 1e-6) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace

TEST(Analytic, SteadySlabBoundaryConditions) {
  const auto params = wb::FluidRockParams::make(2.5);
  const auto p = an::ss_profile_1d(params, wb::Slab1D::make(10.0), 3.0, 7.0);
  EXPECT_DOUBLE_EQ(p.pressure(10.0), 7.0);
  EXPECT_NEAR(2.5 * p.slope, 3.0, 1e-15);
  // Production draws the gallery below the boundary.
  EXPECT_LT(p.pressure(0.0), 7.0);
}

TEST(Analytic, PseudoSteadySlabSolvesDiffusion) {
  const auto params = wb::FluidRockParams::make(2.0, 0.5, 3.0);
  const auto p = an::pss_profile_1d(params, wb::Slab1D::make(4.0), 1.5);
  EXPECT_DOUBLE_EQ(p.w(0.0), 0.0);
  EXPECT_NEAR(d1([&](double x) { return p.w(x); }, 4.0), 0.0, 1e-9);
  EXPECT_NEAR(2.0 * d1([&](double x) { return p.w(x); }, 0.0), 1.5, 1e-9);
  for (double x : {0.5, 2.0, 3.5}) {
    const double lhs = params.storage() * p.drift;
    const double rhs = 2.0 * d2([&](double y) { return p.w(y); }, x);
    EXPECT_NEAR(lhs, rhs, 1e-8);
  }
  EXPECT_NEAR(p.drift, -1.5 / (params.storage() * 4.0), 1e-15);
}

TEST(Analytic, BoundaryDominatedSlabMode) {
  const auto params = wb::FluidRockParams::make(3.0, 0.5, 2.0);
  const auto m = an::bd_mode_1d(params, wb::Slab1D::make(5.0));
  EXPECT_DOUBLE_EQ(m.lambda, pi / 10.0);
  EXPECT_NEAR(m.decay_rate, 3.0 * m.lambda * m.lambda / 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(m.shape(0.0), 0.0);
  EXPECT_NEAR(d1([&](double x) { return m.shape(x); }, 5.0), 0.0, 1e-9);
  const double t = 0.7;
  const double dt = d1([&](double s) { return m.pressure(2.0, s); }, t);
  const double lap = d2([&](double x) { return m.pressure(x, t); }, 2.0);
  EXPECT_NEAR(params.storage() * dt, 3.0 * lap, 1e-6);
  EXPECT_NEAR(m.rate(t), 3.0 * d1([&](double x) { return m.pressure(x, t); }, 0.0), 1e-8);
}

TEST(Analytic, PseudoSteadyRadialProfile) {
  const auto params = wb::FluidRockParams::make(1.7, 1.0, 1.0, 2.0);
  const auto g = wb::RadialAnnulus::make(0.2, 30.0);
  const auto p = an::pss_profile_radial(params, g, 4.0);
  EXPECT_NEAR(p.w(0.2), 0.0, 1e-14);
  EXPECT_NEAR(p.velocity(30.0), 0.0, 1e-14);
  EXPECT_NEAR(p.flux(0.2), 4.0 / 2.0, 1e-12);
  for (double r : {1.0, 5.0, 20.0}) {
    auto w = [&](double x) { return p.w(x); };
    const double lap = d2(w, r) + d1(w, r) / r;
    EXPECT_NEAR(params.storage() * p.drift, params.conductivity() * lap, 1e-6);
  }
}

TEST(Analytic, RadialEigenpair) {
  const auto g = wb::RadialAnnulus::make(1.0, 2.0);
  const auto m = an::bd_eigenpair_radial(g);
  EXPECT_NEAR(m.k, 1.3607773853370084169, 1e-12);
  EXPECT_NEAR(m.lambda0, 1.8517150924446250896, 1e-11);
  EXPECT_LE(std::abs(an::eigen_determinant(g, m.k)), 1e-10);
  EXPECT_LE(std::abs(m.phi0(1.0)), 1e-10);
  const double h = 1e-6;
  EXPECT_LE(std::abs((m.phi0(2.0 + h) - m.phi0(2.0 - h)) / (2 * h)), 1e-8);
  EXPECT_NEAR(m.phi0_prime(1.5), d1([&](double r) { return m.phi0(r); }, 1.5), 1e-8);
}

TEST(Analytic, EigenvalueScaling) {
  const auto a = an::bd_eigenpair_radial(wb::RadialAnnulus::make(1.0, 2.0));
  const auto b = an::bd_eigenpair_radial(wb::RadialAnnulus::make(2.0, 4.0));
  EXPECT_NEAR(b.lambda0 / (a.lambda0 / 4.0), 1.0, 1e-8);
}

TEST(Analytic, RadialModeSolvesDiffusion) {
  const auto params = wb::FluidRockParams::make(2.0, 0.5, 1.0);
  const auto m = an::bd_eigenpair_radial(wb::RadialAnnulus::make(0.05, 50.0), params);
  EXPECT_NEAR(m.k, 0.011375957940835444503, 1e-14);
  const double r = 10.0, t = 3.0;
  auto u = [&](double x) { return m.pressure(x, t); };
  const double lap = d2(u, r, 1e-2) + d1(u, r) / r;
  const double dt = d1([&](double s) { return m.pressure(r, s); }, t);
  EXPECT_NEAR(params.storage() * dt / (2.0 * lap), 1.0, 1e-5);
}

TEST(Analytic, EvalPhiDomain) {
  const auto m = an::bd_eigenpair_radial(wb::RadialAnnulus::make(1.0, 2.0));
  EXPECT_THROW(an::eval_phi0(m, 0.5), wb::DomainError);
  EXPECT_THROW(an::eval_phi0(m, 2.5), wb::DomainError);
  EXPECT_NO_THROW(an::eval_phi0(m, 1.5));
}

TEST(Analytic, SamplesReadProfiles) {
  const auto p = an::pss_profile_1d({}, wb::Slab1D::make(10.0), 1.0);
  const auto s = an::sample_pss_1d(p, 0.05, 0.1, 2.0, 0.01);
  EXPECT_DOUBLE_EQ(s.p0_s, p.pressure(0.05, 2.0));
  EXPECT_DOUBLE_EQ(s.p1_s, p.pressure(0.1, 2.0));
  EXPECT_DOUBLE_EQ(s.p0_s_tau, p.pressure(0.05, 2.01));
  EXPECT_DOUBLE_EQ(s.q, 1.0);
}
