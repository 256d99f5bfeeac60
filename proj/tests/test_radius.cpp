#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wellblock/analytic.hpp"
#include "wellblock/radius.hpp"

namespace wb = wellblock;

namespace {

wb::GridSpec grid(double delta, double tau = 1e-6) { return wb::GridSpec::make(delta, 1, tau); }

wb::SolverOptions balance() {
  wb::SolverOptions o;
  o.formulation = wb::Formulation::MaterialBalance;
  return o;
}

}  // namespace

TEST(Radius, SteadySlabIsHalfBlock) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(std::log(1e-6), std::log(1e3));
  for (int i = 0; i < 100; ++i) {
    const double d = std::exp(u(rng));
    const auto s = wb::r0_ss_1d(wb::GridSpec::make(d, 3, 0.5));
    ASSERT_EQ(s.r0, d / 2.0);
    ASSERT_EQ(s.method, wb::SolveMethod::ClosedForm);
  }
}

TEST(Radius, PseudoSteadySlabPublishedValue) {
  const auto s = wb::r0_pss_1d(grid(1.0), wb::Slab1D::make(10.0));
  EXPECT_NEAR(s.r0, std::sqrt(111.0) - 10.0, 1e-12);
  EXPECT_LE(std::abs(wb::equations::pss_1d_published(s.r0, 1.0, 10.0)), 1e-12);
}

TEST(Radius, PseudoSteadySlabLimitAndMonotonicity) {
  double prev = wb::r0_pss_1d(grid(1.0), wb::Slab1D::make(2.0)).r0;
  for (double re = 3.0; re < 1e7; re *= 1.7) {
    const double r = wb::r0_pss_1d(grid(1.0), wb::Slab1D::make(re)).r0;
    ASSERT_LT(r, prev) << "re=" << re;
    prev = r;
  }
  // Published quadratic: r0 = 1/2 + 3/(8 r_e) + O(r_e^-2).
  for (double re : {1e4, 1e7}) {
    const double r = wb::r0_pss_1d(grid(1.0), wb::Slab1D::make(re)).r0;
    EXPECT_NEAR((r - 0.5) * re, 0.375, 1e-3) << "re=" << re;
  }
  // Balance quadratic: r0 = 1/2 + 1/(8 r_e) + O(r_e^-2).
  EXPECT_LE(std::abs(wb::r0_pss_1d(grid(1.0), wb::Slab1D::make(1e4), balance()).r0 - 0.5), 2e-5);
  EXPECT_LE(std::abs(wb::r0_pss_1d(grid(1.0), wb::Slab1D::make(1e7), balance()).r0 - 0.5), 2e-8);
}

TEST(Radius, PseudoSteadySlabBalanceForm) {
  for (double re : {2.0, 10.0, 1e3, 1e6}) {
    const auto s = wb::r0_pss_1d(grid(1.0), wb::Slab1D::make(re), balance());
    EXPECT_NEAR(s.r0, re - std::sqrt(re * re - re), 1e-12 * re);
    EXPECT_LE(std::abs(wb::equations::pss_1d_balance(s.r0, 1.0, re)), 1e-9 * re);
  }
}

TEST(Radius, PseudoSteadyConstantShiftsRoot) {
  wb::SolverOptions o;
  o.c3 = 0.3;
  const auto a = wb::r0_pss_1d(grid(1.0), wb::Slab1D::make(10.0));
  const auto b = wb::r0_pss_1d(grid(1.0), wb::Slab1D::make(10.0), o);
  EXPECT_NE(a.r0, b.r0);
  EXPECT_LE(std::abs(wb::equations::pss_1d_published(b.r0, 1.0, 10.0, 0.3)), 1e-12);
}

TEST(Radius, BoundaryDominatedSlabPublished) {
  const auto s = wb::r0_bd_1d({}, grid(1.0), wb::Slab1D::make(10.0), 1e-6);
  EXPECT_NEAR(s.r0, 0.49033411855025008273, 1e-12);
  EXPECT_LE(std::abs(s.residual), 1e-12);
  ASSERT_TRUE(s.approximation.has_value());
  EXPECT_NEAR(*s.approximation, 0.49390667068658041676, 1e-14);
  const auto far = wb::r0_bd_1d({}, grid(1.0), wb::Slab1D::make(1e4), 1e-6);
  EXPECT_NEAR(far.r0, 0.49999999023320407972, 1e-12);
}

TEST(Radius, BoundaryDominatedSlabWeakTauDependence) {
  const double a = wb::r0_bd_1d({}, grid(1.0), wb::Slab1D::make(10.0), 1e-4).r0;
  const double b = wb::r0_bd_1d({}, grid(1.0), wb::Slab1D::make(10.0), 1e-8).r0;
  EXPECT_NEAR(a, 0.49033412586301039487, 1e-12);
  EXPECT_NEAR(b, 0.49033411847712242057, 1e-12);
}

TEST(Radius, BoundaryDominatedSlabBalanceForm) {
  const auto params = wb::FluidRockParams::make(2.0, 0.5, 1.0);
  const auto s = wb::r0_bd_1d(params, grid(0.5), wb::Slab1D::make(10.0), 1e-3, balance());
  EXPECT_LE(std::abs(wb::equations::bd_1d_balance(s.r0, 0.5, 10.0, params, 1e-3)), 1e-12);
  EXPECT_GT(s.r0, 0.0);
  EXPECT_LT(s.r0, 0.5);
}

TEST(Radius, PseudoSteadyRadialValues) {
  const struct {
    double re, r0;
  } ref[] = {{5, 0.20819062731412006711},
             {10, 0.20795719448839839111},
             {50, 0.20788267923165847578},
             {100, 0.20788035205658732303},
             {500, 0.2078796073788106277}};
  double prev = 1.0;
  for (const auto& c : ref) {
    const auto s = wb::r0_pss_radial(grid(1.0), wb::RadialAnnulus::make(0.1, c.re));
    EXPECT_NEAR(s.r0, c.r0, 1e-12) << "re=" << c.re;
    EXPECT_LT(s.r0, prev);
    prev = s.r0;
  }
  const auto s = wb::r0_pss_radial(grid(1.0), wb::RadialAnnulus::make(0.1, 500.0));
  EXPECT_NEAR(s.r0, std::exp(-std::numbers::pi / 2.0), 1e-4);
  EXPECT_NEAR(*s.approximation, std::exp(-std::numbers::pi / 2.0), 1e-15);
}

TEST(Radius, BoundaryDominatedRadialPublishedHasNoRoot) {
  const auto g = wb::RadialAnnulus::make(0.05, 50.0);
  const auto mode = wellblock::analytic::bd_eigenpair_radial(g);
  try {
    wb::r0_bd_radial({}, grid(1.0), g, mode, 1e-6);
    FAIL() << "expected NoSignChange";
  } catch (const wb::NoSignChange& e) {
    EXPECT_GT(e.trace().size(), 2u);
    for (const auto& [x, f] : e.trace()) EXPECT_GT(f, 0.0) << "x=" << x;
  }
}

TEST(Radius, BoundaryDominatedRadialBalanceRoot) {
  const auto g = wb::RadialAnnulus::make(0.05, 50.0);
  const auto mode = wellblock::analytic::bd_eigenpair_radial(g);
  const auto s = wb::r0_bd_radial({}, grid(1.0), g, mode, 1e-6, balance());
  EXPECT_NEAR(s.r0, 0.20787583450306764054, 1e-9);
  EXPECT_LE(std::abs(wb::equations::bd_radial_balance(s.r0, 1.0, mode, {}, 1e-6)), 1e-10);
}

TEST(Radius, FormulationStrings) {
  for (auto f : {wb::Formulation::Published, wb::Formulation::MaterialBalance})
    EXPECT_EQ(wb::formulation_from_string(wb::to_string(f)), f);
  EXPECT_THROW(wb::formulation_from_string("other"), wb::DomainError);
}
