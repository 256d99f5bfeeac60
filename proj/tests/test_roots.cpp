#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "wellblock/roots.hpp"

namespace wb = wellblock;

TEST(Roots, SolvesCubicWithSecant) {
  wb::RootConfig cfg;
  cfg.bracket_lo = 0.0;
  cfg.bracket_hi = 3.0;
  const auto r = wb::solve_bracketed([](double x) { return x * x * x - 2.0; }, cfg);
  EXPECT_NEAR(r.root, std::cbrt(2.0), 1e-12);
  EXPECT_LE(std::abs(r.f_root), cfg.abs_tol);
}

TEST(Roots, NewtonConvergesQuickly) {
  wb::RootConfig cfg;
  cfg.bracket_lo = 0.0;
  cfg.bracket_hi = 2.0;
  const auto r = wb::solve_bracketed([](double x) { return std::cos(x) - x; }, cfg,
                                     [](double x) { return -std::sin(x) - 1.0; });
  EXPECT_NEAR(r.root, 0.73908513321516064, 1e-14);
  EXPECT_EQ(r.method, wb::SolveMethod::NewtonBracketed);
  EXPECT_LE(r.iterations, 10);
}

TEST(Roots, ErrorsAreTyped) {
  wb::RootConfig cfg;
  cfg.bracket_lo = 1.0;
  cfg.bracket_hi = 2.0;
  try {
    wb::solve_bracketed([](double x) { return x * x + 1.0; }, cfg);
    FAIL();
  } catch (const wb::NoSignChange& e) {
    EXPECT_EQ(e.trace().size(), 2u);
  }
  cfg.max_iter = 2;
  EXPECT_THROW(wb::solve_bracketed([](double x) { return std::tanh(50.0 * (x - 1.2345678)); }, cfg), wb::MaxIterExceeded);
  cfg.max_iter = 100;
  EXPECT_THROW(wb::solve_bracketed([](double x) { return std::log(x - 1.5); }, cfg), wb::NonFiniteDetected);
  cfg.bracket_hi = 0.5;
  EXPECT_THROW(wb::solve_bracketed([](double x) { return x; }, cfg), wb::DomainError);
}

TEST(Roots, StaysInsideBracketOnHostileFunction) {
  // Newton from the flat end would leave the bracket; bisection must take over.
  wb::RootConfig cfg;
  cfg.bracket_lo = -1.0;
  cfg.bracket_hi = 10.0;
  const auto r = wb::solve_bracketed([](double x) { return std::atan(x - 0.3); }, cfg,
                                     [](double x) { return 1.0 / (1.0 + (x - 0.3) * (x - 0.3)); });
  EXPECT_NEAR(r.root, 0.3, 1e-12);
}

TEST(Roots, RandomLinearRoots) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> root(-5.0, 5.0), slope(0.1, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double x0 = root(rng), m = slope(rng);
    wb::RootConfig cfg;
    cfg.bracket_lo = -6.0;
    cfg.bracket_hi = 6.0;
    const auto r = wb::solve_bracketed([=](double x) { return m * (x - x0); }, cfg);
    ASSERT_NEAR(r.root, x0, 1e-11);
  }
}

TEST(Roots, ScansFindSignChanges) {
  wb::ScanTrace trace;
  const auto b = wb::scan_log([](double x) { return x - 3.0; }, 1e-3, 1e3, 64, trace);
  ASSERT_TRUE(b.has_value());
  EXPECT_LE(b->first, 3.0);
  EXPECT_GE(b->second, 3.0);

  trace.clear();
  EXPECT_FALSE(wb::scan_linear([](double x) { return x * x + 1.0; }, -1.0, 1.0, 16, trace).has_value());
  EXPECT_EQ(trace.size(), 16u);
  EXPECT_THROW(wb::scan_log([](double x) { return x; }, 0.0, 1.0, 8, trace), wb::DomainError);
}
