#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wellblock/bessel.hpp"
#include "wellblock/roots.hpp"

namespace bs = wellblock::bessel;

namespace {

// 30-digit reference values (mpmath), see tests/oracles/oracle_values.txt.
struct Point {
  double x, j0, j1, y0, y1;
};
constexpr Point kPoints[] = {
    {0.5, 0.93846980724081290423, 0.24226845767487388638, -0.44451873350670655715, -1.4714723926702430692},
    {1.0, 0.76519768655796655145, 0.44005058574493351596, 0.088256964215676957983, -0.78121282130028871655},
    {2.5, -0.048383776468197996327, 0.49709410246427403801, 0.49807035961523188783, 0.14591813796678579888},
    {5.0, -0.17759677131433830435, -0.32757913759146522204, -0.30851762524903378007, 0.1478631433912268448},
    {7.99, 0.17399001312793263252, 0.23320071425350174304, 0.22192874178576449894, -0.16048695141166469696},
    {8.0, 0.17165080713755390609, 0.23463634685391462438, 0.22352148938756622053, -0.15806046173124749426},
    {12.0, 0.047689310796833536624, -0.22344710449062761237, -0.22523731263436143369, -0.05709921826089652105},
    {17.0, -0.16985425215118354791, -0.097668492757780650236, -0.092637198442323692527, 0.16720503607723368646},
    {17.5, -0.10311039822868592217, -0.16341996942575490589, -0.16041119250501116909, 0.098572798734216046215},
    {30.0, -0.086367983581040211336, -0.11875106261662293652, -0.11729573168666402525, 0.084425570661747234891},
    {100.0, 0.019985850304223122424, -0.077145352014112158033, -0.077244313365083152254, -0.020372312002759793305},
    {1234.5, -0.013550379618035721909, 0.01821750833739249827, 0.018222995047412551598, 0.013557761447180334391},
    {1e4, -0.0070961603533888014773, 0.0036474507555295803441, 0.0036478055589866058867, 0.007096342752536495135},
};

}  // namespace

TEST(Bessel, ReferencePoints) {
  for (const auto& p : kPoints) {
    SCOPED_TRACE(p.x);
    EXPECT_NEAR(bs::j0(p.x), p.j0, 1e-14);
    EXPECT_NEAR(bs::j1(p.x), p.j1, 1e-14);
    EXPECT_NEAR(bs::y0(p.x), p.y0, 1e-14);
    EXPECT_NEAR(bs::y1(p.x), p.y1, 1e-14);
  }
}

TEST(Bessel, TinyArgument) {
  EXPECT_NEAR(bs::j0(1e-6), 0.99999999999975, 1e-16);
  EXPECT_NEAR(bs::y0(1e-6), -8.8690314816594437029, 1e-13);
  EXPECT_NEAR(bs::y1(1e-6) / -636619.77237217501376, 1.0, 1e-13);
}

TEST(Bessel, RejectsInvalidArguments) {
  EXPECT_THROW(bs::y0(0.0), wellblock::DomainError);
  EXPECT_THROW(bs::y1(-1.0), wellblock::DomainError);
  EXPECT_THROW(bs::j0(std::nan("")), wellblock::DomainError);
}

TEST(Bessel, SeamContinuity) {
  const double x = bs::kSeriesSeam;
  for (int order : {0, 1}) {
    for (bool second : {false, true}) {
      const double a = bs::detail::series(order, second, x).value;
      const double b = bs::detail::asymptotic(order, second, x).value;
      EXPECT_NEAR(a, b, 1e-13) << "order " << order << " second " << second;
    }
  }
}

TEST(Bessel, WronskianRandom) {
  std::mt19937 rng(20240611);
  std::uniform_real_distribution<double> dist(0.1, 100.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = dist(rng);
    const double w = bs::j1(x) * bs::y0(x) - bs::j0(x) * bs::y1(x);
    const double expected = 2.0 / (std::numbers::pi * x);
    ASSERT_NEAR(w / expected, 1.0, 1e-10) << "x=" << x;
  }
}

TEST(Bessel, DerivativesMatchDifferences) {
  for (double x : {0.7, 3.3, 9.1, 25.0}) {
    const double h = 1e-6;
    EXPECT_NEAR(bs::j0_prime(x), (bs::j0(x + h) - bs::j0(x - h)) / (2 * h), 1e-8);
    EXPECT_NEAR(bs::y0_prime(x), (bs::y0(x + h) - bs::y0(x - h)) / (2 * h), 1e-8);
  }
}

TEST(Bessel, FirstZeroOfJ0) {
  wellblock::RootConfig cfg;
  cfg.bracket_lo = 2.0;
  cfg.bracket_hi = 3.0;
  cfg.abs_tol = 1e-15;
  const auto r = wellblock::solve_bracketed([](double x) { return bs::j0(x); }, cfg);
  EXPECT_NEAR(r.root, 2.4048255576957727686, 1e-10);
}

TEST(Bessel, ErrorEstimatesAreSmall) {
  for (double x : {0.3, 14.9, 15.1, 500.0}) {
    EXPECT_LT(bs::j0_eval(x).est_abs_err, 1e-13);
    EXPECT_LT(bs::y1_eval(x).est_abs_err, 1e-12);
  }
}
