#pragma once

// Cylinder functions of order 0 and 1 in double precision.
//
// Below kSeriesSeam the ascending power series is summed in long double;
// above it the Hankel asymptotic expansion is summed up to its smallest
// term. Absolute error is below 1e-12 on [1e-6, 1e4].

namespace wellblock::bessel {

struct BesselEval {
  double x = 0.0;
  double value = 0.0;
  double est_abs_err = 0.0;
};

inline constexpr double kSeriesSeam = 15.0;

double j0(double x);
double j1(double x);
double y0(double x);
double y1(double x);

/// J0'(x) = -J1(x).
inline double j0_prime(double x) { return -j1(x); }
/// Y0'(x) = -Y1(x).
inline double y0_prime(double x) { return -y1(x); }

BesselEval j0_eval(double x);
BesselEval j1_eval(double x);
BesselEval y0_eval(double x);
BesselEval y1_eval(double x);

namespace detail {
// Branch evaluators, exposed so the seam can be tested from both sides.
BesselEval series(int order, bool second_kind, double x);
BesselEval asymptotic(int order, bool second_kind, double x);
}  // namespace detail

}  // namespace wellblock::bessel
