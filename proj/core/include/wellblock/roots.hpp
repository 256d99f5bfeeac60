#pragma once

// Safeguarded one-dimensional root finding.

#include <functional>
#include <optional>
#include <utility>

#include "wellblock/errors.hpp"
#include "wellblock/types.hpp"

namespace wellblock {

struct RootConfig {
  double bracket_lo = 0.0;
  double bracket_hi = 1.0;
  /// Residual tolerance: a point with |f| <= abs_tol and a settled step is accepted.
  double abs_tol = 1e-12;
  /// Step tolerance; 0 means "a few ulps of the current iterate".
  double x_tol = 0.0;
  int max_iter = 200;
};

struct RootResult {
  double root = 0.0;
  double f_root = 0.0;
  int iterations = 0;
  SolveMethod method = SolveMethod::Bisection;
};

using ScalarFn = std::function<double(double)>;

/// Bisection with an accelerating step (Newton when df is given, secant otherwise).
/// The accelerated step is taken only when it lands strictly inside the current bracket.
/// Throws NoSignChange, MaxIterExceeded, NonFiniteDetected or DomainError (bad config).
RootResult solve_bracketed(const ScalarFn& f, const RootConfig& cfg, const ScalarFn& df = {});

/// First sign change among `points` log-spaced samples on [lo, hi] (lo > 0).
/// Every sample is appended to `trace`.
std::optional<std::pair<double, double>> scan_log(const ScalarFn& f, double lo, double hi, int points,
                                                  ScanTrace& trace);

/// First sign change among `points` equally spaced samples on [lo, hi].
std::optional<std::pair<double, double>> scan_linear(const ScalarFn& f, double lo, double hi, int points,
                                                     ScanTrace& trace);

}  // namespace wellblock
