#pragma once

// Experiment orchestration: grid-ladder gluing studies, parameter sweeps and
// large-domain limit regressions.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wellblock/fdsim.hpp"
#include "wellblock/radius.hpp"
#include "wellblock/types.hpp"

namespace wellblock::harness {

struct GlueOptions {
  double rate = 1.0;
  double exterior_pressure = 0.0;
  SolverOptions solver;
  fd::TimeScheme scheme = fd::TimeScheme::Implicit;
  /// Simulated horizon; 0 picks a regime default (5 diffusion times for PSS, one e-folding for BD).
  double t_end = 0.0;
  /// Replace the solved radius, e.g. to demonstrate a failing glue.
  std::optional<double> r0_override;
  /// Sample times (relative to 0) of the analytic balance check.
  std::vector<double> analytic_times{0.0, 1.0, 7.0};
};

struct GlueReport {
  Regime regime = Regime::SteadyState;
  GeometryKind geometry = GeometryKind::Slab1D;
  std::size_t level = 0;
  double delta = 0.0;
  double r0 = 0.0;
  double fd_p0 = 0.0;
  double analytic_p0 = 0.0;
  /// |fd_p0 - analytic_p0|.
  double discrepancy = 0.0;
  /// Largest |balance residual| of analytic samples at r0 over the analytic times.
  double mb_residual_analytic = 0.0;
  /// Largest |balance residual| of the simulated samples after transients.
  double mb_residual_fd = 0.0;
  /// Boundary-dominated runs: fitted and analytic decay rates; otherwise 0.
  double fd_decay_rate = 0.0;
  double analytic_decay_rate = 0.0;
  /// Pseudo-steady runs: late-time drift of p0 and its expected value -q/(C0 V); otherwise 0.
  double fd_drift = 0.0;
  double expected_drift = 0.0;
  bool pass = false;
  /// Set when the level failed; the numeric fields are then unspecified.
  std::string error;
};

/// Tolerances applied to each report's pass flag.
struct GlueTolerances {
  double mb_analytic = 1e-9;
  double mb_fd = 5e-3;
  double steady_discrepancy = 1e-10;
  double decay_relative = 2e-2;
  double drift_relative = 1e-3;
};

/// One report per grid; errors are recorded per level and never abort the ladder.
std::vector<GlueReport> run_glue_study(Regime regime, const ValidatedProblem& problem,
                                       const std::vector<GridSpec>& ladder, const GlueOptions& opts = {},
                                       const GlueTolerances& tol = {});

enum class SweepParameter { Exterior, Delta, WellRadius, Tau };

std::string to_string(SweepParameter p);
SweepParameter sweep_parameter_from_string(const std::string& s);

struct SweepSpec {
  Regime regime = Regime::PseudoSteadyState;
  SweepParameter parameter = SweepParameter::Exterior;
  std::vector<double> values;
  /// Fixed parameters; the swept one is overwritten per row.
  ProblemInputs fixed;
  SolverOptions solver;
};

struct SweepRow {
  double value = 0.0;
  double r0 = 0.0;
  double residual = 0.0;
  int iterations = 0;
  std::optional<double> approximation;
  /// Reference limit of the family: D/2 (slab) or D exp(-pi/2) (radial).
  double limit = 0.0;
  /// Peaceman's 0.1982 D, radial rows only.
  std::optional<double> peaceman;
  std::string error;
};

/// Throws DomainError when values is empty or not strictly monotone.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, std::size_t workers = 0);

struct LimitReport {
  std::vector<double> exterior;
  std::vector<double> lambda;
  std::vector<double> r0;
  std::vector<double> error;
  double limit = 0.0;
  /// Least-squares slope and intercept of log|r0 - limit| against log lambda.
  double slope = 0.0;
  double intercept = 0.0;
};

/// Throws InsufficientPoints for fewer than 4 points, less than two decades, or r0 equal to the limit.
LimitReport limit_diagnostics(Regime regime, const ProblemInputs& family, const std::vector<double>& exteriors,
                              const SolverOptions& solver = {});

/// Least-squares fit y = a + b x; returns {b, a}.
std::pair<double, double> fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Applies fn to 0..n-1 on a bounded pool; results are kept in index order.
/// workers = 0 uses the hardware concurrency.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, std::size_t workers = 0);

}  // namespace wellblock::harness
