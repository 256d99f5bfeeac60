#include "wellblock/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "wellblock/analytic.hpp"
#include "wellblock/mbal.hpp"

namespace wellblock::harness {

using std::numbers::pi;

namespace {

constexpr std::size_t kTailSteps = 3;
constexpr std::size_t kCoarseSamples = 200;

struct Run {
  std::vector<fd::FdField> coarse;  // whole horizon, thinned
  std::vector<fd::FdField> tail;    // last few steps at the native time step
};

// Simulates to t_end keeping ~kCoarseSamples fields, then kTailSteps more steps at full resolution.
Run simulate(const ValidatedProblem& p, const fd::BoundarySpec& b, double q, const fd::FdField& initial,
             double t_end, fd::TimeScheme scheme) {
  const double tau = p.grid().tau();
  const auto steps = static_cast<std::size_t>(std::max<long long>(1, std::llround(t_end / tau)));
  fd::TransientOptions o;
  o.tau = tau;
  o.t_end = static_cast<double>(steps) * tau;
  o.scheme = scheme;
  o.sample_every = std::max<std::size_t>(1, steps / kCoarseSamples);
  Run run;
  run.coarse = fd::fd_transient(p, b, q, initial, o);
  if (run.coarse.back().t < o.t_end * (1.0 - 1e-12)) {
    // The horizon is not a multiple of the thinning; finish it.
    fd::TransientOptions rest = o;
    rest.t_end = o.t_end - run.coarse.back().t;
    rest.sample_every = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(rest.t_end / tau)));
    auto more = fd::fd_transient(p, b, q, run.coarse.back(), rest);
    run.coarse.push_back(more.back());
  }
  fd::TransientOptions t = o;
  t.t_end = static_cast<double>(kTailSteps) * tau;
  t.sample_every = 1;
  run.tail = fd::fd_transient(p, b, q, run.coarse.back(), t);
  return run;
}

double max_abs_residual(const std::vector<MBSample>& samples, const MBCoefficients& c, double delta) {
  double worst = 0.0;
  for (const auto& s : samples) worst = std::max(worst, std::abs(mb_residual(s, c, delta)));
  return worst;
}

double fitted_decay(const std::vector<fd::FdField>& series, bool use_neighbor) {
  std::vector<double> t, y;
  for (const auto& f : series) {
    const double v = use_neighbor ? f.neighbor_pressure() : f.well_pressure();
    if (v > 0.0) {
      t.push_back(f.t);
      y.push_back(std::log(v));
    }
  }
  if (t.size() < 2) throw InsufficientPoints("too few positive samples for a decay fit");
  return -fit_line(t, y).first;
}

RadiusSolution solve_radius(Regime regime, const ValidatedProblem& p, const SolverOptions& solver,
                            const analytic::BdModeRadial* mode) {
  const auto& grid = p.grid();
  if (const auto* slab = std::get_if<Slab1D>(&p.geometry())) {
    switch (regime) {
      case Regime::SteadyState: return r0_ss_1d(grid);
      case Regime::PseudoSteadyState: return r0_pss_1d(grid, *slab, solver);
      case Regime::BoundaryDominated: return r0_bd_1d(p.params(), grid, *slab, grid.tau(), solver);
    }
  }
  const auto& annulus = std::get<RadialAnnulus>(p.geometry());
  switch (regime) {
    case Regime::SteadyState: break;
    case Regime::PseudoSteadyState: return r0_pss_radial(grid, annulus, solver);
    case Regime::BoundaryDominated: return r0_bd_radial(p.params(), grid, annulus, *mode, grid.tau(), solver);
  }
  throw DomainError("regime", "steady state is defined for the slab only");
}

void glue_level(Regime regime, const ValidatedProblem& p, const GlueOptions& opts, const GlueTolerances& tol,
                GlueReport& r) {
  const auto& params = p.params();
  const double d = p.grid().delta();
  const double tau = p.grid().tau();
  const double q = opts.rate;
  const double K = params.conductivity();
  const double c0 = params.storage();
  const bool slab = r.geometry == GeometryKind::Slab1D;
  const auto coeffs = slab ? MBCoefficients::slab(params, d) : MBCoefficients::radial(params, d);
  const auto boundary = fd::BoundarySpec::for_regime(regime, opts.exterior_pressure);

  std::optional<analytic::BdModeRadial> mode;
  if (!slab && regime == Regime::BoundaryDominated) {
    mode = analytic::bd_eigenpair_radial(std::get<RadialAnnulus>(p.geometry()), params);
  }
  const double r0 = opts.r0_override ? *opts.r0_override : solve_radius(regime, p, opts.solver, mode ? &*mode : nullptr).r0;
  r.r0 = r0;

  std::vector<MBSample> analytic_samples;
  bool ok = true;

  if (slab && regime == Regime::SteadyState) {
    const auto prof = analytic::ss_profile_1d(params, std::get<Slab1D>(p.geometry()), q, opts.exterior_pressure);
    const auto field = fd::fd_steady_1d(p, q, opts.exterior_pressure);
    r.fd_p0 = field.well_pressure();
    r.analytic_p0 = prof.pressure(r0);
    r.mb_residual_fd = std::abs(mb_residual(
        MBSample::make(field.well_pressure(), field.neighbor_pressure(), field.well_pressure(), q, tau), coeffs, d));
    analytic_samples.push_back(analytic::sample_ss_1d(prof, r0, d, tau));
    r.discrepancy = std::abs(r.fd_p0 - r.analytic_p0);
    ok = r.discrepancy <= tol.steady_discrepancy;
  } else if (regime == Regime::PseudoSteadyState) {
    const auto initial = fd::initial_field(p, [](double, double) { return 0.0; });
    double volume;
    std::function<double(double)> w;
    if (slab) {
      const auto& g = std::get<Slab1D>(p.geometry());
      volume = g.exterior();
      const auto prof = analytic::pss_profile_1d(params, g, q);
      w = [prof](double x) { return prof.w(x); };
      for (double s : opts.analytic_times) analytic_samples.push_back(analytic::sample_pss_1d(prof, r0, d, s, tau));
    } else {
      const auto& g = std::get<RadialAnnulus>(p.geometry());
      const double side = static_cast<double>(2 * p.grid().blocks() + 1) * d;
      volume = params.thickness() * side * side;
      const auto prof = analytic::pss_profile_radial(params, g, q);
      w = [prof](double x) { return prof.w(x); };
      for (double s : opts.analytic_times) analytic_samples.push_back(analytic::sample_pss_radial(prof, r0, d, s, tau));
    }
    double t_end = opts.t_end;
    if (t_end <= 0.0) {
      const double length = slab ? exterior_of(p.geometry()) : static_cast<double>(2 * p.grid().blocks() + 1) * d;
      t_end = (slab ? 5.0 : 2.0) * length * length * c0 / K;
    }
    const auto run = simulate(p, boundary, q, initial, t_end, opts.scheme);
    const auto& last = run.tail.back();
    const auto& prev = run.tail[run.tail.size() - 2];
    r.fd_p0 = last.well_pressure();
    // Anchor the analytic profile at the simulated neighbour pressure.
    r.analytic_p0 = last.neighbor_pressure() - (w(d) - w(r0));
    r.discrepancy = std::abs(r.fd_p0 - r.analytic_p0);
    r.fd_drift = (last.well_pressure() - prev.well_pressure()) / (last.t - prev.t);
    r.expected_drift = -q / (c0 * volume);
    r.mb_residual_fd = max_abs_residual(fd::extract_mb_samples(run.tail), coeffs, d);
    ok = std::abs(r.fd_drift - r.expected_drift) <= tol.drift_relative * std::abs(r.expected_drift);
  } else if (regime == Regime::BoundaryDominated) {
    fd::FdField initial;
    std::function<double(double)> shape;
    if (slab) {
      const auto m = analytic::bd_mode_1d(params, std::get<Slab1D>(p.geometry()));
      initial = fd::initial_field(p, [m](double x, double) { return m.shape(x); });
      shape = [m](double x) { return m.shape(x); };
      r.analytic_decay_rate = m.decay_rate;
      for (double s : opts.analytic_times) analytic_samples.push_back(analytic::sample_bd_1d(m, r0, d, s, tau));
    } else {
      const auto m = *mode;
      initial = fd::initial_field(p, [m](double x, double y) {
        return m.phi0(std::clamp(std::hypot(x, y), m.well_radius, m.exterior));
      });
      shape = [m](double x) { return m.phi0(x); };
      r.analytic_decay_rate = m.decay_rate;
      for (double s : opts.analytic_times) analytic_samples.push_back(analytic::sample_bd_radial(m, r0, d, s, tau));
    }
    const double t_end = opts.t_end > 0.0 ? opts.t_end : 1.0 / r.analytic_decay_rate;
    const auto run = simulate(p, boundary, q, initial, t_end, opts.scheme);
    const auto& last = run.tail.back();
    r.fd_p0 = last.well_pressure();
    r.analytic_p0 = last.neighbor_pressure() * shape(r0) / shape(d);
    r.discrepancy = std::abs(r.fd_p0 - r.analytic_p0);
    r.fd_decay_rate = fitted_decay(run.coarse, !slab);
    r.mb_residual_fd = max_abs_residual(fd::extract_mb_samples(run.tail), coeffs, d);
    // The square grid only approximates the annulus, so its decay rate is informative there.
    ok = !slab || std::abs(r.fd_decay_rate - r.analytic_decay_rate) <= tol.decay_relative * r.analytic_decay_rate;
  } else {
    throw DomainError("regime", "steady state is defined for the slab only");
  }

  r.mb_residual_analytic = max_abs_residual(analytic_samples, coeffs, d);
  r.pass = ok && r.mb_residual_analytic <= tol.mb_analytic && r.mb_residual_fd <= tol.mb_fd;
}

bool strictly_monotone(const std::vector<double>& v) {
  if (v.size() < 2) return true;
  bool up = true;
  bool down = true;
  for (std::size_t i = 1; i < v.size(); ++i) {
    up = up && v[i] > v[i - 1];
    down = down && v[i] < v[i - 1];
  }
  return up || down;
}

SweepRow sweep_row(const SweepSpec& spec, double value) {
  SweepRow row;
  row.value = value;
  ProblemInputs in = spec.fixed;
  switch (spec.parameter) {
    case SweepParameter::Exterior: in.exterior = value; break;
    case SweepParameter::Delta: in.delta = value; break;
    case SweepParameter::WellRadius: in.well_radius = value; break;
    case SweepParameter::Tau: in.tau = value; break;
  }
  try {
    const auto params = FluidRockParams::make(in.conductivity, in.porosity, in.compressibility, in.thickness);
    const bool slab = in.geometry == GeometryKind::Slab1D;
    const auto blocks = slab ? static_cast<std::size_t>(std::max<long long>(1, std::llround(in.exterior / in.delta)))
                             : std::max<std::size_t>(in.blocks, 1);
    const auto grid = GridSpec::make(in.delta, blocks, in.tau);
    RadiusSolution sol;
    if (slab) {
      const auto geom = Slab1D::make(in.exterior);
      row.limit = in.delta / 2.0;
      switch (spec.regime) {
        case Regime::SteadyState: sol = r0_ss_1d(grid); break;
        case Regime::PseudoSteadyState: sol = r0_pss_1d(grid, geom, spec.solver); break;
        case Regime::BoundaryDominated: sol = r0_bd_1d(params, grid, geom, in.tau, spec.solver); break;
      }
    } else {
      const auto geom = RadialAnnulus::make(in.well_radius, in.exterior);
      row.limit = in.delta * std::exp(-pi / 2.0);
      row.peaceman = kPeacemanFactor * in.delta;
      switch (spec.regime) {
        case Regime::SteadyState: throw DomainError("regime", "steady state is defined for the slab only");
        case Regime::PseudoSteadyState: sol = r0_pss_radial(grid, geom, spec.solver); break;
        case Regime::BoundaryDominated: {
          const auto mode = analytic::bd_eigenpair_radial(geom, params);
          sol = r0_bd_radial(params, grid, geom, mode, in.tau, spec.solver);
          break;
        }
      }
    }
    row.r0 = sol.r0;
    row.residual = sol.residual;
    row.iterations = sol.iterations;
    row.approximation = sol.approximation;
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::pair<double, double> fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw InsufficientPoints("a line fit needs at least two (x, y) pairs");
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw InsufficientPoints("abscissae are all equal");
  const double b = sxy / sxx;
  return {b, my - b * mx};
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, std::size_t workers) {
  if (n == 0) return;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<GlueReport> run_glue_study(Regime regime, const ValidatedProblem& problem,
                                       const std::vector<GridSpec>& ladder, const GlueOptions& opts,
                                       const GlueTolerances& tol) {
  std::vector<GlueReport> reports(ladder.size());
  parallel_for(ladder.size(), [&](std::size_t i) {
    auto& r = reports[i];
    r.regime = regime;
    r.geometry = kind_of(problem.geometry());
    r.level = i;
    r.delta = ladder[i].delta();
    try {
      const auto level = validate_problem(problem.params(), problem.geometry(), ladder[i]);
      glue_level(regime, level, opts, tol, r);
    } catch (const Error& e) {
      r.error = e.what();
      r.pass = false;
    }
  });
  return reports;
}

std::string to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::Exterior: return "exterior";
    case SweepParameter::Delta: return "delta";
    case SweepParameter::WellRadius: return "well_radius";
    case SweepParameter::Tau: return "tau";
  }
  return "?";
}

SweepParameter sweep_parameter_from_string(const std::string& s) {
  if (s == "exterior") return SweepParameter::Exterior;
  if (s == "delta") return SweepParameter::Delta;
  if (s == "well_radius") return SweepParameter::WellRadius;
  if (s == "tau") return SweepParameter::Tau;
  throw DomainError("parameter", "one of exterior|delta|well_radius|tau", s);
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, std::size_t workers) {
  if (spec.values.empty()) throw DomainError("values", "nonempty");
  if (!strictly_monotone(spec.values)) throw DomainError("values", "strictly monotone");
  std::vector<SweepRow> rows(spec.values.size());
  parallel_for(rows.size(), [&](std::size_t i) { rows[i] = sweep_row(spec, spec.values[i]); }, workers);
  return rows;
}

LimitReport limit_diagnostics(Regime regime, const ProblemInputs& family, const std::vector<double>& exteriors,
                              const SolverOptions& solver) {
  if (exteriors.size() < 4) throw InsufficientPoints("need at least 4 exterior radii");
  const auto [lo, hi] = std::minmax_element(exteriors.begin(), exteriors.end());
  if (std::log10(*hi / *lo) < 2.0 - 1e-12) throw InsufficientPoints("exterior radii must span two decades");

  SweepSpec spec;
  spec.regime = regime;
  spec.parameter = SweepParameter::Exterior;
  spec.values = exteriors;
  spec.fixed = family;
  spec.solver = solver;
  const auto rows = run_sweep(spec);

  LimitReport rep;
  std::vector<double> lx, ly;
  for (const auto& row : rows) {
    if (!row.error.empty()) throw InsufficientPoints("radius failed at r_e=" + std::to_string(row.value) + ": " + row.error);
    rep.limit = row.limit;
    const double err = std::abs(row.r0 - row.limit);
    rep.exterior.push_back(row.value);
    rep.lambda.push_back(pi / (2.0 * row.value));
    rep.r0.push_back(row.r0);
    rep.error.push_back(err);
    if (!(err > 0.0)) throw InsufficientPoints("radius equals its limit; the order is undefined");
    lx.push_back(std::log(rep.lambda.back()));
    ly.push_back(std::log(err));
  }
  std::tie(rep.slope, rep.intercept) = fit_line(lx, ly);
  return rep;
}

}  // namespace wellblock::harness
