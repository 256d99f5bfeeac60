#include "wellblock/radius.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "wellblock/roots.hpp"

namespace wellblock {

using std::numbers::pi;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kFallbackPoints = 64;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void require_interior(double delta, double re) {
  if (!(delta < re)) throw DomainError("delta", "delta<r_e", fmt(delta) + ">=" + fmt(re));
}

struct Bracketed {
  RootResult result;
  double tolerance;
};

// Solve on the primary bracket; if it does not straddle a root, fall back to a
// log-spaced scan of [scan_lo, scan_hi] before giving up.
Bracketed solve_with_fallback(const ScalarFn& f, const ScalarFn& df, double lo, double hi, double scan_lo,
                              double scan_hi, const SolverOptions& opts, const std::string& what) {
  RootConfig cfg;
  cfg.abs_tol = opts.abs_tol;
  cfg.max_iter = opts.max_iter;
  cfg.bracket_lo = lo;
  cfg.bracket_hi = hi;
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  ScanTrace trace{{lo, f_lo}, {hi, f_hi}};
  const bool straddles = (f_lo < 0.0 && f_hi > 0.0) || (f_lo > 0.0 && f_hi < 0.0);
  if (!straddles) {
    const auto found = scan_log(f, scan_lo, scan_hi, kFallbackPoints, trace);
    if (!found) throw NoSignChange(what + ": no sign change on the bracket or the fallback scan", trace);
    if (found->first == found->second) return {{found->first, 0.0, 0, SolveMethod::Bisection}, opts.abs_tol};
    cfg.bracket_lo = found->first;
    cfg.bracket_hi = found->second;
  }
  return {solve_bracketed(f, cfg, df), opts.abs_tol};
}

RadiusSolution make_solution(Regime regime, Geometry geom, double delta, const RootResult& r, double tol) {
  RadiusSolution s;
  s.regime = regime;
  s.geometry = std::move(geom);
  s.delta = delta;
  s.r0 = r.root;
  s.residual = r.f_root;
  s.tolerance = tol;
  s.iterations = r.iterations;
  s.method = r.method;
  return s;
}

}  // namespace

std::string to_string(Formulation f) { return f == Formulation::Published ? "published" : "material_balance"; }

Formulation formulation_from_string(const std::string& s) {
  if (s == "published") return Formulation::Published;
  if (s == "material_balance") return Formulation::MaterialBalance;
  throw DomainError("formulation", "one of published|material_balance", s);
}

namespace equations {

double pss_1d_published(double r, double delta, double re, double c3) {
  return r * (r + 2.0 * re) - (re * delta + (1.0 + c3) * delta * delta);
}

double pss_1d_balance(double r, double delta, double re) { return r * (r - 2.0 * re) + re * delta; }

double bd_1d_published(double r, double delta, double re, double conductivity, double tau) {
  const double l = pi / (2.0 * re);
  const double s = std::sin(l * r);
  return s - std::sin(l * delta) + 0.5 * l * delta - s / (2.0 * conductivity) * std::expm1(-l * l * tau) / tau;
}

double bd_1d_balance(double r, double delta, double re, const FluidRockParams& params, double tau) {
  const double K = params.conductivity();
  const double c0 = params.storage();
  const double l = pi / (2.0 * re);
  const double s = std::sin(l * r);
  const double storage = c0 * delta * delta / (2.0 * K) * std::expm1(-K * l * l * tau / c0) / tau;
  return s - std::sin(l * delta) + 0.5 * l * delta + storage * s;
}

double bd_1d_approximation(double delta, double re, double conductivity) {
  return 0.5 * delta / (1.0 + pi * pi * delta / (8.0 * conductivity * re * re));
}

double pss_radial(double r, double delta, const RadialAnnulus& geom) {
  const double re = geom.exterior();
  const double rw = geom.well_radius();
  return -pi + (r * r + pi * rw * rw) / (re * re) + 2.0 * std::log(delta / r);
}

double bd_radial_published(double r, double delta, const analytic::BdModeRadial& mode) {
  return mode.phi0(r) - mode.phi0(delta) + 2.0 / pi * std::log(delta / r);
}

double bd_radial_balance(double r, double delta, const analytic::BdModeRadial& mode, const FluidRockParams& params,
                         double tau) {
  const double K = params.conductivity();
  const double c0 = params.storage();
  const double well_term = 0.5 * pi * mode.well_radius * mode.phi0_prime(mode.well_radius);
  const double storage = c0 * delta * delta / (4.0 * K) * std::expm1(-K * mode.lambda0 * tau / c0) / tau;
  const double phi_r = mode.phi0(r);
  return phi_r - mode.phi0(delta) + well_term + storage * phi_r;
}

}  // namespace equations

RadiusSolution r0_ss_1d(const GridSpec& grid) {
  RadiusSolution s;
  s.regime = Regime::SteadyState;
  s.delta = grid.delta();
  s.geometry = Slab1D::make(static_cast<double>(grid.blocks()) * grid.delta());
  s.r0 = grid.delta() / 2.0;
  s.residual = 0.0;
  s.tolerance = 0.0;
  s.method = SolveMethod::ClosedForm;
  return s;
}

RadiusSolution r0_pss_1d(const GridSpec& grid, const Slab1D& geom, const SolverOptions& opts) {
  const double d = grid.delta();
  const double re = geom.exterior();
  require_interior(d, re);
  RadiusSolution s;
  s.regime = Regime::PseudoSteadyState;
  s.geometry = geom;
  s.delta = d;
  s.method = SolveMethod::ClosedForm;
  // Cancellation-free forms of the positive (resp. smaller) quadratic root.
  if (opts.formulation == Formulation::Published) {
    const double c = re * d + (1.0 + opts.c3) * d * d;
    if (!(c > 0.0)) throw DomainError("c3", "r_e*delta+(1+c3)*delta^2>0", fmt(opts.c3));
    s.r0 = c / (re + std::sqrt(re * re + c));
    s.residual = equations::pss_1d_published(s.r0, d, re, opts.c3);
    s.tolerance = std::max(opts.abs_tol, 8.0 * kEps * (c + 2.0 * re * s.r0));
  } else {
    s.r0 = re * d / (re + std::sqrt(re * (re - d)));
    s.residual = equations::pss_1d_balance(s.r0, d, re);
    s.tolerance = std::max(opts.abs_tol, 8.0 * kEps * (re * d + 2.0 * re * s.r0));
  }
  return s;
}

RadiusSolution r0_bd_1d(const FluidRockParams& params, const GridSpec& grid, const Slab1D& geom, double tau,
                        const SolverOptions& opts) {
  const double d = grid.delta();
  const double re = geom.exterior();
  require_interior(d, re);
  if (!(tau > 0.0)) throw DomainError("tau", "tau>0", fmt(tau));
  const double K = params.conductivity();
  const double l = pi / (2.0 * re);

  ScalarFn f;
  double gain;
  if (opts.formulation == Formulation::Published) {
    f = [=](double r) { return equations::bd_1d_published(r, d, re, K, tau); };
    gain = -std::expm1(-l * l * tau) / tau / (2.0 * K);
  } else {
    f = [=](double r) { return equations::bd_1d_balance(r, d, re, params, tau); };
    const double c0 = params.storage();
    gain = c0 * d * d / (2.0 * K) * std::expm1(-K * l * l * tau / c0) / tau;
  }
  ScalarFn df = [=](double r) { return l * std::cos(l * r) * (1.0 + gain); };

  const double lo = 1e-12 * d;
  const auto solved = solve_with_fallback(f, df, lo, d, lo, d, opts, "boundary-dominated slab radius");
  auto s = make_solution(Regime::BoundaryDominated, geom, d, solved.result, solved.tolerance);
  s.approximation = equations::bd_1d_approximation(d, re, K);
  return s;
}

RadiusSolution r0_pss_radial(const GridSpec& grid, const RadialAnnulus& geom, const SolverOptions& opts) {
  const double d = grid.delta();
  const double rw = geom.well_radius();
  const double re = geom.exterior();
  require_interior(d, re);
  if (!(d > rw)) throw DomainError("delta", "delta>r_w", fmt(d) + "<=" + fmt(rw));

  ScalarFn f = [=](double r) { return equations::pss_radial(r, d, geom); };
  ScalarFn df = [=](double r) { return 2.0 * r / (re * re) - 2.0 / r; };
  const double lo = 0.5 * d * std::exp(-pi / 2.0);
  const auto solved = solve_with_fallback(f, df, lo, d, std::min(lo, rw) * 1e-3, d, opts,
                                          "pseudo-steady radial radius");
  if (solved.result.root <= rw) throw RootOutsidePhysicalRange(solved.result.root, rw, re);
  auto s = make_solution(Regime::PseudoSteadyState, geom, d, solved.result, solved.tolerance);
  s.approximation = d * std::exp(-pi / 2.0);
  return s;
}

RadiusSolution r0_bd_radial(const FluidRockParams& params, const GridSpec& grid, const RadialAnnulus& geom,
                            const analytic::BdModeRadial& mode, double tau, const SolverOptions& opts) {
  const double d = grid.delta();
  const double rw = geom.well_radius();
  const double re = geom.exterior();
  require_interior(d, re);
  if (!(d > rw)) throw DomainError("delta", "delta>r_w", fmt(d) + "<=" + fmt(rw));
  if (!(tau > 0.0)) throw DomainError("tau", "tau>0", fmt(tau));

  ScalarFn f;
  ScalarFn df;
  if (opts.formulation == Formulation::Published) {
    f = [=](double r) { return equations::bd_radial_published(r, d, mode); };
    df = [=](double r) { return mode.phi0_prime(r) - 2.0 / (pi * r); };
  } else {
    const double K = params.conductivity();
    const double c0 = params.storage();
    const double gain = c0 * d * d / (4.0 * K) * std::expm1(-K * mode.lambda0 * tau / c0) / tau;
    f = [=](double r) { return equations::bd_radial_balance(r, d, mode, params, tau); };
    df = [=](double r) { return mode.phi0_prime(r) * (1.0 + gain); };
  }
  // The published equation vanishes trivially at R = D; stay clear of it.
  const double hi = d * (1.0 - 1e-8);
  SolverOptions o = opts;
  o.abs_tol = std::max(opts.abs_tol, 1e-10);
  const auto solved = solve_with_fallback(f, df, rw, hi, rw, hi, o, "boundary-dominated radial radius");
  return make_solution(Regime::BoundaryDominated, geom, d, solved.result, solved.tolerance);
}

}  // namespace wellblock
