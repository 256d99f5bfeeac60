#include "wellblock/analytic.hpp"

#include <cmath>
#include <numbers>

#include "wellblock/bessel.hpp"
#include "wellblock/roots.hpp"

namespace wellblock::analytic {

using std::numbers::pi;

double BdMode1D::shape(double x) const { return std::sin(lambda * x); }
double BdMode1D::envelope(double t) const { return std::exp(-decay_rate * t); }

double PssProfileRadial::flux(double r) const { return 2.0 * pi * r * velocity(r); }

double PssProfileRadial::w(double r) const { return (-0.25 * c * r * r + c1 * std::log(r) + c2) / conductivity; }

double BdModeRadial::phi0(double r) const { return a * bessel::y0(k * r) - b * bessel::j0(k * r); }

double BdModeRadial::phi0_prime(double r) const { return k * (-a * bessel::y1(k * r) + b * bessel::j1(k * r)); }

double BdModeRadial::envelope(double t) const { return std::exp(-decay_rate * t); }

double BdModeRadial::rate(double t) const {
  return 2.0 * pi * well_radius * thickness * conductivity * phi0_prime(well_radius) * envelope(t);
}

SsProfile1D ss_profile_1d(const FluidRockParams& params, const Slab1D& geom, double q, double p_e) {
  const double slope = q / params.conductivity();
  return {slope, p_e - slope * geom.exterior(), p_e, q};
}

PssProfile1D pss_profile_1d(const FluidRockParams& params, const Slab1D& geom, double q) {
  const double K = params.conductivity();
  const double re = geom.exterior();
  return {-q / (2.0 * K * re), q / K, -q / (params.storage() * re), q};
}

BdMode1D bd_mode_1d(const FluidRockParams& params, const Slab1D& geom) {
  const double lambda = pi / (2.0 * geom.exterior());
  return {lambda, params.conductivity() * lambda * lambda / params.storage(), params.conductivity()};
}

PssProfileRadial pss_profile_radial(const FluidRockParams& params, const RadialAnnulus& geom, double q) {
  PssProfileRadial p;
  const double rw = geom.well_radius();
  const double re = geom.exterior();
  const double q_tilde = q / params.thickness();
  p.area = geom.area();
  p.c = q_tilde / p.area;
  p.c1 = 0.5 * p.c * re * re;
  p.c2 = 0.25 * p.c * rw * rw - p.c1 * std::log(rw);
  p.drift = -q_tilde / (params.storage() * p.area);
  p.rate = q;
  p.conductivity = params.conductivity();
  p.well_radius = rw;
  p.exterior = re;
  return p;
}

double eigen_determinant(const RadialAnnulus& geom, double k) {
  const double kw = k * geom.well_radius();
  const double ke = k * geom.exterior();
  return -bessel::y0(kw) * bessel::j1(ke) + bessel::y1(ke) * bessel::j0(kw);
}

BdModeRadial bd_eigenpair_radial(const RadialAnnulus& geom, const FluidRockParams& params, double k_max_times_re) {
  const double re = geom.exterior();
  const double k_max = k_max_times_re / re;
  constexpr int kPoints = 4096;
  auto f = [&](double k) { return eigen_determinant(geom, k); };

  ScanTrace trace;
  const auto bracket = scan_linear(f, k_max / kPoints, k_max, kPoints, trace);
  if (!bracket) throw EigenBracketError("no sign change of the eigenvalue determinant on (0, k_max]");

  double k = bracket->first;
  if (bracket->first != bracket->second) {
    RootConfig cfg;
    cfg.bracket_lo = bracket->first;
    cfg.bracket_hi = bracket->second;
    cfg.abs_tol = 1e-14;
    k = solve_bracketed(f, cfg).root;
  }

  BdModeRadial m;
  m.k = k;
  m.lambda0 = k * k;
  m.a = bessel::j0(k * geom.well_radius());
  m.b = bessel::y0(k * geom.well_radius());
  m.decay_rate = params.conductivity() * m.lambda0 / params.storage();
  m.conductivity = params.conductivity();
  m.thickness = params.thickness();
  m.well_radius = geom.well_radius();
  m.exterior = re;
  return m;
}

double eval_phi0(const BdModeRadial& mode, double r) {
  if (!(r >= mode.well_radius && r <= mode.exterior)) {
    throw DomainError("r", "r_w<=r<=r_e", std::to_string(r));
  }
  return mode.phi0(r);
}

MBSample sample_ss_1d(const SsProfile1D& p, double r0, double delta, double tau) {
  const double p0 = p.pressure(r0);
  return MBSample::make(p0, p.pressure(delta), p0, p.rate, tau);
}

MBSample sample_pss_1d(const PssProfile1D& p, double r0, double delta, double s, double tau) {
  return MBSample::make(p.pressure(r0, s), p.pressure(delta, s), p.pressure(r0, s + tau), p.rate, tau);
}

MBSample sample_bd_1d(const BdMode1D& m, double r0, double delta, double s, double tau) {
  return MBSample::make(m.pressure(r0, s), m.pressure(delta, s), m.pressure(r0, s + tau), m.rate(s), tau);
}

MBSample sample_pss_radial(const PssProfileRadial& p, double r0, double delta, double s, double tau) {
  return MBSample::make(p.pressure(r0, s), p.pressure(delta, s), p.pressure(r0, s + tau), p.rate, tau);
}

MBSample sample_bd_radial(const BdModeRadial& m, double r0, double delta, double s, double tau) {
  return MBSample::make(m.pressure(r0, s), m.pressure(delta, s), m.pressure(r0, s + tau), m.rate(s), tau);
}

}  // namespace wellblock::analytic
