#pragma once

// Closed-form solutions of the near-well boundary-value problems.
//
// All profiles use the production-positive rate convention of types.hpp and
// the storage-weighted diffusion equation  C0 dp/dt = K lap(p).

#include "wellblock/types.hpp"

namespace wellblock::analytic {

/// Steady state in the slab: p(x) = A x + B with p(r_e) = p_e and K p'(0) = q.
struct SsProfile1D {
  double slope = 0.0;
  double intercept = 0.0;
  double exterior_pressure = 0.0;
  double rate = 0.0;

  double pressure(double x) const { return slope * x + intercept; }
};

/// Pseudo-steady state in the slab: p(x, t) = A x^2 + B x + A0 t, with w(0) = 0 and w'(r_e) = 0.
struct PssProfile1D {
  double quad = 0.0;
  double lin = 0.0;
  double drift = 0.0;
  double rate = 0.0;

  double w(double x) const { return (quad * x + lin) * x; }
  double pressure(double x, double t) const { return w(x) + drift * t; }
};

/// First decaying mode of the slab: u(x, t) = exp(-decay_rate t) sin(lambda x).
struct BdMode1D {
  double lambda = 0.0;
  /// K lambda^2 / C0.
  double decay_rate = 0.0;
  double conductivity = 1.0;

  double shape(double x) const;
  double envelope(double t) const;
  double pressure(double x, double t) const { return envelope(t) * shape(x); }
  /// Production rate through the gallery, K u_x(0, t).
  double rate(double t) const { return conductivity * lambda * envelope(t); }
};

/// Pseudo-steady state in the annulus. v(r) is the Darcy speed towards the well.
struct PssProfileRadial {
  double c = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double area = 0.0;
  /// dp/dt = -q/(h C0 |U|).
  double drift = 0.0;
  double rate = 0.0;
  double conductivity = 1.0;
  double well_radius = 0.0;
  double exterior = 0.0;

  double velocity(double r) const { return -0.5 * c * r + c1 / r; }
  /// Flux through the circle of radius r.
  double flux(double r) const;
  double w(double r) const;
  double pressure(double r, double t) const { return w(r) + drift * t; }
};

/// First mode of the annulus: phi0(r) = a Y0(k r) - b J0(k r), k = sqrt(lambda0),
/// phi0(r_w) = 0, phi0'(r_e) = 0.
struct BdModeRadial {
  double lambda0 = 0.0;
  double k = 0.0;
  double a = 0.0;
  double b = 0.0;
  /// K lambda0 / C0.
  double decay_rate = 0.0;
  double conductivity = 1.0;
  double thickness = 1.0;
  double well_radius = 0.0;
  double exterior = 0.0;

  /// Unchecked evaluation; see eval_phi0 for the domain-checked form.
  double phi0(double r) const;
  double phi0_prime(double r) const;
  double envelope(double t) const;
  double pressure(double r, double t) const { return envelope(t) * phi0(r); }
  /// Production rate through the wellbore, 2 pi r_w h K phi0'(r_w) e(t).
  double rate(double t) const;
};

SsProfile1D ss_profile_1d(const FluidRockParams& params, const Slab1D& geom, double q, double p_e);
PssProfile1D pss_profile_1d(const FluidRockParams& params, const Slab1D& geom, double q);
BdMode1D bd_mode_1d(const FluidRockParams& params, const Slab1D& geom);
PssProfileRadial pss_profile_radial(const FluidRockParams& params, const RadialAnnulus& geom, double q);

/// Determinant whose smallest positive root k gives lambda0 = k^2:
/// F(k) = Y0(k r_w) J0'(k r_e) - Y0'(k r_e) J0(k r_w).
double eigen_determinant(const RadialAnnulus& geom, double k);

/// Scans k over (0, k_max] (k_max r_e = 40 by default) and refines the first sign change.
/// Throws EigenBracketError when no sign change is found.
BdModeRadial bd_eigenpair_radial(const RadialAnnulus& geom, const FluidRockParams& params = {},
                                 double k_max_times_re = 40.0);

/// phi0(r) for r in [r_w, r_e]; DomainError outside.
double eval_phi0(const BdModeRadial& mode, double r);

/// Material-balance sample of each analytic solution, with the well block
/// represented at radius r0 and its neighbour at delta, starting at time s.
MBSample sample_ss_1d(const SsProfile1D& p, double r0, double delta, double tau);
MBSample sample_pss_1d(const PssProfile1D& p, double r0, double delta, double s, double tau);
MBSample sample_bd_1d(const BdMode1D& m, double r0, double delta, double s, double tau);
MBSample sample_pss_radial(const PssProfileRadial& p, double r0, double delta, double s, double tau);
MBSample sample_bd_radial(const BdModeRadial& m, double r0, double delta, double s, double tau);

}  // namespace wellblock::analytic
