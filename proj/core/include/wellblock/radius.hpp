#pragma once

// Equivalent well-block radius R0 for each flow regime and geometry.
//
// Two formulations are offered for the time-dependent regimes:
//   Published        - the radius equations exactly as printed in the source derivation;
//   MaterialBalance  - equations re-derived by substituting the analytic solution into
//                      the block material balance (see mbal.hpp) under the
//                      production-positive convention. Their roots make the balance
//                      residual vanish identically in time.
// For steady state and the radial pseudo-steady state the two coincide.

#include "wellblock/analytic.hpp"
#include "wellblock/types.hpp"

namespace wellblock {

enum class Formulation { Published, MaterialBalance };

std::string to_string(Formulation f);
Formulation formulation_from_string(const std::string& s);

struct SolverOptions {
  double abs_tol = 1e-12;
  int max_iter = 200;
  Formulation formulation = Formulation::Published;
  /// Compressibility constant of the slab pseudo-steady equation; 0 in the simple case.
  double c3 = 0.0;
};

/// Residuals of the defining equations; a root of each is the corresponding R0.
namespace equations {

/// R^2 + 2 r_e R - (r_e D + (1 + c3) D^2).
double pss_1d_published(double r, double delta, double re, double c3 = 0.0);
/// R^2 - 2 r_e R + r_e D.
double pss_1d_balance(double r, double delta, double re);

/// sin(lR) - sin(lD) + lD/2 - sin(lR)/(2K) * (exp(-l^2 tau) - 1)/tau, l = pi/(2 r_e).
double bd_1d_published(double r, double delta, double re, double conductivity, double tau);
/// sin(lR) - sin(lD) + lD/2 + C0 D^2/(2K) * sin(lR) * (exp(-K l^2 tau/C0) - 1)/tau.
double bd_1d_balance(double r, double delta, double re, const FluidRockParams& params, double tau);
/// (D/2) / (1 + pi^2 D / (8 K r_e^2)).
double bd_1d_approximation(double delta, double re, double conductivity);

/// -pi + R^2/r_e^2 + pi r_w^2/r_e^2 + 2 ln(D/R).
double pss_radial(double r, double delta, const RadialAnnulus& geom);

/// phi0(R) - phi0(D) + (2/pi) ln(D/R).
double bd_radial_published(double r, double delta, const analytic::BdModeRadial& mode);
/// phi0(R) - phi0(D) + pi r_w phi0'(r_w)/2 + C0 D^2/(4K) phi0(R) (exp(-K lambda0 tau/C0) - 1)/tau.
double bd_radial_balance(double r, double delta, const analytic::BdModeRadial& mode, const FluidRockParams& params,
                         double tau);

}  // namespace equations

/// R0 = D/2, independent of every other parameter.
RadiusSolution r0_ss_1d(const GridSpec& grid);

RadiusSolution r0_pss_1d(const GridSpec& grid, const Slab1D& geom, const SolverOptions& opts = {});

/// Also reports the closed-form approximation in RadiusSolution::approximation.
RadiusSolution r0_bd_1d(const FluidRockParams& params, const GridSpec& grid, const Slab1D& geom, double tau,
                        const SolverOptions& opts = {});

/// Also reports the large-domain limit D exp(-pi/2) as the approximation.
RadiusSolution r0_pss_radial(const GridSpec& grid, const RadialAnnulus& geom, const SolverOptions& opts = {});

/// Existence of a root is not guaranteed; NoSignChange carries the scan trace.
RadiusSolution r0_bd_radial(const FluidRockParams& params, const GridSpec& grid, const RadialAnnulus& geom,
                            const analytic::BdModeRadial& mode, double tau, const SolverOptions& opts = {});

/// Peaceman's classical five-point value, reported for comparison only.
inline constexpr double kPeacemanFactor = 0.1982;

}  // namespace wellblock
