#pragma once

// Shared domain types for well-block radius computations.
//
// Sign convention used throughout the library: the well rate q is positive
// for production, i.e. fluid leaving the reservoir through the gallery
// (1-D) or the wellbore (2-D). Pressures therefore increase away from a
// producing well and decline in time under compressible depletion.
//
// Units are "consistent units"; no conversion layer is provided.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wellblock/errors.hpp"

namespace wellblock {

/// Physical coefficients: mobility K = k/mu, porosity, compressibility, thickness.
class FluidRockParams {
 public:
  /// Normalized defaults: K = phi = c_p = h = 1.
  FluidRockParams() = default;

  static FluidRockParams make(double conductivity, double porosity = 1.0, double compressibility = 1.0,
                              double thickness = 1.0, double volume_ratio = 1.0);

  double conductivity() const { return conductivity_; }
  double porosity() const { return porosity_; }
  double compressibility() const { return compressibility_; }
  double thickness() const { return thickness_; }
  /// V0/V factor of the steady-state constraint; kept symbolic, defaults to 1.
  double volume_ratio() const { return volume_ratio_; }
  /// Storage coefficient C0 = phi * c_p.
  double storage() const { return porosity_ * compressibility_; }

  friend bool operator==(const FluidRockParams&, const FluidRockParams&) = default;

 private:
  double conductivity_ = 1.0;
  double porosity_ = 1.0;
  double compressibility_ = 1.0;
  double thickness_ = 1.0;
  double volume_ratio_ = 1.0;
};

/// 1-D slab: gallery at x = 0, exterior boundary at x = r_e.
class Slab1D {
 public:
  static Slab1D make(double exterior);
  double exterior() const { return exterior_; }
  friend bool operator==(const Slab1D&, const Slab1D&) = default;

 private:
  explicit Slab1D(double re) : exterior_(re) {}
  double exterior_;
};

/// 2-D annulus r_w < |x| < r_e.
class RadialAnnulus {
 public:
  static RadialAnnulus make(double well_radius, double exterior);
  double well_radius() const { return well_radius_; }
  double exterior() const { return exterior_; }
  /// |U| = pi (r_e^2 - r_w^2).
  double area() const;
  friend bool operator==(const RadialAnnulus&, const RadialAnnulus&) = default;

 private:
  RadialAnnulus(double rw, double re) : well_radius_(rw), exterior_(re) {}
  double well_radius_;
  double exterior_;
};

using Geometry = std::variant<Slab1D, RadialAnnulus>;

enum class GeometryKind { Slab1D, RadialAnnulus };

GeometryKind kind_of(const Geometry& geom);
double exterior_of(const Geometry& geom);

/// Coarse discretization: block size, block count and time step.
class GridSpec {
 public:
  static GridSpec make(double delta, std::size_t blocks, double tau);

  double delta() const { return delta_; }
  std::size_t blocks() const { return blocks_; }
  double tau() const { return tau_; }
  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  GridSpec(double delta, std::size_t blocks, double tau) : delta_(delta), blocks_(blocks), tau_(tau) {}
  double delta_;
  std::size_t blocks_;
  double tau_;
};

/// One material-balance instance (p0(s), p1(s), p0(s+tau), q(s), tau).
struct MBSample {
  double p0_s = 0.0;
  double p1_s = 0.0;
  double p0_s_tau = 0.0;
  double q = 0.0;
  double tau = 1.0;

  static MBSample make(double p0_s, double p1_s, double p0_s_tau, double q, double tau);
};

/// Coefficients of the parametric balance  J (p0 - p1) + I q + L (p0(s+tau) - p0(s)) / tau = 0.
struct MBCoefficients {
  double j_coeff = 0.0;
  double i_coeff = 0.0;
  double l_coeff = 0.0;
  int stencil_factor = 2;

  /// J = 2K/dx^2, I = 1/(h dy dx) with dy h = 1, L = phi c_p.
  static MBCoefficients slab(const FluidRockParams& params, double delta);
  /// J = 4K/dx^2, I = 1/(h dx^2), L = phi c_p.
  static MBCoefficients radial(const FluidRockParams& params, double delta);
};

enum class Regime { SteadyState, PseudoSteadyState, BoundaryDominated };

enum class SolveMethod { ClosedForm, Bisection, NewtonBracketed };

std::string to_string(Regime r);
std::string to_string(SolveMethod m);
std::string to_string(GeometryKind g);
Regime regime_from_string(const std::string& s);

struct RadiusSolution {
  Regime regime = Regime::SteadyState;
  Geometry geometry = Slab1D::make(1.0);
  double delta = 0.0;
  double r0 = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  int iterations = 0;
  SolveMethod method = SolveMethod::ClosedForm;
  /// Closed-form approximation reported alongside a transcendental root, when one exists.
  std::optional<double> approximation;
};

/// Parameters, geometry and grid that passed every single and cross-field check.
class ValidatedProblem {
 public:
  const FluidRockParams& params() const { return params_; }
  const Geometry& geometry() const { return geometry_; }
  const GridSpec& grid() const { return grid_; }

  friend bool operator==(const ValidatedProblem&, const ValidatedProblem&) = default;

 private:
  friend ValidatedProblem validate_problem(const FluidRockParams&, const Geometry&, const GridSpec&);
  ValidatedProblem(FluidRockParams p, Geometry g, GridSpec grid)
      : params_(p), geometry_(std::move(g)), grid_(grid) {}

  FluidRockParams params_;
  Geometry geometry_;
  GridSpec grid_;
};

/// Untyped inputs, as read from a configuration file.
struct ProblemInputs {
  double conductivity = 1.0;
  double porosity = 1.0;
  double compressibility = 1.0;
  double thickness = 1.0;
  GeometryKind geometry = GeometryKind::Slab1D;
  double well_radius = 0.0;
  double exterior = 1.0;
  double delta = 1.0;
  std::size_t blocks = 1;
  double tau = 1.0;
};

/// Every violated invariant of the inputs; empty when the inputs are valid.
std::vector<Violation> collect_violations(const ProblemInputs& in);

/// Throws DomainError listing all violations.
ValidatedProblem validate_problem(const ProblemInputs& in);
ValidatedProblem validate_problem(const FluidRockParams& params, const Geometry& geom, const GridSpec& grid);
inline ValidatedProblem validate_problem(const ValidatedProblem& p) { return p; }

}  // namespace wellblock
