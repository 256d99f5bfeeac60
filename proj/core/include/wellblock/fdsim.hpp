#pragma once

// Finite-difference reference simulator for C0 dp/dt = K lap(p) with a well sink.
//
// Slab layout: node 0 sits at D/2 (centre of the half block next to the gallery),
// node i >= 1 at i D, the last node N on the exterior boundary r_e = N D.
// Control volumes are bounded by the midpoints between nodes, so they sum to r_e
// and linear-in-x, quadratic-in-x profiles are reproduced exactly.
//
// Radial layout: a (2N+1) x (2N+1) five-point grid of D x D blocks centred on the
// well block. The annulus is represented only through the well-block balance.

#include <cstddef>
#include <functional>
#include <vector>

#include "wellblock/mbal.hpp"
#include "wellblock/types.hpp"

namespace wellblock::fd {

enum class BoundaryKind {
  /// Fixed pressure at the exterior (steady state).
  FixedPressure,
  /// Closed exterior (pseudo-steady state).
  NoFlow,
  /// Zero pressure at the well, closed exterior (boundary-dominated). The slab imposes it
  /// through a ghost node mirrored across the gallery; the radial grid pins the well block.
  WellDirichlet,
};

struct BoundarySpec {
  BoundaryKind kind = BoundaryKind::NoFlow;
  double exterior_pressure = 0.0;

  static BoundarySpec for_regime(Regime regime, double exterior_pressure = 0.0);
};

enum class TimeScheme { Implicit, Explicit };

struct FdField {
  GeometryKind geometry = GeometryKind::Slab1D;
  std::size_t nx = 0;
  std::size_t ny = 1;
  /// Row-major: index j * nx + i.
  std::vector<double> pressures;
  double t = 0.0;
  std::size_t well_i = 0;
  std::size_t well_j = 0;
  /// Production rate through the well at time t.
  double well_rate = 0.0;

  double at(std::size_t i, std::size_t j = 0) const { return pressures[j * nx + i]; }
  double well_pressure() const { return at(well_i, well_j); }
  /// Slab: node 1. Radial: mean of the four face neighbours of the well block.
  double neighbor_pressure() const;
};

struct TransientOptions {
  double tau = 1e-2;
  double t_end = 1.0;
  TimeScheme scheme = TimeScheme::Implicit;
  /// Keep every n-th step (the initial field is always kept).
  std::size_t sample_every = 1;
};

/// Node coordinates: slab x positions, or radial cell-centre offsets along one axis.
std::vector<double> node_positions(const ValidatedProblem& problem);

/// Field with p = f(x, y); the slab passes y = 0, the radial grid uses offsets from the well centre.
FdField initial_field(const ValidatedProblem& problem, const std::function<double(double, double)>& f);

FdField fd_steady_1d(const ValidatedProblem& problem, double q, double p_e);
FdField fd_steady_2d(const ValidatedProblem& problem, double q, double p_e);

/// Advances from `initial` to t_end; returns the sampled fields in time order.
/// Throws StabilityViolation (explicit scheme) and NonFiniteDetected.
std::vector<FdField> fd_transient(const ValidatedProblem& problem, const BoundarySpec& boundary, double q,
                                  const FdField& initial, const TransientOptions& opts);

/// Storage content sum C0 V_i p_i (times h for the radial grid).
double total_content(const ValidatedProblem& problem, const FdField& field);

/// One sample per pair of consecutive fields. Throws InsufficientSamples for fewer than two fields.
std::vector<MBSample> extract_mb_samples(const std::vector<FdField>& series);

}  // namespace wellblock::fd
