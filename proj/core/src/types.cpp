#include "wellblock/types.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace wellblock {

namespace {

std::string join_violations(const std::vector<Violation>& vs) {
  std::ostringstream os;
  os << "invalid input:";
  for (const auto& v : vs) {
    os << " [" << v.field << ": " << v.constraint;
    if (!v.detail.empty()) os << " (" << v.detail << ")";
    os << "]";
  }
  return os.str();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

void check_fluid(std::vector<Violation>& out, double K, double phi, double cp, double h) {
  if (!finite_positive(K)) out.push_back({"conductivity", "K>0", fmt(K)});
  if (!(std::isfinite(phi) && phi > 0.0 && phi <= 1.0)) out.push_back({"porosity", "phi in (0,1]", fmt(phi)});
  if (!finite_positive(cp)) out.push_back({"compressibility", "c_p>0", fmt(cp)});
  if (!finite_positive(h)) out.push_back({"thickness", "h>0", fmt(h)});
}

void check_geometry(std::vector<Violation>& out, GeometryKind kind, double rw, double re) {
  if (!finite_positive(re)) out.push_back({"exterior", "r_e>0", fmt(re)});
  if (kind == GeometryKind::RadialAnnulus) {
    if (!finite_positive(rw)) out.push_back({"well_radius", "r_w>0", fmt(rw)});
    if (!(rw < re)) out.push_back({"well_radius", "r_w<r_e", fmt(rw) + ">=" + fmt(re)});
  }
}

void check_grid(std::vector<Violation>& out, double delta, std::size_t blocks, double tau) {
  if (!finite_positive(delta)) out.push_back({"delta", "delta>0", fmt(delta)});
  if (blocks == 0) out.push_back({"blocks", "N>=1", "0"});
  if (!finite_positive(tau)) out.push_back({"tau", "tau>0", fmt(tau)});
}

void check_cross(std::vector<Violation>& out, GeometryKind kind, double rw, double re, double delta,
                 std::size_t blocks) {
  if (!(delta < re)) out.push_back({"delta", "delta<r_e", fmt(delta) + ">=" + fmt(re)});
  if (kind == GeometryKind::Slab1D) {
    const double span = static_cast<double>(blocks) * delta;
    if (!(std::abs(span - re) <= 1e-12 * std::abs(re))) {
      out.push_back({"blocks", "N*delta=r_e", fmt(span) + "!=" + fmt(re)});
    }
  } else if (!(delta > rw)) {
    out.push_back({"delta", "delta>r_w", fmt(delta) + "<=" + fmt(rw)});
  }
}

}  // namespace

DomainError::DomainError(std::string field, std::string constraint, std::string detail)
    : DomainError(std::vector<Violation>{{std::move(field), std::move(constraint), std::move(detail)}}) {}

DomainError::DomainError(std::vector<Violation> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {
  if (violations_.empty()) violations_.push_back({"?", "unspecified", {}});
}

NoSignChange::NoSignChange(std::string what, ScanTrace trace) : Error(std::move(what)), trace_(std::move(trace)) {}

MaxIterExceeded::MaxIterExceeded(double lo, double hi)
    : Error("maximum iterations exceeded; best bracket [" + fmt(lo) + ", " + fmt(hi) + "]"), lo_(lo), hi_(hi) {}

RootOutsidePhysicalRange::RootOutsidePhysicalRange(double root, double lo, double hi)
    : Error("root " + fmt(root) + " outside physical range [" + fmt(lo) + ", " + fmt(hi) + ")"), root_(root) {}

FluidRockParams FluidRockParams::make(double conductivity, double porosity, double compressibility, double thickness,
                                      double volume_ratio) {
  std::vector<Violation> v;
  check_fluid(v, conductivity, porosity, compressibility, thickness);
  if (!finite_positive(volume_ratio)) v.push_back({"volume_ratio", "V0/V>0", fmt(volume_ratio)});
  if (!v.empty()) throw DomainError(std::move(v));
  FluidRockParams p;
  p.conductivity_ = conductivity;
  p.porosity_ = porosity;
  p.compressibility_ = compressibility;
  p.thickness_ = thickness;
  p.volume_ratio_ = volume_ratio;
  return p;
}

Slab1D Slab1D::make(double exterior) {
  std::vector<Violation> v;
  check_geometry(v, GeometryKind::Slab1D, 0.0, exterior);
  if (!v.empty()) throw DomainError(std::move(v));
  return Slab1D(exterior);
}

RadialAnnulus RadialAnnulus::make(double well_radius, double exterior) {
  std::vector<Violation> v;
  check_geometry(v, GeometryKind::RadialAnnulus, well_radius, exterior);
  if (!v.empty()) throw DomainError(std::move(v));
  return RadialAnnulus(well_radius, exterior);
}

double RadialAnnulus::area() const {
  return std::numbers::pi * (exterior_ - well_radius_) * (exterior_ + well_radius_);
}

GeometryKind kind_of(const Geometry& geom) {
  return std::holds_alternative<Slab1D>(geom) ? GeometryKind::Slab1D : GeometryKind::RadialAnnulus;
}

double exterior_of(const Geometry& geom) {
  return std::visit([](const auto& g) { return g.exterior(); }, geom);
}

GridSpec GridSpec::make(double delta, std::size_t blocks, double tau) {
  std::vector<Violation> v;
  check_grid(v, delta, blocks, tau);
  if (!v.empty()) throw DomainError(std::move(v));
  return GridSpec(delta, blocks, tau);
}

MBSample MBSample::make(double p0_s, double p1_s, double p0_s_tau, double q, double tau) {
  std::vector<Violation> v;
  if (!std::isfinite(p0_s)) v.push_back({"p0_s", "finite", fmt(p0_s)});
  if (!std::isfinite(p1_s)) v.push_back({"p1_s", "finite", fmt(p1_s)});
  if (!std::isfinite(p0_s_tau)) v.push_back({"p0_s_tau", "finite", fmt(p0_s_tau)});
  if (!std::isfinite(q)) v.push_back({"q", "finite", fmt(q)});
  if (!finite_positive(tau)) v.push_back({"tau", "tau>0", fmt(tau)});
  if (!v.empty()) throw DomainError(std::move(v));
  return MBSample{p0_s, p1_s, p0_s_tau, q, tau};
}

MBCoefficients MBCoefficients::slab(const FluidRockParams& params, double delta) {
  // Unit cross-section: dy * h = 1.
  return {2.0 * params.conductivity() / (delta * delta), 1.0 / delta, params.storage(), 2};
}

MBCoefficients MBCoefficients::radial(const FluidRockParams& params, double delta) {
  return {4.0 * params.conductivity() / (delta * delta), 1.0 / (params.thickness() * delta * delta),
          params.storage(), 4};
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::SteadyState: return "ss";
    case Regime::PseudoSteadyState: return "pss";
    case Regime::BoundaryDominated: return "bd";
  }
  return "?";
}

std::string to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::ClosedForm: return "closed_form";
    case SolveMethod::Bisection: return "bisection";
    case SolveMethod::NewtonBracketed: return "newton_bracketed";
  }
  return "?";
}

std::string to_string(GeometryKind g) { return g == GeometryKind::Slab1D ? "slab" : "radial"; }

Regime regime_from_string(const std::string& s) {
  if (s == "ss") return Regime::SteadyState;
  if (s == "pss") return Regime::PseudoSteadyState;
  if (s == "bd") return Regime::BoundaryDominated;
  throw DomainError("regime", "one of ss|pss|bd", s);
}

std::vector<Violation> collect_violations(const ProblemInputs& in) {
  std::vector<Violation> v;
  check_fluid(v, in.conductivity, in.porosity, in.compressibility, in.thickness);
  check_geometry(v, in.geometry, in.well_radius, in.exterior);
  check_grid(v, in.delta, in.blocks, in.tau);
  check_cross(v, in.geometry, in.well_radius, in.exterior, in.delta, in.blocks);
  return v;
}

ValidatedProblem validate_problem(const ProblemInputs& in) {
  auto v = collect_violations(in);
  if (!v.empty()) throw DomainError(std::move(v));
  const auto params = FluidRockParams::make(in.conductivity, in.porosity, in.compressibility, in.thickness);
  Geometry geom = in.geometry == GeometryKind::Slab1D ? Geometry{Slab1D::make(in.exterior)}
                                                      : Geometry{RadialAnnulus::make(in.well_radius, in.exterior)};
  return validate_problem(params, geom, GridSpec::make(in.delta, in.blocks, in.tau));
}

ValidatedProblem validate_problem(const FluidRockParams& params, const Geometry& geom, const GridSpec& grid) {
  std::vector<Violation> v;
  const double rw = std::holds_alternative<RadialAnnulus>(geom) ? std::get<RadialAnnulus>(geom).well_radius() : 0.0;
  check_cross(v, kind_of(geom), rw, exterior_of(geom), grid.delta(), grid.blocks());
  if (!v.empty()) throw DomainError(std::move(v));
  return ValidatedProblem(params, geom, grid);
}

}  // namespace wellblock
