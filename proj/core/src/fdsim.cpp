#include "wellblock/fdsim.hpp"

#include <Eigen/Sparse>
#include <cmath>
#include <optional>
#include <sstream>

namespace wellblock::fd {

namespace {

// Slab nodes, control volumes and inter-node transmissibilities.
struct SlabLayout {
  std::vector<double> x;
  std::vector<double> volume;
  std::vector<double> trans;  // trans[i] couples i and i+1
  double ghost = 0.0;         // well-face transmissibility of the mirrored node
};

SlabLayout slab_layout(const ValidatedProblem& p) {
  const double d = p.grid().delta();
  const std::size_t n = p.grid().blocks();
  const double re = exterior_of(p.geometry());
  const double K = p.params().conductivity();
  SlabLayout s;
  s.x.resize(n + 1);
  s.x[0] = 0.5 * d;
  for (std::size_t i = 1; i < n; ++i) s.x[i] = static_cast<double>(i) * d;
  s.x[n] = re;
  s.volume.resize(n + 1);
  double left = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    const double right = i == n ? re : 0.5 * (s.x[i] + s.x[i + 1]);
    s.volume[i] = right - left;
    left = right;
  }
  s.trans.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.trans[i] = K / (s.x[i + 1] - s.x[i]);
  s.ghost = 2.0 * K / d;
  return s;
}

// Solves a tridiagonal system in place; sub[0] and sup[m-1] are unused.
void thomas(std::vector<double> sub, std::vector<double> diag, std::vector<double> sup, std::vector<double>& rhs) {
  const std::size_t m = diag.size();
  for (std::size_t i = 1; i < m; ++i) {
    if (diag[i - 1] == 0.0) throw SingularSystem("zero pivot in tridiagonal elimination");
    const double w = sub[i] / diag[i - 1];
    diag[i] -= w * sup[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  if (diag[m - 1] == 0.0) throw SingularSystem("zero pivot in tridiagonal elimination");
  rhs[m - 1] /= diag[m - 1];
  for (std::size_t i = m - 1; i-- > 0;) rhs[i] = (rhs[i] - sup[i] * rhs[i + 1]) / diag[i];
}

void require_finite(const std::vector<double>& v, double t) {
  for (double x : v) {
    if (!std::isfinite(x)) {
      std::ostringstream os;
      os << "non-finite pressure at t=" << t;
      throw NonFiniteDetected(os.str());
    }
  }
}

[[noreturn]] void unstable(double ratio) {
  std::ostringstream os;
  os.precision(17);
  os << "explicit step violates stability: tau * sum(T) / (C0 V) = " << ratio << " > 1";
  throw StabilityViolation(os.str());
}

// ---- slab ----------------------------------------------------------------

double slab_rate(const SlabLayout& s, BoundaryKind kind, double q, const std::vector<double>& p) {
  return kind == BoundaryKind::WellDirichlet ? s.ghost * p[0] : q;
}

// One implicit (storage > 0) or steady (storage == 0) solve of the slab system.
void slab_solve(const SlabLayout& s, const BoundarySpec& b, double q, double storage_over_tau,
                std::vector<double>& p) {
  const std::size_t n = s.x.size();
  const bool fixed = b.kind == BoundaryKind::FixedPressure;
  const std::size_t m = fixed ? n - 1 : n;
  std::vector<double> sub(m, 0.0), diag(m, 0.0), sup(m, 0.0), rhs(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const double c = storage_over_tau * s.volume[i];
    diag[i] = c;
    rhs[i] = c * p[i];
    if (i > 0) {
      diag[i] += s.trans[i - 1];
      sub[i] = -s.trans[i - 1];
    }
    if (i + 1 < n) {
      diag[i] += s.trans[i];
      if (i + 1 < m) sup[i] = -s.trans[i];
      else rhs[i] += s.trans[i] * b.exterior_pressure;
    }
  }
  if (b.kind == BoundaryKind::WellDirichlet) diag[0] += s.ghost;
  else rhs[0] -= q;
  thomas(std::move(sub), std::move(diag), std::move(sup), rhs);
  for (std::size_t i = 0; i < m; ++i) p[i] = rhs[i];
  if (fixed) p[n - 1] = b.exterior_pressure;
}

void slab_explicit(const SlabLayout& s, const BoundarySpec& b, double q, double c0, double tau,
                   std::vector<double>& p) {
  const std::size_t n = s.x.size();
  const bool fixed = b.kind == BoundaryKind::FixedPressure;
  std::vector<double> net(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double f = s.trans[i] * (p[i + 1] - p[i]);
    net[i] += f;
    net[i + 1] -= f;
  }
  net[0] -= b.kind == BoundaryKind::WellDirichlet ? s.ghost * p[0] : q;
  const std::size_t m = fixed ? n - 1 : n;
  for (std::size_t i = 0; i < m; ++i) p[i] += tau * net[i] / (c0 * s.volume[i]);
  if (fixed) p[n - 1] = b.exterior_pressure;
}

void slab_stability(const SlabLayout& s, const BoundarySpec& b, double c0, double tau) {
  const std::size_t n = s.x.size();
  const std::size_t m = b.kind == BoundaryKind::FixedPressure ? n - 1 : n;
  for (std::size_t i = 0; i < m; ++i) {
    double t = 0.0;
    if (i > 0) t += s.trans[i - 1];
    if (i + 1 < n) t += s.trans[i];
    if (i == 0 && b.kind == BoundaryKind::WellDirichlet) t += s.ghost;
    const double ratio = tau * t / (c0 * s.volume[i]);
    if (ratio > 1.0) unstable(ratio);
  }
}

// ---- radial five-point grid ----------------------------------------------

struct Plane {
  std::size_t m = 0;  // cells per side
  std::size_t well = 0;
  double trans = 0.0;   // K h per face
  double volume = 0.0;  // D^2 h per cell

  std::size_t idx(std::size_t i, std::size_t j) const { return j * m + i; }
  std::size_t well_index() const { return idx(well, well); }
};

Plane plane_layout(const ValidatedProblem& p) {
  Plane g;
  g.well = p.grid().blocks();
  g.m = 2 * g.well + 1;
  const double d = p.grid().delta();
  const double h = p.params().thickness();
  g.trans = p.params().conductivity() * h;
  g.volume = d * d * h;
  return g;
}

template <class Fn>
void for_each_face(const Plane& g, std::size_t i, std::size_t j, Fn&& fn) {
  // fn(neighbour index or npos for a boundary face)
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  fn(i > 0 ? g.idx(i - 1, j) : npos);
  fn(i + 1 < g.m ? g.idx(i + 1, j) : npos);
  fn(j > 0 ? g.idx(i, j - 1) : npos);
  fn(j + 1 < g.m ? g.idx(i, j + 1) : npos);
}

constexpr std::size_t kBoundaryFace = static_cast<std::size_t>(-1);

double plane_rate(const Plane& g, BoundaryKind kind, double q, const std::vector<double>& p) {
  if (kind != BoundaryKind::WellDirichlet) return q;
  double flux = 0.0;
  for_each_face(g, g.well, g.well, [&](std::size_t nb) {
    if (nb != kBoundaryFace) flux += g.trans * p[nb];
  });
  return flux;
}

class PlaneImplicit {
 public:
  PlaneImplicit(const Plane& g, const BoundarySpec& b, double storage_over_tau) : g_(g), b_(b), c_(storage_over_tau) {
    const std::size_t n = g.m * g.m;
    const std::size_t w = g.well_index();
    const bool pinned = b.kind == BoundaryKind::WellDirichlet;
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(5 * n);
    for (std::size_t j = 0; j < g.m; ++j) {
      for (std::size_t i = 0; i < g.m; ++i) {
        const std::size_t k = g.idx(i, j);
        if (pinned && k == w) {
          trip.emplace_back(k, k, 1.0);
          continue;
        }
        double diag = c_ * g.volume;
        for_each_face(g, i, j, [&](std::size_t nb) {
          if (nb == kBoundaryFace) {
            if (b.kind == BoundaryKind::FixedPressure) diag += g.trans;
            return;
          }
          diag += g.trans;
          if (!(pinned && nb == w)) trip.emplace_back(k, nb, -g.trans);
        });
        trip.emplace_back(k, k, diag);
      }
    }
    Eigen::SparseMatrix<double> a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    a.setFromTriplets(trip.begin(), trip.end());
    solver_.compute(a);
    if (solver_.info() != Eigen::Success) throw SingularSystem("five-point system factorization failed");
  }

  void step(double q, std::vector<double>& p) {
    const std::size_t n = p.size();
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k) rhs[k] = c_ * g_.volume * p[k];
    if (b_.kind == BoundaryKind::FixedPressure) {
      for (std::size_t j = 0; j < g_.m; ++j) {
        for (std::size_t i = 0; i < g_.m; ++i) {
          for_each_face(g_, i, j, [&](std::size_t nb) {
            if (nb == kBoundaryFace) rhs[g_.idx(i, j)] += g_.trans * b_.exterior_pressure;
          });
        }
      }
    }
    const auto w = static_cast<Eigen::Index>(g_.well_index());
    if (b_.kind == BoundaryKind::WellDirichlet) rhs[w] = 0.0;
    else rhs[w] -= q;
    const Eigen::VectorXd x = solver_.solve(rhs);
    if (solver_.info() != Eigen::Success) throw SingularSystem("five-point solve failed");
    for (std::size_t k = 0; k < n; ++k) p[k] = x[static_cast<Eigen::Index>(k)];
  }

 private:
  Plane g_;
  BoundarySpec b_;
  double c_;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver_;
};

void plane_explicit(const Plane& g, const BoundarySpec& b, double q, double c0, double tau, std::vector<double>& p) {
  const std::size_t w = g.well_index();
  const bool pinned = b.kind == BoundaryKind::WellDirichlet;
  std::vector<double> next = p;
  for (std::size_t j = 0; j < g.m; ++j) {
    for (std::size_t i = 0; i < g.m; ++i) {
      const std::size_t k = g.idx(i, j);
      if (pinned && k == w) continue;
      double net = 0.0;
      for_each_face(g, i, j, [&](std::size_t nb) {
        if (nb != kBoundaryFace) net += g.trans * (p[nb] - p[k]);
        else if (b.kind == BoundaryKind::FixedPressure) net += g.trans * (b.exterior_pressure - p[k]);
      });
      if (k == w) net -= q;
      next[k] = p[k] + tau * net / (c0 * g.volume);
    }
  }
  p.swap(next);
}

void plane_stability(const Plane& g, double c0, double tau) {
  // Every unpinned cell has four faces, boundary faces count only for fixed pressure.
  const double ratio = tau * 4.0 * g.trans / (c0 * g.volume);
  if (ratio > 1.0) unstable(ratio);
}

FdField blank_field(const ValidatedProblem& p) {
  FdField f;
  f.geometry = kind_of(p.geometry());
  if (f.geometry == GeometryKind::Slab1D) {
    f.nx = p.grid().blocks() + 1;
    f.ny = 1;
  } else {
    const auto g = plane_layout(p);
    f.nx = f.ny = g.m;
    f.well_i = f.well_j = g.well;
  }
  f.pressures.assign(f.nx * f.ny, 0.0);
  return f;
}

void require_shape(const ValidatedProblem& p, const FdField& f) {
  const auto ref = blank_field(p);
  if (f.geometry != ref.geometry || f.nx != ref.nx || f.ny != ref.ny || f.pressures.size() != ref.pressures.size()) {
    throw DomainError("initial", "field dimensions match the grid");
  }
}

}  // namespace

BoundarySpec BoundarySpec::for_regime(Regime regime, double exterior_pressure) {
  switch (regime) {
    case Regime::SteadyState: return {BoundaryKind::FixedPressure, exterior_pressure};
    case Regime::PseudoSteadyState: return {BoundaryKind::NoFlow, 0.0};
    case Regime::BoundaryDominated: return {BoundaryKind::WellDirichlet, 0.0};
  }
  return {};
}

double FdField::neighbor_pressure() const {
  if (geometry == GeometryKind::Slab1D) return at(1);
  return 0.25 * (at(well_i - 1, well_j) + at(well_i + 1, well_j) + at(well_i, well_j - 1) + at(well_i, well_j + 1));
}

std::vector<double> node_positions(const ValidatedProblem& problem) {
  if (kind_of(problem.geometry()) == GeometryKind::Slab1D) return slab_layout(problem).x;
  const auto g = plane_layout(problem);
  std::vector<double> x(g.m);
  for (std::size_t i = 0; i < g.m; ++i) {
    x[i] = (static_cast<double>(i) - static_cast<double>(g.well)) * problem.grid().delta();
  }
  return x;
}

FdField initial_field(const ValidatedProblem& problem, const std::function<double(double, double)>& f) {
  auto field = blank_field(problem);
  const auto x = node_positions(problem);
  if (field.geometry == GeometryKind::Slab1D) {
    for (std::size_t i = 0; i < field.nx; ++i) field.pressures[i] = f(x[i], 0.0);
  } else {
    for (std::size_t j = 0; j < field.ny; ++j) {
      for (std::size_t i = 0; i < field.nx; ++i) field.pressures[j * field.nx + i] = f(x[i], x[j]);
    }
  }
  return field;
}

FdField fd_steady_1d(const ValidatedProblem& problem, double q, double p_e) {
  if (kind_of(problem.geometry()) != GeometryKind::Slab1D) throw DomainError("geometry", "slab");
  const auto s = slab_layout(problem);
  auto field = blank_field(problem);
  slab_solve(s, {BoundaryKind::FixedPressure, p_e}, q, 0.0, field.pressures);
  require_finite(field.pressures, 0.0);
  field.well_rate = q;
  return field;
}

FdField fd_steady_2d(const ValidatedProblem& problem, double q, double p_e) {
  if (kind_of(problem.geometry()) != GeometryKind::RadialAnnulus) throw DomainError("geometry", "radial");
  const auto g = plane_layout(problem);
  auto field = blank_field(problem);
  PlaneImplicit solver(g, {BoundaryKind::FixedPressure, p_e}, 0.0);
  solver.step(q, field.pressures);
  require_finite(field.pressures, 0.0);
  field.well_rate = q;
  return field;
}

std::vector<FdField> fd_transient(const ValidatedProblem& problem, const BoundarySpec& boundary, double q,
                                  const FdField& initial, const TransientOptions& opts) {
  if (!(opts.tau > 0.0)) throw DomainError("tau", "tau>0");
  if (!(opts.t_end >= 0.0)) throw DomainError("t_end", "t_end>=0");
  require_shape(problem, initial);
  const double c0 = problem.params().storage();
  const auto steps = static_cast<std::size_t>(std::llround(opts.t_end / opts.tau));
  const std::size_t every = std::max<std::size_t>(opts.sample_every, 1);

  FdField field = initial;
  std::vector<double>& p = field.pressures;
  std::vector<FdField> out;
  out.reserve(steps / every + 2);

  if (field.geometry == GeometryKind::Slab1D) {
    const auto s = slab_layout(problem);
    if (boundary.kind == BoundaryKind::FixedPressure) p.back() = boundary.exterior_pressure;
    if (opts.scheme == TimeScheme::Explicit) slab_stability(s, boundary, c0, opts.tau);
    field.well_rate = slab_rate(s, boundary.kind, q, p);
    out.push_back(field);
    for (std::size_t n = 1; n <= steps; ++n) {
      if (opts.scheme == TimeScheme::Implicit) slab_solve(s, boundary, q, c0 / opts.tau, p);
      else slab_explicit(s, boundary, q, c0, opts.tau, p);
      field.t = initial.t + static_cast<double>(n) * opts.tau;
      require_finite(p, field.t);
      if (n % every == 0) {
        field.well_rate = slab_rate(s, boundary.kind, q, p);
        out.push_back(field);
      }
    }
  } else {
    const auto g = plane_layout(problem);
    if (boundary.kind == BoundaryKind::WellDirichlet) p[g.well_index()] = 0.0;
    if (opts.scheme == TimeScheme::Explicit) plane_stability(g, c0, opts.tau);
    field.well_rate = plane_rate(g, boundary.kind, q, p);
    out.push_back(field);
    std::optional<PlaneImplicit> implicit;
    if (opts.scheme == TimeScheme::Implicit) implicit.emplace(g, boundary, c0 / opts.tau);
    for (std::size_t n = 1; n <= steps; ++n) {
      if (implicit) implicit->step(q, p);
      else plane_explicit(g, boundary, q, c0, opts.tau, p);
      field.t = initial.t + static_cast<double>(n) * opts.tau;
      require_finite(p, field.t);
      if (n % every == 0) {
        field.well_rate = plane_rate(g, boundary.kind, q, p);
        out.push_back(field);
      }
    }
  }
  return out;
}

double total_content(const ValidatedProblem& problem, const FdField& field) {
  const double c0 = problem.params().storage();
  double sum = 0.0;
  if (field.geometry == GeometryKind::Slab1D) {
    const auto s = slab_layout(problem);
    for (std::size_t i = 0; i < field.nx; ++i) sum += s.volume[i] * field.pressures[i];
    return c0 * sum;
  }
  for (double v : field.pressures) sum += v;
  return c0 * plane_layout(problem).volume * sum;
}

std::vector<MBSample> extract_mb_samples(const std::vector<FdField>& series) {
  if (series.size() < 2) throw InsufficientSamples("need at least two consecutive fields");
  const double tau = series[1].t - series[0].t;
  std::vector<MBSample> out;
  out.reserve(series.size() - 1);
  for (std::size_t k = 0; k + 1 < series.size(); ++k) {
    const double dt = series[k + 1].t - series[k].t;
    if (std::abs(dt - tau) > 1e-9 * std::abs(tau)) throw DomainError("series", "uniform sample spacing");
    const auto& f = series[k];
    out.push_back(MBSample::make(f.well_pressure(), f.neighbor_pressure(), series[k + 1].well_pressure(), f.well_rate,
                                 dt));
  }
  return out;
}

}  // namespace wellblock::fd
