#include "wellblock/mbal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wellblock {

namespace {

constexpr double kTiny = 1e-300;

// Largest relative deviation of values from ref.
double spread(const std::vector<double>& values, double ref) {
  double worst = 0.0;
  const double scale = std::max(std::abs(ref), kTiny);
  for (double v : values) worst = std::max(worst, std::abs(v - ref) / scale);
  return worst;
}

ConstraintValue constancy(std::string name, const std::vector<double>& values, double tol) {
  const double ref = values.front();
  const double dev = spread(values, ref);
  return {std::move(name), dev, 0.0, tol, dev <= tol};
}

void require_samples(const std::vector<MBSample>& samples) {
  if (samples.size() < 3) {
    throw InsufficientSamples("need at least 3 samples, got " + std::to_string(samples.size()));
  }
}

RegimeCheckReport finish(RegimeCheckReport r) {
  r.overall = std::all_of(r.constraint_values.begin(), r.constraint_values.end(),
                          [](const ConstraintValue& c) { return c.pass; });
  return r;
}

}  // namespace

double mb_residual(const MBSample& s, const MBCoefficients& c, double delta) {
  if (c.stencil_factor != 2 && c.stencil_factor != 4) {
    throw DomainError("stencil_factor", "stencil_factor in {2,4}", std::to_string(c.stencil_factor));
  }
  if (!(delta > 0.0)) throw DomainError("delta", "delta>0");
  const double d2 = delta * delta;
  return d2 * c.j_coeff * (s.p0_s - s.p1_s) + d2 * c.i_coeff * s.q + d2 * c.l_coeff * (s.p0_s_tau - s.p0_s) / s.tau;
}

RegimeCheckReport check_pss_constraints(const std::vector<MBSample>& samples, const FluidRockParams& params,
                                        const Geometry& geom, double rel_tol) {
  require_samples(samples);
  const double tau = samples.front().tau;
  for (const auto& s : samples) {
    if (s.tau != tau) throw DomainError("tau", "uniform tau across samples");
  }
  const double volume = std::holds_alternative<Slab1D>(geom)
                            ? std::get<Slab1D>(geom).exterior()
                            : params.thickness() * std::get<RadialAnnulus>(geom).area();

  std::vector<double> q, increment, gap;
  for (const auto& s : samples) {
    q.push_back(s.q);
    increment.push_back(s.p0_s_tau - s.p0_s);
    gap.push_back(s.p0_s - s.p1_s);
  }

  RegimeCheckReport r;
  r.regime = Regime::PseudoSteadyState;
  r.constraint_values.push_back(constancy("q_constant", q, rel_tol));
  const double expected = -q.front() * tau / (params.storage() * volume);
  const double dev = spread(increment, expected);
  const double mean = std::accumulate(increment.begin(), increment.end(), 0.0) / increment.size();
  r.constraint_values.push_back({"p0_increment", mean, expected, rel_tol, dev <= rel_tol});
  r.constraint_values.push_back(constancy("p0_minus_p1_constant", gap, rel_tol));
  return finish(std::move(r));
}

RegimeCheckReport check_bd_constraints(const std::vector<MBSample>& samples, double tau, double rel_tol) {
  require_samples(samples);
  if (!(tau > 0.0)) throw DomainError("tau", "tau>0");
  std::vector<double> q_over_p1, p0_over_p1, growth;
  for (const auto& s : samples) {
    if (std::abs(s.p1_s) < kTiny || std::abs(s.p0_s) < kTiny) {
      throw DivisionByNearZero("pressure sample too close to zero for ratio constraints");
    }
    q_over_p1.push_back(s.q / s.p1_s);
    p0_over_p1.push_back(s.p0_s / s.p1_s);
    growth.push_back((s.p0_s_tau / s.p0_s - 1.0) / tau);
  }

  RegimeCheckReport r;
  r.regime = Regime::BoundaryDominated;
  r.constraint_values.push_back(constancy("q_over_p1_constant", q_over_p1, rel_tol));
  r.constraint_values.push_back(constancy("p0_over_p1_constant", p0_over_p1, rel_tol));
  r.constraint_values.push_back(constancy("relative_p0_rate_constant", growth, rel_tol));
  r.c1 = q_over_p1.front();
  r.c2 = p0_over_p1.front();
  r.c3 = growth.front();
  return finish(std::move(r));
}

std::array<double, 4> mb_face_residuals(const AnisotropicSample& s, double i_coeff, double l_coeff) {
  const double shared = 0.25 * (i_coeff * s.q + l_coeff * (s.p0_s_tau - s.p0_s) / s.tau);
  std::array<double, 4> out{};
  for (std::size_t f = 0; f < 4; ++f) {
    out[f] = s.faces[f].transmissibility * (s.p0_s - s.faces[f].p_neighbor) + shared;
  }
  return out;
}

double mb_residual_unreduced(const AnisotropicSample& s, double i_coeff, double l_coeff, double delta) {
  const auto faces = mb_face_residuals(s, i_coeff, l_coeff);
  return delta * delta * (faces[0] + faces[1] + faces[2] + faces[3]);
}

}  // namespace wellblock
