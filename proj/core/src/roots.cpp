#include "wellblock/roots.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace wellblock {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double checked(const ScalarFn& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os.precision(17);
    os << "non-finite function value at x=" << x;
    throw NonFiniteDetected(os.str());
  }
  return v;
}

bool opposite(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

std::optional<std::pair<double, double>> scan(const ScalarFn& f, double lo, double hi, int points, bool log_spaced,
                                              ScanTrace& trace) {
  if (points < 2) points = 2;
  double prev_x = 0.0;
  double prev_f = 0.0;
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    double x = log_spaced ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
    if (i == points - 1) x = hi;
    const double v = f(x);
    trace.emplace_back(x, v);
    if (!std::isfinite(v)) continue;
    if (v == 0.0) return std::pair{x, x};
    if (i > 0 && std::isfinite(prev_f) && opposite(prev_f, v)) return std::pair{prev_x, x};
    prev_x = x;
    prev_f = v;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<double, double>> scan_log(const ScalarFn& f, double lo, double hi, int points,
                                                  ScanTrace& trace) {
  if (!(lo > 0.0) || !(hi > lo)) throw DomainError("scan", "0<lo<hi");
  return scan(f, lo, hi, points, true, trace);
}

std::optional<std::pair<double, double>> scan_linear(const ScalarFn& f, double lo, double hi, int points,
                                                     ScanTrace& trace) {
  if (!(hi > lo)) throw DomainError("scan", "lo<hi");
  return scan(f, lo, hi, points, false, trace);
}

RootResult solve_bracketed(const ScalarFn& f, const RootConfig& cfg, const ScalarFn& df) {
  std::vector<Violation> bad;
  if (!(cfg.bracket_lo < cfg.bracket_hi)) bad.push_back({"bracket", "bracket_lo<bracket_hi", {}});
  if (!(cfg.abs_tol > 0.0)) bad.push_back({"abs_tol", "abs_tol>0", {}});
  if (cfg.max_iter < 1) bad.push_back({"max_iter", "max_iter>=1", {}});
  if (!bad.empty()) throw DomainError(std::move(bad));

  double lo = cfg.bracket_lo;
  double hi = cfg.bracket_hi;
  double f_lo = checked(f, lo);
  double f_hi = checked(f, hi);
  if (f_lo == 0.0) return {lo, 0.0, 0, SolveMethod::ClosedForm};
  if (f_hi == 0.0) return {hi, 0.0, 0, SolveMethod::ClosedForm};
  if (!opposite(f_lo, f_hi)) {
    throw NoSignChange("no sign change on bracket", ScanTrace{{lo, f_lo}, {hi, f_hi}});
  }

  auto x_tol = [&](double x) { return cfg.x_tol > 0.0 ? cfg.x_tol : 4.0 * kEps * std::max(std::abs(x), 1e-300); };

  bool accelerated = false;
  // Start from the endpoint with the smaller residual.
  double x = std::abs(f_lo) < std::abs(f_hi) ? lo : hi;
  double fx = x == lo ? f_lo : f_hi;
  double x_prev = x == lo ? hi : lo;
  double f_prev = x == lo ? f_hi : f_lo;
  double step_old = hi - lo;

  for (int it = 1; it <= cfg.max_iter; ++it) {
    double candidate = std::numeric_limits<double>::quiet_NaN();
    if (df) {
      const double d = df(x);
      if (std::isfinite(d) && d != 0.0) candidate = x - fx / d;
    } else if (f_prev != fx) {
      candidate = x - fx * (x - x_prev) / (fx - f_prev);
    }

    // A converged Newton/secant update would otherwise fall through to bisection.
    if (std::isfinite(candidate) && std::abs(candidate - x) <= x_tol(x) && std::abs(fx) <= cfg.abs_tol) {
      return {x, fx, it - 1, accelerated ? SolveMethod::NewtonBracketed : SolveMethod::Bisection};
    }

    double next;
    const bool inside = std::isfinite(candidate) && candidate > lo && candidate < hi;
    // Newton-style step only if it stays inside and at least halves the previous-but-one step.
    if (inside && candidate != x && std::abs(candidate - x) < 0.5 * std::abs(step_old)) {
      next = candidate;
      accelerated = true;
    } else {
      next = lo + 0.5 * (hi - lo);
    }
    const double step = next - x;
    step_old = step == 0.0 ? step_old : step;

    const double f_next = checked(f, next);
    x_prev = x;
    f_prev = fx;
    x = next;
    fx = f_next;

    if (fx == 0.0) return {x, fx, it, accelerated ? SolveMethod::NewtonBracketed : SolveMethod::Bisection};
    if (opposite(fx, f_lo)) {
      hi = x;
      f_hi = fx;
    } else {
      lo = x;
      f_lo = fx;
    }

    const double tol = x_tol(x);
    const bool settled = std::abs(step) <= tol && std::abs(fx) <= cfg.abs_tol;
    if (settled || hi - lo <= tol) {
      // Report the better end of the final bracket.
      if (std::abs(f_lo) < std::abs(fx)) {
        x = lo;
        fx = f_lo;
      }
      if (std::abs(f_hi) < std::abs(fx)) {
        x = hi;
        fx = f_hi;
      }
      return {x, fx, it, accelerated ? SolveMethod::NewtonBracketed : SolveMethod::Bisection};
    }
  }
  throw MaxIterExceeded(lo, hi);
}

}  // namespace wellblock
