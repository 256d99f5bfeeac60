#include "wellblock/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "wellblock/errors.hpp"

namespace wellblock::bessel {

namespace {

using ld = long double;

constexpr ld kPi = std::numbers::pi_v<ld>;
constexpr ld kEulerGamma = std::numbers::egamma_v<ld>;
constexpr ld kLdEps = std::numeric_limits<ld>::epsilon();
constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_j_domain(double x, const char* name) {
  if (!std::isfinite(x) || x < 0.0) throw DomainError(name, "x>=0 and finite", std::to_string(x));
}

void require_y_domain(double x, const char* name) {
  if (!std::isfinite(x) || x <= 0.0) throw DomainError(name, "x>0 and finite", std::to_string(x));
}

}  // namespace

namespace detail {

BesselEval series(int order, bool second_kind, double x) {
  const ld xl = x;
  const ld z = xl * xl / 4;
  // First kind: J0 = sum t_k, J1 = sum u_k.
  // Second kind adds the harmonic-number weighted sums.
  ld sum = 0;
  ld harmonic_sum = 0;
  ld max_term = 0;
  ld term = order == 0 ? 1.0L : xl / 2;
  ld h_k = 0;  // H_k
  for (int k = 0; k < 300; ++k) {
    if (k > 0) {
      term *= -z / (order == 0 ? ld(k) * k : ld(k) * (k + 1));
      h_k += 1.0L / k;
    }
    sum += term;
    if (second_kind) {
      harmonic_sum += order == 0 ? term * h_k : term * (2 * h_k + 1.0L / (k + 1));
    }
    const ld mag = std::fabs(term) * (second_kind ? h_k + 1 : 1);
    if (mag > max_term) max_term = mag;
    if (k > 2 && ld(k) * k > z && std::fabs(term) * (h_k + 1) < kLdEps * 1e-3L * (max_term + 1)) break;
  }

  ld value = sum;
  if (second_kind) {
    const ld log_term = std::log(xl / 2) + kEulerGamma;
    if (order == 0) {
      value = 2 / kPi * (log_term * sum - harmonic_sum);
    } else {
      value = 2 / kPi * log_term * sum - 2 / (kPi * xl) - harmonic_sum / kPi;
    }
  }
  const double v = static_cast<double>(value);
  const double err = static_cast<double>(8 * kLdEps * max_term * (second_kind ? 2 : 1)) + kEps * std::abs(v);
  return {x, v, err};
}

BesselEval asymptotic(int order, bool second_kind, double x) {
  const ld xl = x;
  const ld mu = 4.0L * order * order;
  ld p = 1;
  ld q = 0;
  ld a = 1;
  ld last = 1;
  for (int k = 1; k < 200; ++k) {
    const ld odd = 2 * k - 1;
    const ld next = a * (mu - odd * odd) / (ld(k) * 8 * xl);
    if (std::fabs(next) >= std::fabs(a) || next == 0) break;
    a = next;
    last = std::fabs(a);
    // k = 1, 2, 3, 4, ...  ->  +Q, -P, -Q, +P, ...
    switch (k % 4) {
      case 1: q += a; break;
      case 2: p -= a; break;
      case 3: q -= a; break;
      case 0: p += a; break;
    }
    if (last < kLdEps * 1e-2L) break;
  }

  const ld c = std::cos(x);
  const ld s = std::sin(x);
  const ld r2 = std::numbers::sqrt2_v<ld>;
  // chi = x - pi/4 (order 0) or x - 3 pi/4 (order 1).
  const ld cos_chi = order == 0 ? (c + s) / r2 : (s - c) / r2;
  const ld sin_chi = order == 0 ? (s - c) / r2 : -(s + c) / r2;
  const ld amp = std::sqrt(2 / (kPi * xl));
  const ld value = second_kind ? amp * (p * sin_chi + q * cos_chi) : amp * (p * cos_chi - q * sin_chi);
  const double v = static_cast<double>(value);
  return {x, v, static_cast<double>(amp * (last + 4 * kLdEps)) + kEps * (std::abs(v) + kEps * x)};
}

}  // namespace detail

namespace {

BesselEval evaluate(int order, bool second_kind, double x) {
  return x < kSeriesSeam ? detail::series(order, second_kind, x) : detail::asymptotic(order, second_kind, x);
}

}  // namespace

BesselEval j0_eval(double x) {
  require_j_domain(x, "bessel_j0");
  return evaluate(0, false, x);
}

BesselEval j1_eval(double x) {
  require_j_domain(x, "bessel_j1");
  return evaluate(1, false, x);
}

BesselEval y0_eval(double x) {
  require_y_domain(x, "bessel_y0");
  return evaluate(0, true, x);
}

BesselEval y1_eval(double x) {
  require_y_domain(x, "bessel_y1");
  return evaluate(1, true, x);
}

double j0(double x) { return j0_eval(x).value; }
double j1(double x) { return j1_eval(x).value; }
double y0(double x) { return y0_eval(x).value; }
double y1(double x) { return y1_eval(x).value; }

}  // namespace wellblock::bessel
