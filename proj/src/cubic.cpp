#include "econthermo/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "econthermo/errors.hpp"

namespace econthermo {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPolishTol = 1e-12;
constexpr int kMaxPolish = 100;

// Newton iteration on the monic cubic. A step is only accepted if it reduces
// |f|; near a multiple root this keeps the closed-form estimate.
double polish(double c2, double c1, double c0, double x) {
  double f = cubic_value(c2, c1, c0, x);
  for (int it = 0; it < kMaxPolish; ++it) {
    if (std::abs(f) <= 2.0 * kEps * cubic_scale(c2, c1, c0, x)) break;
    const double df = (3.0 * x + 2.0 * c2) * x + c1;
    if (df == 0.0 || !std::isfinite(df)) break;
    const double next = x - f / df;
    const double f_next = cubic_value(c2, c1, c0, next);
    if (!(std::abs(f_next) < std::abs(f))) break;
    x = next;
    f = f_next;
  }
  if (!(std::abs(f) <= kPolishTol * cubic_scale(c2, c1, c0, x))) {
    throw SolverError("cubic root polishing did not converge");
  }
  return x;
}

}  // namespace

double cubic_value(double c2, double c1, double c0, double x) {
  return ((x + c2) * x + c1) * x + c0;
}

double cubic_scale(double c2, double c1, double c0, double x) {
  const double ax = std::abs(x);
  return ax * ax * ax + std::abs(c2) * ax * ax + std::abs(c1) * ax + std::abs(c0);
}

std::vector<double> solve_cubic(double c2, double c1, double c0) {
  // x = t + shift turns the cubic into t^3 + p t + q.
  const double shift = -c2 / 3.0;
  const double c2sq = c2 * c2;
  const double p = c1 - c2sq / 3.0;
  const double q = (2.0 * c2sq * c2 / 27.0 - c2 * c1 / 3.0) + c0;

  // Rounding bounds of p and q from the magnitudes of the terms that cancel.
  const double p_err = 8.0 * kEps * (std::abs(c1) + c2sq / 3.0);
  const double q_err =
      8.0 * kEps * (2.0 * std::abs(c2sq * c2) / 27.0 + std::abs(c2 * c1) / 3.0 + std::abs(c0));

  std::vector<double> t;
  if (std::abs(p) <= p_err && std::abs(q) <= q_err) {
    t = {0.0, 0.0, 0.0};
  } else {
    const double half_q = 0.5 * q;
    const double third_p = p / 3.0;
    const double disc = half_q * half_q + third_p * third_p * third_p;
    const double disc_err = std::abs(half_q) * q_err + third_p * third_p * p_err +
                            4.0 * kEps * (half_q * half_q + std::abs(third_p * third_p * third_p));
    if (std::abs(disc) <= disc_err && p != 0.0) {
      // One simple and one double root.
      const double simple = 3.0 * q / p;
      const double twice = -1.5 * q / p;
      t = {simple, twice, twice};
    } else if (disc < 0.0) {
      const double r = std::sqrt(-third_p);
      const double cos_arg = std::clamp(-half_q / (r * r * r), -1.0, 1.0);
      const double theta = std::acos(cos_arg) / 3.0;
      constexpr double kTwoThirdsPi = 2.0 * std::numbers::pi / 3.0;
      t = {2.0 * r * std::cos(theta), 2.0 * r * std::cos(theta - kTwoThirdsPi),
           2.0 * r * std::cos(theta + kTwoThirdsPi)};
    } else {
      // Pick the sign that avoids cancellation in -q/2 -+ sqrt(disc).
      const double s = std::sqrt(disc);
      const double u = std::cbrt(half_q >= 0.0 ? -half_q - s : -half_q + s);
      const double v = u == 0.0 ? 0.0 : -third_p / u;
      t = {u + v};
    }
  }

  std::vector<double> roots;
  roots.reserve(t.size());
  for (double ti : t) roots.push_back(polish(c2, c1, c0, ti + shift));
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace econthermo
