#include "econthermo/catastrophe.hpp"

#include <algorithm>
#include <cmath>

#include "econthermo/cubic.hpp"
#include "econthermo/errors.hpp"

namespace econthermo {

CuspCoords phi(const VdWModel& m, const StatePoint& s) {
  const double a = m.cohesion();
  const double b = m.excluded_volume();
  const double P = s.price();
  const double Q = s.volume();
  const double RI = m.income_constant() * s.stability();
  // Common-denominator forms keep the critical point at exactly zero when the
  // inputs are exact.
  return {
      (3.0 * b - Q) / (3.0 * b * Q),
      (P * b * b + RI * b - a / 3.0) / (a * b * b),
      (-18.0 * P * b * b + 9.0 * RI * b - 2.0 * a) / (27.0 * a * b * b * b),
  };
}

StatePoint phi_inverse(const VdWModel& m, const CuspCoords& c) {
  const double a = m.cohesion();
  const double b = m.excluded_volume();
  const double A = c.alpha + 1.0 / (3.0 * b * b);        // P/a + RI/(ab)
  const double B = c.beta + 2.0 / (27.0 * b * b * b);    // -2P/(3ab) + RI/(3ab^2)
  const double Q = 3.0 * b / (3.0 * b * c.x + 1.0);
  const double P = a * (A / 3.0 - b * B);
  const double I = b * (a * A - P) / m.income_constant();
  if (!(Q > 0.0) || !(P > 0.0) || !(I > 0.0) || !std::isfinite(Q)) {
    throw DomainError("cusp coordinates lie outside the image of the positive octant");
  }
  return make_state(P, Q, I);
}

double surface_residual(const CuspCoords& c) { return (c.x * c.x + c.alpha) * c.x + c.beta; }

double scaled_surface_residual(const CuspCoords& c) {
  const double scale =
      std::max({std::abs(c.x * c.x * c.x), std::abs(c.alpha * c.x), std::abs(c.beta), 1.0});
  return std::abs(surface_residual(c)) / scale;
}

double cusp_potential(const CuspCoords& c) {
  const double x2 = c.x * c.x;
  return 0.25 * x2 * x2 + 0.5 * c.alpha * x2 + c.beta * c.x;
}

std::vector<double> cusp_stationary_points(double alpha, double beta) {
  return solve_cubic(0.0, alpha, beta);
}

double cusp_discriminant(double alpha, double beta) {
  return -4.0 * alpha * alpha * alpha - 27.0 * beta * beta;
}

std::vector<BifurcationSample> bifurcation_grid(double alpha_min, double alpha_max,
                                                double beta_min, double beta_max,
                                                std::size_t n) {
  if (n < 2 || !(alpha_max > alpha_min) || !(beta_max > beta_min)) {
    throw DomainError("bifurcation grid needs n >= 2 and non-empty ranges");
  }
  std::vector<BifurcationSample> grid;
  grid.reserve(n * n);
  const auto at = [n](double lo, double hi, std::size_t i) {
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  };
  for (std::size_t j = 0; j < n; ++j) {
    const double beta = at(beta_min, beta_max, j);
    for (std::size_t i = 0; i < n; ++i) {
      const double alpha = at(alpha_min, alpha_max, i);
      std::vector<double> roots = cusp_stationary_points(alpha, beta);
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      grid.push_back({alpha, beta, static_cast<int>(roots.size())});
    }
  }
  return grid;
}

}  // namespace econthermo
