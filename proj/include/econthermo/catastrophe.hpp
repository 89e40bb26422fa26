#pragma once

// Map from (P, Q, I) space onto cusp catastrophe coordinates (x, alpha, beta):
//
//   x     = 1/Q - 1/(3b)
//   alpha = P/a + RI/(ab) - 1/(3b^2)
//   beta  = -2P/(3ab) + RI/(3ab^2) - 2/(27b^3)
//
// x is the depressed-cubic variable of the Van der Waals volume equation
// written in 1/Q, so the Van der Waals surface lands on x^3 + alpha x + beta = 0
// and the critical point lands on the origin.

#include <cstddef>
#include <vector>

#include "econthermo/state.hpp"

namespace econthermo {

struct CuspCoords {
  double x = 0.0;
  double alpha = 0.0;
  double beta = 0.0;

  friend bool operator==(const CuspCoords&, const CuspCoords&) = default;
};

CuspCoords phi(const VdWModel& model, const StatePoint& s);

/// Closed-form inverse. Throws DomainError if the recovered P, Q or I is not
/// positive, i.e. c is outside the image of the open octant.
StatePoint phi_inverse(const VdWModel& model, const CuspCoords& c);

/// x^3 + alpha x + beta
double surface_residual(const CuspCoords& c);

/// Residual divided by max(|x|^3, |alpha x|, |beta|, 1).
double scaled_surface_residual(const CuspCoords& c);

/// x^4/4 + alpha x^2/2 + beta x
double cusp_potential(const CuspCoords& c);

/// Real roots of x^3 + alpha x + beta = 0, ascending, with multiplicity.
std::vector<double> cusp_stationary_points(double alpha, double beta);

/// -4 alpha^3 - 27 beta^2; positive iff three distinct stationary points.
double cusp_discriminant(double alpha, double beta);

struct BifurcationSample {
  double alpha = 0.0;
  double beta = 0.0;
  int root_count = 0;  // distinct real stationary points
};

/// Uniform n x n grid over [alpha_min, alpha_max] x [beta_min, beta_max].
std::vector<BifurcationSample> bifurcation_grid(double alpha_min, double alpha_max,
                                                double beta_min, double beta_max,
                                                std::size_t n);

}  // namespace econthermo
