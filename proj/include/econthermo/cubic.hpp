#pragma once

#include <vector>

namespace econthermo {

/// Real roots of x^3 + c2 x^2 + c1 x + c0 = 0 in ascending order.
///
/// Closed form (trigonometric for three real roots, Cardano for one) on the
/// depressed cubic, followed by Newton polishing of each root. A double root
/// is reported twice and a triple root three times, so the result has either
/// 1 or 3 entries. Coefficients whose depressed form or discriminant is zero
/// to within its own rounding error are treated as exactly degenerate.
///
/// Throws SolverError if polishing does not converge within 100 iterations.
std::vector<double> solve_cubic(double c2, double c1, double c0);

/// x^3 + c2 x^2 + c1 x + c0, Horner form.
double cubic_value(double c2, double c1, double c0, double x);

/// Rounding scale of cubic_value at x: |x|^3 + |c2| x^2 + |c1 x| + |c0|.
double cubic_scale(double c2, double c1, double c0, double x);

}  // namespace econthermo
