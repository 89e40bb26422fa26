#pragma once

/**
 * @file carnot.hpp
 * @brief Four-step economic Carnot cycle under the ideal income law.
 *
 * Vertices follow the Q-P diagram numbering:
 *   1 -> 2  iso-ips expansion at I_H
 *   2 -> 3  isentropic expansion down to I_C
 *   3 -> 4  iso-ips compression at I_C
 *   4 -> 1  isentropic compression back up to I_H
 *
 * The forward cycle runs clockwise on both the Q-P and the E-I diagrams.
 */

#include <cstddef>

#include "econthermo/state.hpp"

namespace econthermo {

struct CarnotSpec {
  IdealIncomeModel model;
  double I_H = 0.0;
  double I_C = 0.0;
  double Q_1 = 0.0;
  double Q_2 = 0.0;
  std::size_t samples_per_leg = 1000;
};

/// Throws DomainError unless I_H > I_C > 0, Q_2 > Q_1 > 0 and samples_per_leg >= 2.
void validate(const CarnotSpec& spec);

CycleReport build_cycle(const CarnotSpec& spec);

/// (I_H - I_C)(E_B - E_A). Accepts the zero-gap boundaries I_H == I_C and E_B == E_A.
double wealth_rectangle(double I_H, double I_C, double E_A, double E_B);

double goods_hot(double I_H, double E_A, double E_B);
double goods_cold(double I_C, double E_A, double E_B);

/// 1 - I_C/I_H. Throws DomainError unless I_H > I_C > 0.
double efficiency(double I_H, double I_C);

/// Consumption cycle: same vertices, legs traversed counterclockwise,
/// W, q_H and q_C negated.
CycleReport reverse_cycle(const CycleReport& report);

struct CycleDiagnostics {
  double closure_dG = 0.0;       // |sum of dG over the legs|
  double area_mismatch = 0.0;    // |trapezoid loop of P dQ - trapezoid loop of I dE|
  double first_law = 0.0;        // |W - (q_H - q_C)|
  double continuity = 0.0;       // largest relative gap between consecutive legs
  double eta_residual = 0.0;     // |W/q_H - eta|
  double loop_PdQ = 0.0;
  double loop_IdE = 0.0;
  bool pass = false;
};

/// Recomputes the loop integrals from the attached legs. Bounds:
/// closure_dG <= 1e-8 |W|, area_mismatch <= 1e-6 |W|, first_law <= 1e-9 |q_H|,
/// continuity <= 1e-9, eta_residual <= 1e-9 eta.
CycleDiagnostics validate_cycle(const CycleReport& report);

}  // namespace econthermo
