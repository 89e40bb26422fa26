#pragma once

// Ideal income equation of state PQ = nRI and its reversible processes.
//
// Sign convention: work done by the system is positive, so expansion
// (increasing Q) yields positive work.

#include <cstddef>

#include "econthermo/state.hpp"

namespace econthermo {

/// P = nRI / Q
double pressure(const IdealIncomeModel& model, double Q, double I);

/// G = (f/2) nRI
double growth_potential(const IdealIncomeModel& model, double I);

/// E = nR ln(Q/Q_ref) + (f/2) nR ln(I/I_ref)
double entropy(const IdealIncomeModel& model, double Q, double I);

/// nR ln(Q_to/Q_from) along an iso-ips; negative for compression.
double delta_entropy_isothermal(const IdealIncomeModel& model, double Q_from, double Q_to);

/// Point reached from `from` by an isentropic change of volume to Q_to.
///
/// I scales as (Q_from/Q_to)^(2/f), so P Q^((f+2)/f) is invariant. Throws
/// ModelError when `from` is not on the model's EOS surface (1e-9 relative).
StatePoint adiabat_endpoint(const IdealIncomeModel& model, const StatePoint& from, double Q_to);

/// Iso-ips with m samples, Q log-uniformly spaced from Q_from to Q_to.
ProcessPath isotherm_path(const IdealIncomeModel& model, double I, double Q_from, double Q_to,
                          std::size_t m);

/// Isentropic path with m samples from `from` to volume Q_to. Q_to == Q_from
/// gives m identical samples.
ProcessPath adiabat_path(const IdealIncomeModel& model, const StatePoint& from, double Q_to,
                         std::size_t m);

enum class Integration {
  Auto,       // analytic where the path kind allows, trapezoid otherwise
  Trapezoid,  // composite trapezoid over the stored samples
};

/// Integral of P dQ along the path.
double work_along(const ProcessPath& path, Integration rule = Integration::Auto);

/// Integral of I dE along the path (goods production, the heat analog).
double goods_production_along(const ProcessPath& path, Integration rule = Integration::Auto);

/// Integral of dG along the path, i.e. G_end - G_start.
double growth_change_along(const ProcessPath& path);

/// Log-uniform grid of m points from `from` to `to` inclusive, endpoints exact.
std::vector<double> geometric_samples(double from, double to, std::size_t m);

}  // namespace econthermo
