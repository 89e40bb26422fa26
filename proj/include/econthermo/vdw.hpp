#pragma once

// Economic Van der Waals equation of state
//
//   (P + a/Qm^2)(Qm - b) = R I
//
// in molar volume Qm. Functions here take Qm unless the name says otherwise.

#include <cstddef>
#include <vector>

#include "econthermo/state.hpp"

namespace econthermo {

struct CriticalPoint {
  double P_c = 0.0;
  double Q_c = 0.0;
  double I_c = 0.0;
};

struct CoexistenceResult {
  double P_sat = 0.0;
  double Q_lo = 0.0;
  double Q_hi = 0.0;
  double area_residual = 0.0;
};

/// Derivatives of the isotherm at the critical point, raw and made
/// dimensionless with Q_c/P_c and Q_c^2/P_c.
struct CriticalDiagnostics {
  CriticalPoint point;
  double dP_dQ = 0.0;
  double d2P_dQ2 = 0.0;
  double scaled_dP_dQ = 0.0;
  double scaled_d2P_dQ2 = 0.0;
  bool pass = false;
};

/// P = RI/(Qm - b) - a/Qm^2. May be negative on deep subcritical isotherms.
/// Throws DomainError when Qm <= b or I <= 0.
double vdw_pressure(const VdWModel& model, double Q_m, double I);

/// n-mole form (P + a n^2/Q^2)(Q - nb) = nRI, via Qm = Q/n.
double vdw_pressure_total(const VdWModel& model, double Q, double I);

double vdw_dP_dQ(const VdWModel& model, double Q_m, double I);
double vdw_d2P_dQ2(const VdWModel& model, double Q_m, double I);

/// P_c = a/(27 b^2), Q_c = 3b, I_c = 8a/(27 b R)
CriticalPoint critical_point(const VdWModel& model);

/// Both diagnostics must vanish to 1e-10 for pass.
CriticalDiagnostics verify_critical(const VdWModel& model);

/// Molar-volume roots (> b) of
///   Q^3 - (b + RI/P) Q^2 + (a/P) Q - ab/P = 0
/// in ascending order; 1 or 3 entries, repeated roots listed with multiplicity.
std::vector<double> volume_roots(const VdWModel& model, double P, double I);

/// Molar volumes of the local minimum and maximum of a subcritical isotherm.
/// Throws DomainError when I >= I_c.
std::vector<double> spinodal_volumes(const VdWModel& model, double I);

/// Equal-area (Maxwell) tie line at a subcritical I. Bisects on P_sat between
/// the spinodal pressures using the closed-form area
///   RI ln((Q_hi - b)/(Q_lo - b)) - a (Q_hi - Q_lo)/(Q_hi Q_lo) - P_sat (Q_hi - Q_lo).
/// Throws DomainError when I >= I_c (1e-9 relative), SolverError if the
/// bracket degenerates or the residual misses 1e-10 P_sat (Q_hi - Q_lo).
CoexistenceResult maxwell_construction(const VdWModel& model, double I);

/// Signed equal-area defect of a candidate tie line at pressure P between Q_lo and Q_hi.
double equal_area_defect(const VdWModel& model, double I, double P, double Q_lo, double Q_hi);

/// Sampled isotherm on [Q_min, Q_max] (log-uniform). With `corrected` and
/// I < I_c the coexistence segment is replaced by the flat tie line.
/// Throws DomainError on bad bounds or when an emitted sample has P <= 0.
ProcessPath vdw_isotherm_path(const VdWModel& model, double I, double Q_min, double Q_max,
                              std::size_t m, bool corrected);

/// Reduced-variable form 8 I_r/(3 Q_r - 1) - 3/Q_r^2 shared by every model.
double reduced_vdw_pressure(double Q_r, double I_r);

struct SurfaceSample {
  double Q = 0.0;
  double P = 0.0;
  double I = 0.0;
};

/// Raw pressure over a Q x I grid (Q log-uniform, I uniform), row-major in I.
std::vector<SurfaceSample> vdw_surface_grid(const VdWModel& model, double Q_min, double Q_max,
                                            std::size_t nQ, double I_min, double I_max,
                                            std::size_t nI);

}  // namespace econthermo
