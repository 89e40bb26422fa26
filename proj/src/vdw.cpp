#include "econthermo/vdw.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "econthermo/cubic.hpp"
#include "econthermo/errors.hpp"
#include "econthermo/format.hpp"
#include "econthermo/ideal_income.hpp"

namespace econthermo {

namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw DomainError(std::string(name) + " must be finite and > 0, got " +
                      format_double(value));
  }
}

void require_outside_core(const VdWModel& m, double Q_m) {
  if (!std::isfinite(Q_m) || !(Q_m > m.excluded_volume())) {
    throw DomainError("molar volume must exceed b, got " + format_double(Q_m));
  }
}

constexpr int kMaxBisection = 200;

}  // namespace

double vdw_pressure(const VdWModel& m, double Q_m, double I) {
  require_outside_core(m, Q_m);
  require_positive(I, "I");
  return m.income_constant() * I / (Q_m - m.excluded_volume()) - m.cohesion() / (Q_m * Q_m);
}

double vdw_pressure_total(const VdWModel& m, double Q, double I) {
  return vdw_pressure(m, Q / m.moles(), I);
}

double vdw_dP_dQ(const VdWModel& m, double Q_m, double I) {
  require_outside_core(m, Q_m);
  require_positive(I, "I");
  const double d = Q_m - m.excluded_volume();
  return -m.income_constant() * I / (d * d) + 2.0 * m.cohesion() / (Q_m * Q_m * Q_m);
}

double vdw_d2P_dQ2(const VdWModel& m, double Q_m, double I) {
  require_outside_core(m, Q_m);
  require_positive(I, "I");
  const double d = Q_m - m.excluded_volume();
  const double q2 = Q_m * Q_m;
  return 2.0 * m.income_constant() * I / (d * d * d) - 6.0 * m.cohesion() / (q2 * q2);
}

CriticalPoint critical_point(const VdWModel& m) {
  const double a = m.cohesion();
  const double b = m.excluded_volume();
  return {a / (27.0 * b * b), 3.0 * b, 8.0 * a / (27.0 * b * m.income_constant())};
}

CriticalDiagnostics verify_critical(const VdWModel& m) {
  CriticalDiagnostics d;
  d.point = critical_point(m);
  const auto& c = d.point;
  d.dP_dQ = vdw_dP_dQ(m, c.Q_c, c.I_c);
  d.d2P_dQ2 = vdw_d2P_dQ2(m, c.Q_c, c.I_c);
  d.scaled_dP_dQ = d.dP_dQ * c.Q_c / c.P_c;
  d.scaled_d2P_dQ2 = d.d2P_dQ2 * c.Q_c * c.Q_c / c.P_c;
  d.pass = std::abs(d.scaled_dP_dQ) <= 1e-10 && std::abs(d.scaled_d2P_dQ2) <= 1e-10;
  return d;
}

std::vector<double> volume_roots(const VdWModel& m, double P, double I) {
  require_positive(P, "P");
  require_positive(I, "I");
  const double a = m.cohesion();
  const double b = m.excluded_volume();
  const double c2 = -(b + m.income_constant() * I / P);
  const double c1 = a / P;
  const double c0 = -a * b / P;
  std::vector<double> roots = solve_cubic(c2, c1, c0);
  std::erase_if(roots, [b](double q) { return !(q > b); });
  return roots;
}

std::vector<double> spinodal_volumes(const VdWModel& m, double I) {
  require_positive(I, "I");
  const CriticalPoint c = critical_point(m);
  if (!(I < c.I_c)) throw DomainError("isotherm is not subcritical (I >= I_c)");
  // dP/dQ = 0  <=>  RI Q^3 - 2a (Q - b)^2 = 0
  const double a = m.cohesion();
  const double b = m.excluded_volume();
  const double k = 2.0 * a / (m.income_constant() * I);
  std::vector<double> roots = solve_cubic(-k, 2.0 * k * b, -k * b * b);
  std::erase_if(roots, [b](double q) { return !(q > b); });
  // the third root of the numerator lies below b
  if (roots.size() != 2) throw SolverError("could not isolate two spinodal volumes");
  return roots;
}

double equal_area_defect(const VdWModel& m, double I, double P, double Q_lo, double Q_hi) {
  const double a = m.cohesion();
  const double b = m.excluded_volume();
  const double width = Q_hi - Q_lo;
  return m.income_constant() * I * std::log1p(width / (Q_lo - b)) -
         a * width / (Q_hi * Q_lo) - P * width;
}

CoexistenceResult maxwell_construction(const VdWModel& m, double I) {
  require_positive(I, "I");
  const CriticalPoint c = critical_point(m);
  if (!(I < c.I_c * (1.0 - 1e-9))) {
    throw DomainError("isotherm is supercritical or critical (I >= I_c); no coexistence");
  }
  const std::vector<double> spin = spinodal_volumes(m, I);
  double lo = std::max(vdw_pressure(m, spin[0], I), 1e-12 * c.P_c);
  double hi = vdw_pressure(m, spin[1], I);
  if (!(hi > lo)) throw SolverError("Maxwell bracket is empty");

  CoexistenceResult best;
  double best_abs = INFINITY;
  for (int it = 0; it < kMaxBisection; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const std::vector<double> roots = volume_roots(m, mid, I);
    if (roots.size() != 3 || !(roots.back() > roots.front())) {
      throw SolverError("Maxwell bracket collapsed: fewer than three volume roots");
    }
    const double g = equal_area_defect(m, I, mid, roots.front(), roots.back());
    if (std::abs(g) < best_abs) {
      best_abs = std::abs(g);
      best = {mid, roots.front(), roots.back(), std::abs(g)};
    }
    if (g == 0.0) break;
    // The defect decreases with P: a low tie line leaves net positive area.
    (g > 0.0 ? lo : hi) = mid;
  }
  if (!(best.area_residual <= 1e-10 * best.P_sat * (best.Q_hi - best.Q_lo))) {
    throw SolverError("Maxwell construction did not reach the equal-area tolerance");
  }
  return best;
}

ProcessPath vdw_isotherm_path(const VdWModel& m, double I, double Q_min, double Q_max,
                              std::size_t n, bool corrected) {
  require_positive(I, "I");
  require_outside_core(m, Q_min);
  if (!std::isfinite(Q_max) || !(Q_max > Q_min)) throw DomainError("isotherm requires Q_max > Q_min");
  if (n < 2) throw DomainError("sample count must be >= 2");

  std::vector<double> Q = geometric_samples(Q_min, Q_max, n);
  std::vector<double> P(n);
  for (std::size_t i = 0; i < n; ++i) P[i] = vdw_pressure(m, Q[i], I);

  if (corrected && I < critical_point(m).I_c * (1.0 - 1e-9)) {
    const CoexistenceResult tie = maxwell_construction(m, I);
    for (std::size_t i = 0; i < n; ++i) {
      if (Q[i] >= tie.Q_lo && Q[i] <= tie.Q_hi) P[i] = tie.P_sat;
    }
  }

  std::vector<ExtendedState> samples;
  samples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(P[i] > 0.0)) {
      throw DomainError("isotherm leaves the positive price octant at Q = " + format_double(Q[i]));
    }
    samples.push_back({make_state(P[i], Q[i], I), 0.0, 0.0});
  }
  return ProcessPath::make(PathKind::VdWIsotherm, std::move(samples), model_id(m));
}

double reduced_vdw_pressure(double Q_r, double I_r) {
  if (!(Q_r > 1.0 / 3.0)) throw DomainError("reduced volume must exceed 1/3");
  return 8.0 * I_r / (3.0 * Q_r - 1.0) - 3.0 / (Q_r * Q_r);
}

std::vector<SurfaceSample> vdw_surface_grid(const VdWModel& m, double Q_min, double Q_max,
                                            std::size_t nQ, double I_min, double I_max,
                                            std::size_t nI) {
  require_outside_core(m, Q_min);
  require_positive(I_min, "I_min");
  if (!(Q_max > Q_min) || !(I_max >= I_min) || nQ < 2 || nI < 1) {
    throw DomainError("surface grid needs Q_max > Q_min, I_max >= I_min, nQ >= 2, nI >= 1");
  }
  const std::vector<double> Q = geometric_samples(Q_min, Q_max, nQ);
  std::vector<SurfaceSample> grid;
  grid.reserve(nQ * nI);
  for (std::size_t j = 0; j < nI; ++j) {
    const double I =
        nI == 1 ? I_min : I_min + (I_max - I_min) * static_cast<double>(j) / static_cast<double>(nI - 1);
    for (double q : Q) grid.push_back({q, vdw_pressure(m, q, I), I});
  }
  return grid;
}

}  // namespace econthermo
