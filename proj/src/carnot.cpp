#include "econthermo/carnot.hpp"

#include <algorithm>
#include <cmath>

#include "econthermo/errors.hpp"
#include "econthermo/ideal_income.hpp"

namespace econthermo {

void validate(const CarnotSpec& spec) {
  const auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(spec.I_H) || !finite(spec.I_C) || !(spec.I_C > 0.0) || !(spec.I_H > spec.I_C)) {
    throw DomainError("Carnot cycle requires I_H > I_C > 0");
  }
  if (!finite(spec.Q_1) || !finite(spec.Q_2) || !(spec.Q_1 > 0.0) || !(spec.Q_2 > spec.Q_1)) {
    throw DomainError("Carnot cycle requires Q_2 > Q_1 > 0");
  }
  if (spec.samples_per_leg < 2) throw DomainError("samples_per_leg must be >= 2");
}

CycleReport build_cycle(const CarnotSpec& spec) {
  validate(spec);
  const IdealIncomeModel& m = spec.model;
  const std::size_t k = spec.samples_per_leg;

  const double stretch = std::pow(spec.I_H / spec.I_C, m.half_dof());
  const double Q_3 = spec.Q_2 * stretch;
  const double Q_4 = spec.Q_1 * stretch;

  const auto on_eos = [&](double Q, double I) { return make_state(m.nR() * I / Q, Q, I); };
  const StatePoint v1 = on_eos(spec.Q_1, spec.I_H);
  const StatePoint v2 = on_eos(spec.Q_2, spec.I_H);
  const StatePoint v3 = on_eos(Q_3, spec.I_C);
  const StatePoint v4 = on_eos(Q_4, spec.I_C);

  CycleReport r;
  r.vertices = {extend(m, v1), extend(m, v2), extend(m, v3), extend(m, v4)};
  r.legs = {
      isotherm_path(m, spec.I_H, spec.Q_1, spec.Q_2, k),
      adiabat_path(m, v2, Q_3, k),
      isotherm_path(m, spec.I_C, Q_3, Q_4, k),
      adiabat_path(m, v4, spec.Q_1, k),
  };

  double W = 0.0;
  double dG = 0.0;
  for (const auto& leg : r.legs) {
    W += work_along(leg);
    dG += growth_change_along(leg);
  }
  r.W = W;
  r.q_H = goods_production_along(r.legs[0]);
  r.q_C = -goods_production_along(r.legs[2]);
  r.eta = efficiency(spec.I_H, spec.I_C);

  double E_min = r.vertices[0].entropy;
  double E_max = E_min;
  for (const auto& v : r.vertices) {
    E_min = std::min(E_min, v.entropy);
    E_max = std::max(E_max, v.entropy);
  }
  r.E_A = E_min;
  r.E_B = E_max;
  r.residual_dG = std::abs(dG);
  r.residual_W = std::abs(r.W - (r.q_H - r.q_C));
  r.orientation = Orientation::Clockwise;
  return r;
}

double wealth_rectangle(double I_H, double I_C, double E_A, double E_B) {
  if (!(I_H >= I_C) || !(E_B >= E_A)) {
    throw DomainError("wealth rectangle requires I_H >= I_C and E_B >= E_A");
  }
  return (I_H - I_C) * (E_B - E_A);
}

double goods_hot(double I_H, double E_A, double E_B) {
  if (!(E_B > E_A)) throw DomainError("goods_hot requires E_B > E_A");
  return I_H * (E_B - E_A);
}

double goods_cold(double I_C, double E_A, double E_B) {
  if (!(E_B > E_A)) throw DomainError("goods_cold requires E_B > E_A");
  return I_C * (E_B - E_A);
}

double efficiency(double I_H, double I_C) {
  if (!std::isfinite(I_H) || !std::isfinite(I_C) || !(I_C > 0.0) || !(I_H > I_C)) {
    throw DomainError("efficiency requires I_H > I_C > 0");
  }
  return 1.0 - I_C / I_H;
}

CycleReport reverse_cycle(const CycleReport& report) {
  if (report.legs.size() != 4) throw DomainError("cycle report must carry four legs");
  CycleReport r = report;
  r.legs.clear();
  for (auto it = report.legs.rbegin(); it != report.legs.rend(); ++it) {
    r.legs.push_back(it->reversed());
  }
  r.W = -report.W;
  r.q_H = -report.q_H;
  r.q_C = -report.q_C;
  r.orientation = report.orientation == Orientation::Clockwise ? Orientation::Counterclockwise
                                                               : Orientation::Clockwise;
  return r;
}

namespace {

double relative_gap(const StatePoint& a, const StatePoint& b) {
  const auto rel = [](double x, double y) {
    return std::abs(x - y) / std::max(std::abs(x), std::abs(y));
  };
  return std::max({rel(a.price(), b.price()), rel(a.volume(), b.volume()),
                   rel(a.stability(), b.stability())});
}

}  // namespace

CycleDiagnostics validate_cycle(const CycleReport& report) {
  CycleDiagnostics d;
  if (report.legs.empty()) return d;

  double dG = 0.0;
  for (std::size_t i = 0; i < report.legs.size(); ++i) {
    const auto& leg = report.legs[i];
    const auto& next = report.legs[(i + 1) % report.legs.size()];
    dG += growth_change_along(leg);
    d.loop_PdQ += work_along(leg, Integration::Trapezoid);
    d.loop_IdE += goods_production_along(leg, Integration::Trapezoid);
    d.continuity = std::max(d.continuity, relative_gap(leg.back().point, next.front().point));
  }
  d.closure_dG = std::abs(dG);
  d.area_mismatch = std::abs(d.loop_PdQ - d.loop_IdE);
  d.first_law = std::abs(report.W - (report.q_H - report.q_C));
  d.eta_residual = report.q_H == 0.0 ? 0.0 : std::abs(report.W / report.q_H - report.eta);

  const double W = std::abs(report.W);
  d.pass = d.closure_dG <= 1e-8 * W && d.area_mismatch <= 1e-6 * W &&
           d.first_law <= 1e-9 * std::abs(report.q_H) && d.continuity <= 1e-9 &&
           d.eta_residual <= 1e-9 * std::abs(report.eta);
  return d;
}

}  // namespace econthermo
