#include "econthermo/state.hpp"

#include <algorithm>
#include <cmath>

#include "econthermo/errors.hpp"
#include "econthermo/format.hpp"

namespace econthermo {

namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw DomainError(std::string(name) + " must be finite and > 0, got " +
                      format_double(value));
  }
}

}  // namespace

StatePoint StatePoint::make(double P, double Q, double I) {
  require_positive(P, "P");
  require_positive(Q, "Q");
  require_positive(I, "I");
  return StatePoint(P, Q, I);
}

StatePoint make_state(double P, double Q, double I) { return StatePoint::make(P, Q, I); }

IdealIncomeModel IdealIncomeModel::make(double n, double R, int f, double Q_ref,
                                        double I_ref) {
  require_positive(n, "n");
  require_positive(R, "R");
  if (f != 3 && f != 5 && f != 6) {
    throw DomainError("degrees of freedom must be 3, 5 or 6, got " + std::to_string(f));
  }
  require_positive(Q_ref, "Q_ref");
  require_positive(I_ref, "I_ref");
  return IdealIncomeModel(n, R, f, Q_ref, I_ref);
}

VdWModel VdWModel::make(double a, double b, double R, double n) {
  require_positive(a, "a");
  require_positive(b, "b");
  require_positive(R, "R");
  require_positive(n, "n");
  return VdWModel(a, b, R, n);
}

std::string model_id(const IdealIncomeModel& m) {
  return "ideal-income(n=" + format_double(m.moles()) +
         ",R=" + format_double(m.income_constant()) +
         ",f=" + std::to_string(m.degrees_of_freedom()) + ")";
}

std::string model_id(const VdWModel& m) {
  return "vdw(a=" + format_double(m.cohesion()) + ",b=" + format_double(m.excluded_volume()) +
         ",R=" + format_double(m.income_constant()) + ",n=" + format_double(m.moles()) + ")";
}

ExtendedState extend(const IdealIncomeModel& m, const StatePoint& p) {
  const double E = m.nR() * std::log(p.volume() / m.reference_volume()) +
                   m.half_dof() * m.nR() * std::log(p.stability() / m.reference_stability());
  const double G = m.half_dof() * m.nR() * p.stability();
  return {p, E, G};
}

std::string_view to_string(PathKind kind) {
  switch (kind) {
    case PathKind::IsoIps: return "IsoIps";
    case PathKind::Isentropic: return "Isentropic";
    case PathKind::VdWIsotherm: return "VdWIsotherm";
  }
  return "?";
}

PathKind path_kind_from_string(std::string_view name) {
  if (name == "IsoIps") return PathKind::IsoIps;
  if (name == "Isentropic") return PathKind::Isentropic;
  if (name == "VdWIsotherm") return PathKind::VdWIsotherm;
  throw DomainError("unknown path kind '" + std::string(name) + "'");
}

ProcessPath ProcessPath::make(PathKind kind, std::vector<ExtendedState> samples,
                              std::string model_id) {
  if (samples.size() < 2) throw PathError("a process path needs at least 2 samples");

  // Either strictly monotone in Q, or the degenerate constant path.
  bool increasing = true, decreasing = true, constant = true;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const double q0 = samples[i - 1].point.volume();
    const double q1 = samples[i].point.volume();
    increasing = increasing && q1 > q0;
    decreasing = decreasing && q1 < q0;
    constant = constant && q1 == q0;
  }
  if (!increasing && !decreasing && !constant) {
    throw PathError("Q must be strictly monotone along a path");
  }

  const ExtendedState& first = samples.front();
  if (kind == PathKind::IsoIps || kind == PathKind::VdWIsotherm) {
    for (const auto& s : samples) {
      if (s.point.stability() != first.point.stability()) {
        throw PathError("iso-ips path samples must share the same I");
      }
    }
  } else if (kind == PathKind::Isentropic) {
    double scale = 1.0;
    for (const auto& s : samples) {
      scale = std::max({scale, std::abs(s.entropy), s.growth / s.point.stability()});
    }
    for (const auto& s : samples) {
      if (std::abs(s.entropy - first.entropy) > 1e-12 * scale) {
        throw PathError("isentropic path samples must share the same E");
      }
    }
  }
  return ProcessPath(kind, std::move(samples), std::move(model_id));
}

ProcessPath ProcessPath::reversed() const {
  std::vector<ExtendedState> rev(samples_.rbegin(), samples_.rend());
  return ProcessPath(kind_, std::move(rev), model_id_);
}

std::string_view to_string(Orientation o) {
  return o == Orientation::Clockwise ? "clockwise" : "counterclockwise";
}

Orientation orientation_from_string(std::string_view name) {
  if (name == "clockwise") return Orientation::Clockwise;
  if (name == "counterclockwise") return Orientation::Counterclockwise;
  throw DomainError("unknown orientation '" + std::string(name) + "'");
}

}  // namespace econthermo
