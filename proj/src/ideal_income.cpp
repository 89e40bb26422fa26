#include "econthermo/ideal_income.hpp"

#include <cmath>
#include <string>

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

void require_samples(std::size_t m) {
  if (m < 2) throw DomainError("sample count must be >= 2");
}

void require_path(const ProcessPath& path) {
  if (path.samples().size() < 2) throw PathError("path has fewer than 2 samples");
}

}  // namespace

double pressure(const IdealIncomeModel& model, double Q, double I) {
  require_positive(Q, "Q");
  require_positive(I, "I");
  return model.nR() * I / Q;
}

double growth_potential(const IdealIncomeModel& model, double I) {
  require_positive(I, "I");
  return model.half_dof() * model.nR() * I;
}

double entropy(const IdealIncomeModel& model, double Q, double I) {
  require_positive(Q, "Q");
  require_positive(I, "I");
  return extend(model, make_state(model.nR() * I / Q, Q, I)).entropy;
}

double delta_entropy_isothermal(const IdealIncomeModel& model, double Q_from, double Q_to) {
  require_positive(Q_from, "Q_from");
  require_positive(Q_to, "Q_to");
  return model.nR() * std::log(Q_to / Q_from);
}

StatePoint adiabat_endpoint(const IdealIncomeModel& model, const StatePoint& from, double Q_to) {
  require_positive(Q_to, "Q_to");
  const double nRI = model.nR() * from.stability();
  if (std::abs(from.price() * from.volume() - nRI) > 1e-9 * nRI) {
    throw ModelError("starting point is not on the ideal income surface PQ = nRI");
  }
  if (Q_to == from.volume()) return from;
  const double I_to =
      from.stability() * std::pow(from.volume() / Q_to, 2.0 / model.degrees_of_freedom());
  return make_state(model.nR() * I_to / Q_to, Q_to, I_to);
}

std::vector<double> geometric_samples(double from, double to, std::size_t m) {
  std::vector<double> q(m);
  const double log_ratio = std::log(to / from);
  for (std::size_t i = 0; i < m; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(m - 1);
    q[i] = from * std::exp(t * log_ratio);
  }
  q.front() = from;
  q.back() = to;
  return q;
}

ProcessPath isotherm_path(const IdealIncomeModel& model, double I, double Q_from, double Q_to,
                          std::size_t m) {
  require_positive(I, "I");
  require_positive(Q_from, "Q_from");
  require_positive(Q_to, "Q_to");
  require_samples(m);
  if (Q_from == Q_to) throw DomainError("isotherm needs Q_from != Q_to");

  std::vector<ExtendedState> samples;
  samples.reserve(m);
  for (double Q : geometric_samples(Q_from, Q_to, m)) {
    samples.push_back(extend(model, make_state(model.nR() * I / Q, Q, I)));
  }
  return ProcessPath::make(PathKind::IsoIps, std::move(samples), model_id(model));
}

ProcessPath adiabat_path(const IdealIncomeModel& model, const StatePoint& from, double Q_to,
                         std::size_t m) {
  require_positive(Q_to, "Q_to");
  require_samples(m);
  std::vector<ExtendedState> samples;
  samples.reserve(m);
  if (Q_to == from.volume()) {
    const StatePoint same = adiabat_endpoint(model, from, Q_to);
    samples.assign(m, extend(model, same));
  } else {
    for (double Q : geometric_samples(from.volume(), Q_to, m)) {
      samples.push_back(extend(model, adiabat_endpoint(model, from, Q)));
    }
  }
  return ProcessPath::make(PathKind::Isentropic, std::move(samples), model_id(model));
}

namespace {

double trapezoid_PdQ(const ProcessPath& path) {
  const auto& s = path.samples();
  double sum = 0.0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    sum += 0.5 * (s[i].point.price() + s[i - 1].point.price()) *
           (s[i].point.volume() - s[i - 1].point.volume());
  }
  return sum;
}

double trapezoid_IdE(const ProcessPath& path) {
  const auto& s = path.samples();
  double sum = 0.0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    sum += 0.5 * (s[i].point.stability() + s[i - 1].point.stability()) *
           (s[i].entropy - s[i - 1].entropy);
  }
  return sum;
}

}  // namespace

double work_along(const ProcessPath& path, Integration rule) {
  require_path(path);
  if (rule == Integration::Trapezoid) return trapezoid_PdQ(path);
  const auto& a = path.front().point;
  const auto& b = path.back().point;
  switch (path.kind()) {
    case PathKind::IsoIps:
      // nRI ln(Q_b/Q_a); written symmetrically so reversal negates exactly
      return 0.5 * (a.price() * a.volume() + b.price() * b.volume()) *
             (std::log(b.volume()) - std::log(a.volume()));
    case PathKind::Isentropic:
      // dG = -P dQ when dE = 0
      return path.front().growth - path.back().growth;
    case PathKind::VdWIsotherm:
      break;
  }
  return trapezoid_PdQ(path);
}

double goods_production_along(const ProcessPath& path, Integration rule) {
  require_path(path);
  if (rule == Integration::Trapezoid) return trapezoid_IdE(path);
  switch (path.kind()) {
    case PathKind::IsoIps:
      return path.front().point.stability() * (path.back().entropy - path.front().entropy);
    case PathKind::Isentropic:
      return 0.0;
    case PathKind::VdWIsotherm:
      break;
  }
  return trapezoid_IdE(path);
}

double growth_change_along(const ProcessPath& path) {
  require_path(path);
  return path.back().growth - path.front().growth;
}

}  // namespace econthermo
