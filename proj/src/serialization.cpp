#include "econthermo/serialization.hpp"

#include "econthermo/errors.hpp"

namespace econthermo {

using nlohmann::json;

void to_json(json& j, const StatePoint& s) {
  j = json{{"P", s.price()}, {"Q", s.volume()}, {"I", s.stability()}};
}

void from_json(const json& j, StatePoint& s) {
  s = make_state(j.at("P").get<double>(), j.at("Q").get<double>(), j.at("I").get<double>());
}

void to_json(json& j, const ExtendedState& s) {
  j = json{{"point", s.point}, {"E", s.entropy}, {"G", s.growth}};
}

void from_json(const json& j, ExtendedState& s) {
  s.point = j.at("point").get<StatePoint>();
  s.entropy = j.at("E").get<double>();
  s.growth = j.at("G").get<double>();
}

void to_json(json& j, const ProcessPath& p) {
  j = json{{"kind", std::string(to_string(p.kind()))},
           {"samples", p.samples()},
           {"model_id", p.model_id()}};
}

ProcessPath path_from_json(const json& j) {
  return ProcessPath::make(path_kind_from_string(j.at("kind").get<std::string>()),
                           j.at("samples").get<std::vector<ExtendedState>>(),
                           j.at("model_id").get<std::string>());
}

void to_json(json& j, const CycleReport& r) {
  json legs = json::array();
  for (const auto& leg : r.legs) legs.push_back(leg);
  j = json{{"vertices", r.vertices},
           {"W", r.W},
           {"q_H", r.q_H},
           {"q_C", r.q_C},
           {"eta", r.eta},
           {"E_A", r.E_A},
           {"E_B", r.E_B},
           {"residual_dG", r.residual_dG},
           {"residual_W", r.residual_W},
           {"orientation", std::string(to_string(r.orientation))},
           {"legs", std::move(legs)}};
}

void from_json(const json& j, CycleReport& r) {
  r.vertices = j.at("vertices").get<std::array<ExtendedState, 4>>();
  r.W = j.at("W").get<double>();
  r.q_H = j.at("q_H").get<double>();
  r.q_C = j.at("q_C").get<double>();
  r.eta = j.at("eta").get<double>();
  r.E_A = j.at("E_A").get<double>();
  r.E_B = j.at("E_B").get<double>();
  r.residual_dG = j.at("residual_dG").get<double>();
  r.residual_W = j.at("residual_W").get<double>();
  r.orientation = orientation_from_string(j.value("orientation", std::string("clockwise")));
  r.legs.clear();
  if (j.contains("legs")) {
    for (const auto& leg : j.at("legs")) r.legs.push_back(path_from_json(leg));
  }
}

void to_json(json& j, const CycleDiagnostics& d) {
  j = json{{"closure_dG", d.closure_dG},     {"area_mismatch", d.area_mismatch},
           {"first_law", d.first_law},       {"continuity", d.continuity},
           {"eta_residual", d.eta_residual}, {"loop_PdQ", d.loop_PdQ},
           {"loop_IdE", d.loop_IdE},         {"pass", d.pass}};
}

void to_json(json& j, const CriticalPoint& c) {
  j = json{{"P_c", c.P_c}, {"Q_c", c.Q_c}, {"I_c", c.I_c}};
}

void from_json(const json& j, CriticalPoint& c) {
  c = {j.at("P_c").get<double>(), j.at("Q_c").get<double>(), j.at("I_c").get<double>()};
}

void to_json(json& j, const CoexistenceResult& c) {
  j = json{{"P_sat", c.P_sat}, {"Q_lo", c.Q_lo}, {"Q_hi", c.Q_hi},
           {"area_residual", c.area_residual}};
}

void from_json(const json& j, CoexistenceResult& c) {
  c = {j.at("P_sat").get<double>(), j.at("Q_lo").get<double>(), j.at("Q_hi").get<double>(),
       j.at("area_residual").get<double>()};
}

void to_json(json& j, const CuspCoords& c) {
  j = json{{"x", c.x}, {"alpha", c.alpha}, {"beta", c.beta}};
}

void from_json(const json& j, CuspCoords& c) {
  c = {j.at("x").get<double>(), j.at("alpha").get<double>(), j.at("beta").get<double>()};
}

}  // namespace econthermo

using econthermo::IdealIncomeModel;
using econthermo::VdWModel;
using nlohmann::json;

void nlohmann::adl_serializer<IdealIncomeModel>::to_json(json& j, const IdealIncomeModel& m) {
  j = json{{"n", m.moles()},
           {"R", m.income_constant()},
           {"f", m.degrees_of_freedom()},
           {"Q_ref", m.reference_volume()},
           {"I_ref", m.reference_stability()}};
}

IdealIncomeModel nlohmann::adl_serializer<IdealIncomeModel>::from_json(const json& j) {
  return IdealIncomeModel::make(j.at("n").get<double>(), j.at("R").get<double>(),
                                j.at("f").get<int>(), j.value("Q_ref", 1.0), j.value("I_ref", 1.0));
}

void nlohmann::adl_serializer<VdWModel>::to_json(json& j, const VdWModel& m) {
  j = json{{"a", m.cohesion()},
           {"b", m.excluded_volume()},
           {"R", m.income_constant()},
           {"n", m.moles()}};
}

VdWModel nlohmann::adl_serializer<VdWModel>::from_json(const json& j) {
  return VdWModel::make(j.at("a").get<double>(), j.at("b").get<double>(), j.at("R").get<double>(),
                        j.value("n", 1.0));
}
