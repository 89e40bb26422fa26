#pragma once

// JSON (nlohmann) conversions for every domain type. Field names match the
// short symbols used throughout: P, Q, I, E, G, W, q_H, ...

#include "json.hpp"

#include "econthermo/carnot.hpp"
#include "econthermo/catastrophe.hpp"
#include "econthermo/state.hpp"
#include "econthermo/vdw.hpp"

namespace econthermo {

void to_json(nlohmann::json& j, const StatePoint& s);
void from_json(const nlohmann::json& j, StatePoint& s);

void to_json(nlohmann::json& j, const ExtendedState& s);
void from_json(const nlohmann::json& j, ExtendedState& s);

void to_json(nlohmann::json& j, const ProcessPath& p);
ProcessPath path_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const CycleReport& r);
void from_json(const nlohmann::json& j, CycleReport& r);

void to_json(nlohmann::json& j, const CycleDiagnostics& d);

void to_json(nlohmann::json& j, const CriticalPoint& c);
void from_json(const nlohmann::json& j, CriticalPoint& c);

void to_json(nlohmann::json& j, const CoexistenceResult& c);
void from_json(const nlohmann::json& j, CoexistenceResult& c);

void to_json(nlohmann::json& j, const CuspCoords& c);
void from_json(const nlohmann::json& j, CuspCoords& c);

}  // namespace econthermo

// The models have no default state, so they go through adl_serializer, which
// lets json::get construct them directly (and re-validate).
template <>
struct nlohmann::adl_serializer<econthermo::IdealIncomeModel> {
  static econthermo::IdealIncomeModel from_json(const json& j);
  static void to_json(json& j, const econthermo::IdealIncomeModel& m);
};

template <>
struct nlohmann::adl_serializer<econthermo::VdWModel> {
  static econthermo::VdWModel from_json(const json& j);
  static void to_json(json& j, const econthermo::VdWModel& m);
};
