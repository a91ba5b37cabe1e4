#pragma once

#include <json.hpp>

#include <string>

#include "ddb/coset.hpp"
#include "ddb/gluing.hpp"
#include "ddb/spaceform.hpp"
#include "ddb/verdicts.hpp"

namespace ddb {

using nlohmann::json;

inline std::int64_t json_int(const Int& v) {
  return static_cast<std::int64_t>(to_long_checked(v, "json"));
}

inline json json_of(const InvariantFactors& f) {
  json a = json::array();
  for (const auto& d : f.factors()) a.push_back(json_int(d));
  return a;
}

inline InvariantFactors invariants_from_json(const json& j) {
  if (!j.is_array()) throw Error("invariant factors: expected a JSON array");
  std::vector<Int> factors;
  for (const auto& v : j) factors.emplace_back(v.get<std::int64_t>());
  return InvariantFactors(std::move(factors));
}

inline json json_of(const SpaceFormDescriptor& d) {
  json j{{"family", family_name(d.family)}, {"cofactor", json_int(d.cofactor)}};
  if (d.family == SpaceFormFamily::Cyclic) {
    j["m"] = json_int(d.m);
    j["q"] = json_int(d.q);
  } else if (d.family == SpaceFormFamily::Prism) {
    j["alpha"] = json_int(d.alpha);
    j["beta"] = json_int(d.beta);
  }
  return j;
}

inline SpaceFormDescriptor descriptor_from_json(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  Int cofactor = j.value("cofactor", std::int64_t{1});
  if (family == "Cyclic")
    return SpaceFormDescriptor::cyclic(Int(j.at("m").get<std::int64_t>()),
                                       Int(j.value("q", std::int64_t{1})),
                                       cofactor);
  if (family == "Prism")
    return SpaceFormDescriptor::prism(Int(j.at("alpha").get<std::int64_t>()),
                                      Int(j.at("beta").get<std::int64_t>()),
                                      cofactor);
  if (family == "BinT")
    return SpaceFormDescriptor::binary(SpaceFormFamily::BinT, cofactor);
  if (family == "BinO")
    return SpaceFormDescriptor::binary(SpaceFormFamily::BinO, cofactor);
  if (family == "BinI")
    return SpaceFormDescriptor::binary(SpaceFormFamily::BinI, cofactor);
  throw Error("descriptor: unknown family '" + family + "'");
}

inline json json_of(const OrderInfo& o) {
  if (o.kind == OrderKind::Finite) return o.value;
  return o.str();
}

inline json json_of(const Pi1Report& r) {
  return json{{"presentation", to_text(r.presentation)},
              {"invariant_factors", json_of(r.invariants)},
              {"order", json_of(r.order)},
              {"classification", r.classification.str()},
              {"abelian", r.abelian},
              {"certificate", r.certificate}};
}

inline json json_of(const Verdict& v) {
  json j{{"answer", answer_name(v.answer)},
         {"rule", v.rule},
         {"group", v.group},
         {"invariant_factors", json_of(v.invariants)},
         {"homogeneous", v.homogeneous}};
  if (v.order) j["order"] = json_int(*v.order);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

inline json json_of(const CosetTable& t) {
  json columns = json::array();
  for (const auto& n : t.presentation().generator_names()) {
    columns.push_back(n);
    columns.push_back(n + "^-1");
  }
  json subgroup = json::array();
  for (const auto& w : t.subgroup_generators())
    subgroup.push_back(to_text(w, t.presentation().generator_names()));
  return json{{"presentation", to_text(t.presentation())},
              {"subgroup", subgroup},
              {"complete", t.complete()},
              {"cosets", t.coset_count()},
              {"columns", columns},
              {"rows", t.rows()}};
}

inline json json_of(const CatalogEntry& e) {
  return json{{"descriptor", json_of(e.descriptor)},
              {"order", json_int(e.order)},
              {"label", e.descriptor.label()},
              {"coincidences", e.coincidences}};
}

inline json json_of(const RuleOutcome& r) {
  return json{{"rule", r.rule}, {"status", status_name(r.status)},
              {"detail", r.detail}};
}

inline json json_of(const std::vector<RuleOutcome>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(json_of(r));
  return a;
}

}  // namespace ddb
