#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ddb/gluing.hpp"
#include "ddb/smith.hpp"
#include "ddb/spaceform.hpp"

namespace ddb {

// Rule identifiers carried by every definite verdict, so each answer can be
// audited against the classification statement it depends on.
namespace rules {
inline constexpr const char* kCyclicLens = "ddb/cyclic-lens";
inline constexpr const char* kPrism = "ddb/prism";
inline constexpr const char* kBinaryPolyhedral = "no-ddb/binary-polyhedral";
inline constexpr const char* kCoprimeProduct = "no-ddb/noncyclic-coprime-product";
inline constexpr const char* kFlatOddHomology = "no-ddb/flat-odd-homology";
inline constexpr const char* kRankOneDoubleCover =
    "structure/rank-one-side-forces-double-cover";
inline constexpr const char* kBothRankOneInfinite =
    "structure/both-rank-one-forces-infinite-group";
inline constexpr const char* kAsphericalRankOne =
    "structure/aspherical-forces-rank-one-sides";
}  // namespace rules

enum class VerdictAnswer { IsDDB, NotDDB, Inconclusive };

inline const char* answer_name(VerdictAnswer a) {
  switch (a) {
    case VerdictAnswer::IsDDB: return "IsDDB";
    case VerdictAnswer::NotDDB: return "NotDDB";
    case VerdictAnswer::Inconclusive: return "Inconclusive";
  }
  return "?";
}

struct Verdict {
  VerdictAnswer answer = VerdictAnswer::Inconclusive;
  std::string rule;  // empty for Inconclusive: no theorem is being cited
  std::string group;
  InvariantFactors invariants;
  std::optional<Int> order;
  bool homogeneous = false;  // meaningful only on cofactor-1 entries
  std::string note;
};

// Double-disk-bundle verdict for a spherical space form group. A positively
// curved 3-manifold is a double disk bundle exactly when its group is cyclic
// (lens spaces) or a prism group; the binary polyhedral quotients and the
// coprime products built on non-cyclic bases are the counterexamples, with
// the three binary polyhedral quotients the only homogeneous ones.
inline Verdict decide_spaceform(const SpaceFormDescriptor& d) {
  d.validate();
  Verdict v;
  v.group = d.label();
  v.invariants = h1_invariants(catalog_presentation(d));
  v.order = d.order();

  const bool cyclic_in_disguise =
      d.family == SpaceFormFamily::Cyclic ||
      (d.family == SpaceFormFamily::Prism && abs(d.alpha) == 1);
  if (cyclic_in_disguise) {
    v.answer = VerdictAnswer::IsDDB;
    v.rule = rules::kCyclicLens;
    if (d.family != SpaceFormFamily::Cyclic || d.cofactor > 1)
      v.note = "group is cyclic of order " + d.order().str();
    return v;
  }
  if (d.family == SpaceFormFamily::Prism) {
    if (d.cofactor == 1) {
      v.answer = VerdictAnswer::IsDDB;
      v.rule = rules::kPrism;
      return v;
    }
    v.answer = VerdictAnswer::NotDDB;
    v.rule = rules::kCoprimeProduct;
    v.note = "coprime product on a non-cyclic base";
    return v;
  }
  v.answer = VerdictAnswer::NotDDB;
  v.rule = d.cofactor == 1 ? rules::kBinaryPolyhedral : rules::kCoprimeProduct;
  v.homogeneous = d.cofactor == 1;
  return v;
}

// Obstruction for closed flat manifolds: odd finite first homology rules a
// double disk bundle structure out; nothing is asserted otherwise.
inline Verdict decide_flat(const InvariantFactors& f) {
  Verdict v;
  v.invariants = f;
  if (is_finite_odd(f)) {
    v.answer = VerdictAnswer::NotDDB;
    v.rule = rules::kFlatOddHomology;
    v.order = f.order();
    return v;
  }
  v.answer = VerdictAnswer::Inconclusive;
  v.note = "first homology admits a surjection onto Z/2; no obstruction applies";
  return v;
}

enum class RuleStatus { NotApplicable, Satisfied, Violated };

inline const char* status_name(RuleStatus s) {
  switch (s) {
    case RuleStatus::NotApplicable: return "not-applicable";
    case RuleStatus::Satisfied: return "satisfied";
    case RuleStatus::Violated: return "violated";
  }
  return "?";
}

struct RuleOutcome {
  std::string rule;
  RuleStatus status = RuleStatus::NotApplicable;
  std::string detail;
};

struct StructuralAssumptions {
  bool aspherical = false;
  bool ell_minus_zero = false;
  bool both_ell_zero = false;
};

// A necessary condition a hypothetical decomposition imposes on pi_1,
// decidable from the report's invariants and order alone.
struct StructuralRule {
  const char* id;
  const char* hypothesis;
  bool (*applies)(const StructuralAssumptions&);
  bool (*holds)(const Pi1Report&);
  const char* satisfied_detail;
  const char* violated_detail;
};

// R1: a rank-one side forces a double cover, so H_1 surjects onto Z/2.
// R2: two rank-one sides force an infinite group.
// R3: asphericity forces both sides to rank one, activating R1 and R2.
inline const std::vector<StructuralRule>& structural_rules() {
  static const std::vector<StructuralRule> rules_table = {
      {rules::kRankOneDoubleCover,
       "some side has a zero-dimensional fiber sphere",
       [](const StructuralAssumptions& a) {
         return a.ell_minus_zero || a.aspherical;
       },
       [](const Pi1Report& r) { return surjects_onto_z2(r.invariants); },
       "H1 surjects onto Z/2",
       "H1 is finite of odd order, no surjection onto Z/2"},
      {rules::kBothRankOneInfinite,
       "both sides have zero-dimensional fiber spheres",
       [](const StructuralAssumptions& a) {
         return a.both_ell_zero || a.aspherical;
       },
       [](const Pi1Report& r) { return r.order.kind != OrderKind::Finite; },
       "group is not certified finite",
       "group is finite"},
      {rules::kAsphericalRankOne,
       "the manifold is aspherical",
       [](const StructuralAssumptions& a) { return a.aspherical; },
       [](const Pi1Report&) { return true; },
       "both fiber spheres forced zero-dimensional; R1 and R2 activated",
       ""},
  };
  return rules_table;
}

inline std::vector<RuleOutcome> check_structural_rules(
    const Pi1Report& report, const StructuralAssumptions& assume) {
  std::vector<RuleOutcome> out;
  for (const auto& rule : structural_rules()) {
    RuleOutcome r{rule.id, RuleStatus::NotApplicable, ""};
    if (rule.applies(assume)) {
      bool ok = rule.holds(report);
      r.status = ok ? RuleStatus::Satisfied : RuleStatus::Violated;
      r.detail = ok ? rule.satisfied_detail : rule.violated_detail;
      if (rule.id == rules::kBothRankOneInfinite)
        r.detail += std::string(" (order ") + report.order.str() + ")";
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ddb
