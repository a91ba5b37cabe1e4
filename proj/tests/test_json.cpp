#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using ddb::json;
using ddb::SpaceFormDescriptor;
using ddb::SpaceFormFamily;
using tst::gen;
using tst::ifs;

TEST_CASE("invariant factors serialize to integer arrays") {
  CHECK(ddb::json_of(ifs({2, 0})).dump() == "[2,0]");
  CHECK(ddb::json_of(ifs({})).dump() == "[]");
  CHECK(ddb::invariants_from_json(json::parse("[2,0]")) == ifs({2, 0}));
  CHECK(ddb::invariants_from_json(ddb::json_of(ifs({3, 9, 0}))) == ifs({3, 9, 0}));
  CHECK_THROWS_AS(ddb::invariants_from_json(json::parse("{}")), ddb::Error);
}

TEST_CASE("descriptors round trip through JSON") {
  const SpaceFormDescriptor cases[] = {
      SpaceFormDescriptor::cyclic(7, 2),
      SpaceFormDescriptor::prism(3, 1, 5),
      SpaceFormDescriptor::prism(-3, 2),
      SpaceFormDescriptor::binary(SpaceFormFamily::BinO),
      SpaceFormDescriptor::binary(SpaceFormFamily::BinI, 7),
  };
  for (const auto& d : cases) {
    CAPTURE(d.label());
    CHECK(ddb::descriptor_from_json(ddb::json_of(d)) == d);
  }
  auto parsed = ddb::descriptor_from_json(
      json::parse(R"({"family":"Prism","alpha":3,"beta":1,"cofactor":1})"));
  CHECK(parsed == SpaceFormDescriptor::prism(3, 1));
  // cofactor defaults to 1
  CHECK(ddb::descriptor_from_json(json::parse(R"({"family":"BinT"})")) ==
        SpaceFormDescriptor::binary(SpaceFormFamily::BinT));
  CHECK_THROWS_AS(ddb::descriptor_from_json(json::parse(R"({"family":"X"})")),
                  ddb::Error);
}

TEST_CASE("pi1 reports expose the documented fields") {
  auto k = ddb::SideDescriptor::make(ddb::LeafType::Torus2,
                                     ddb::BaseType::KleinBottle);
  auto report = ddb::torus_gluing_pi1(
      {ddb::Int(1), ddb::Int(1), ddb::Int(1), ddb::Int(2)}, k);
  json j = ddb::json_of(report);
  CHECK(j.at("presentation").get<std::string>() ==
        "< a, d, e | d e d^-1 e, a d^-2, a e^-1 >");
  CHECK(j.at("invariant_factors").dump() == "[4]");
  CHECK(j.at("order").get<std::uint64_t>() == 4);
  CHECK(j.at("classification").get<std::string>() == "PrismGroup(1,1)");
  CHECK(j.at("certificate").is_array());
  CHECK_FALSE(j.at("certificate").empty());

  // orders that are not finite numbers serialize as strings
  auto s1 = ddb::SideDescriptor::make(ddb::LeafType::Torus2,
                                      ddb::BaseType::Circle);
  auto inf = ddb::torus_gluing_pi1(
      {ddb::Int(1), ddb::Int(0), ddb::Int(0), ddb::Int(1)}, s1);
  CHECK(ddb::json_of(inf).at("order").get<std::string>() == "infinite");
}

TEST_CASE("golden coset table export") {
  auto klein = ddb::parse_presentation("< d, e | d e d^-1 e >");
  ddb::CosetTable t(klein, {gen(0, 2), gen(1)});
  json j = ddb::json_of(t);
  CHECK(j.at("complete").get<bool>());
  CHECK(j.at("cosets").get<std::size_t>() == 2);
  CHECK(j.at("rows").dump() == "[[1,1,0,0],[0,0,1,1]]");
  CHECK(j.at("columns").dump() == R"(["d","d^-1","e","e^-1"])");
  CHECK(j.at("subgroup").dump() == R"(["d^2","e"])");

  ddb::CosetTable c5(ddb::parse_presentation("< a | a^5 >"), {});
  CHECK(ddb::json_of(c5).at("rows").dump() ==
        "[[1,4],[2,0],[3,1],[4,2],[0,3]]");
}

TEST_CASE("verdict serialization carries rule and evidence") {
  auto v = ddb::decide_spaceform(
      SpaceFormDescriptor::binary(SpaceFormFamily::BinO));
  json j = ddb::json_of(v);
  CHECK(j.at("answer").get<std::string>() == "NotDDB");
  CHECK(j.at("rule").get<std::string>() == ddb::rules::kBinaryPolyhedral);
  CHECK(j.at("homogeneous").get<bool>());
  CHECK(j.at("invariant_factors").dump() == "[2]");
  CHECK(j.at("order").get<std::int64_t>() == 48);
}

TEST_CASE("rule outcomes serialize as an array") {
  ddb::Pi1Report r;
  r.presentation = ddb::parse_presentation("< a | a^3 >");
  r.invariants = ddb::h1_invariants(r.presentation);
  r.order = ddb::OrderInfo::finite(3);
  json j = ddb::json_of(ddb::check_structural_rules(r, {true, false, false}));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  CHECK(j[0].at("status").get<std::string>() == "violated");
  CHECK(j[2].at("status").get<std::string>() == "satisfied");
}
