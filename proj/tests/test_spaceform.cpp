#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"

using ddb::Int;
using ddb::SpaceFormDescriptor;
using ddb::SpaceFormFamily;
using tst::ifs;

TEST_CASE("catalog presentations have the documented shapes") {
  CHECK(ddb::to_text(catalog_presentation(SpaceFormDescriptor::cyclic(5, 1))) ==
        "< a | a^5 >");
  CHECK(ddb::to_text(catalog_presentation(SpaceFormDescriptor::prism(1, 1))) ==
        "< a, b | a b a^-1 b, a^2 b^-1 >");
  CHECK(ddb::to_text(catalog_presentation(SpaceFormDescriptor::prism(3, 2))) ==
        "< a, b | a b a^-1 b, a^4 b^-3 >");
  CHECK(ddb::to_text(catalog_presentation(
            SpaceFormDescriptor::binary(SpaceFormFamily::BinT))) ==
        "< s, t | s^3 t^-3, t^2 s^-1 t^-1 s^-1 >");
  CHECK(ddb::to_text(catalog_presentation(SpaceFormDescriptor::cyclic(3, 1, 5))) ==
        "< a, c | a^3, c^5, a c a^-1 c^-1 >");
}

TEST_CASE("descriptor validation") {
  CHECK_THROWS_AS(SpaceFormDescriptor::cyclic(4, 2), ddb::Error);
  CHECK_THROWS_AS(SpaceFormDescriptor::prism(2, 4), ddb::Error);
  CHECK_THROWS_AS(SpaceFormDescriptor::prism(0, 1), ddb::Error);
  CHECK_THROWS_AS(SpaceFormDescriptor::prism(2, 1, 2), ddb::Error);  // not coprime
  CHECK_THROWS_AS(SpaceFormDescriptor::binary(SpaceFormFamily::BinT, 3), ddb::Error);
  CHECK_NOTHROW(SpaceFormDescriptor::prism(-3, 2));
  CHECK_NOTHROW(SpaceFormDescriptor::binary(SpaceFormFamily::BinI, 7));
}

TEST_CASE("descriptor orders") {
  CHECK(SpaceFormDescriptor::cyclic(7, 2).order() == 7);
  CHECK(SpaceFormDescriptor::prism(3, 2).order() == 24);
  CHECK(SpaceFormDescriptor::prism(-3, 2).order() == 24);
  CHECK(SpaceFormDescriptor::binary(SpaceFormFamily::BinI, 7).order() == 840);
}

TEST_CASE("binary polyhedral abelianizations") {
  using ddb::h1_invariants;
  CHECK(h1_invariants(catalog_presentation(
            SpaceFormDescriptor::binary(SpaceFormFamily::BinT))) == ifs({3}));
  CHECK(h1_invariants(catalog_presentation(
            SpaceFormDescriptor::binary(SpaceFormFamily::BinO))) == ifs({2}));
  CHECK(h1_invariants(catalog_presentation(
            SpaceFormDescriptor::binary(SpaceFormFamily::BinI)))
            .is_trivial());
}

TEST_CASE("descriptor enumeration matches the order formulas") {
  auto small = ddb::enumerate_descriptors(8);
  auto has = [&](const SpaceFormDescriptor& d) {
    for (const auto& e : small)
      if (e.descriptor == d) return true;
    return false;
  };
  for (long long m = 1; m <= 8; ++m) CHECK(has(SpaceFormDescriptor::cyclic(m, 1)));
  CHECK(has(SpaceFormDescriptor::prism(1, 1)));
  CHECK(has(SpaceFormDescriptor::prism(2, 1)));
  CHECK(has(SpaceFormDescriptor::prism(1, 2)));
  CHECK_FALSE(has(SpaceFormDescriptor::binary(SpaceFormFamily::BinT)));

  for (const auto& e : small) CHECK(e.order <= 8);

  auto upto24 = ddb::enumerate_descriptors(24);
  CHECK(std::any_of(upto24.begin(), upto24.end(), [](const auto& e) {
    return e.descriptor.family == SpaceFormFamily::BinT &&
           e.descriptor.cofactor == 1;
  }));

  auto tiny = ddb::enumerate_descriptors(3);
  CHECK(std::none_of(tiny.begin(), tiny.end(), [](const auto& e) {
    return e.descriptor.family == SpaceFormFamily::Prism;
  }));
}

TEST_CASE("coincidence metadata is flagged, not collapsed") {
  auto entries = ddb::enumerate_descriptors(8);
  bool lens_flag = false, cyclic_prism_flag = false, product_flag = false;
  for (const auto& e : entries) {
    for (const auto& c : e.coincidences) {
      if (e.descriptor.family == SpaceFormFamily::Cyclic &&
          c.find("lens-equivalent") != std::string::npos)
        lens_flag = true;
      if (e.descriptor.family == SpaceFormFamily::Prism &&
          c.find("cyclic") != std::string::npos)
        cyclic_prism_flag = true;
      if (e.descriptor.cofactor > 1 && c.find("cyclic") != std::string::npos)
        product_flag = true;
    }
  }
  CHECK(lens_flag);          // e.g. Cyclic(7,3) ~ Cyclic(7,2)
  CHECK(cyclic_prism_flag);  // Prism(1,beta) is cyclic
  CHECK(product_flag);       // Cyclic(m) x C_m' is cyclic
}

TEST_CASE("quaternion realizations match the descriptor orders") {
  const std::pair<SpaceFormDescriptor, std::size_t> cases[] = {
      {SpaceFormDescriptor::prism(2, 1), 8},
      {SpaceFormDescriptor::prism(3, 1), 12},
      {SpaceFormDescriptor::prism(4, 1), 16},
      {SpaceFormDescriptor::prism(5, 1), 20},
      {SpaceFormDescriptor::binary(SpaceFormFamily::BinT), 24},
      {SpaceFormDescriptor::binary(SpaceFormFamily::BinO), 48},
      {SpaceFormDescriptor::binary(SpaceFormFamily::BinI), 120},
  };
  for (const auto& [d, n] : cases) {
    CAPTURE(d.label());
    auto gens = ddb::quaternion_generators(d);
    REQUIRE(gens.has_value());
    CHECK(ddb::quaternion_closure(*gens).size() == n);
    CHECK(Int(n) == d.order());
  }
  CHECK_FALSE(ddb::quaternion_generators(SpaceFormDescriptor::prism(6, 1)));
  CHECK_FALSE(ddb::quaternion_generators(SpaceFormDescriptor::cyclic(7, 1)));
  CHECK_FALSE(
      ddb::quaternion_generators(SpaceFormDescriptor::prism(2, 1, 3)));
}

TEST_CASE("every catalog order is certified by coset enumeration") {
  // This is the guard behind the enumeration's order formulas.
  auto entries = ddb::enumerate_descriptors(240);
  std::set<std::string> checked;  // one presentation per (family, base, cofactor)
  std::size_t verified = 0;
  for (const auto& e : entries) {
    auto p = catalog_presentation(e.descriptor);
    std::string key = ddb::to_text(p);
    if (!checked.insert(key).second) continue;
    auto n = ddb::group_order(p);
    REQUIRE(n.has_value());
    CAPTURE(e.descriptor.label());
    CHECK(Int(*n) == e.order);
    ++verified;
  }
  CHECK(verified >= 200);
}
