#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "projembed/catalog.hpp"
#include "projembed/errors.hpp"

using namespace projembed;

static CatalogParams pk(std::uint32_t p, std::uint32_t k = 0) {
  CatalogParams q;
  q.p = p;
  if (k) q.k = k;
  return q;
}

static CatalogParams abelian_332() {
  CatalogParams q = pk(3, 2);
  q.n = 2;
  return q;
}

TEST_CASE("H3star") {
  CatalogInstance h = catalog_get("H3star", pk(3, 1));
  REQUIRE(h.covering.has_value());
  CHECK(h.covering->gstar.size() == 5);
  CHECK(h.covering->gstar.order() == 243);
  CHECK(h.covering->kernel_gens.size() == 2);
  CHECK(h.representation_group);
  CHECK(validate_instance(h).ok);
}

TEST_CASE("printed p^6 covering") {
  CatalogInstance g = catalog_get("Phi6(2111)a-star", pk(5));
  REQUIRE(g.covering.has_value());
  CHECK(g.covering->gstar.order() == 15625);
  CHECK(g.group.order() == 3125);
}

TEST_CASE("parameter errors") {
  CHECK_THROWS_AS(catalog_get("D8", pk(5)), InputError);
  CHECK_THROWS_AS(catalog_get("H3", pk(2)), InputError);
  CHECK_THROWS_AS(catalog_get("Nope"), InputError);
  CHECK_THROWS_AS(catalog_get("Phi2(1^4)", pk(5)), InputError);
  CHECK_THROWS_AS(catalog_get("Phi5(1^5)star", pk(5)), InputError);
  CatalogInstance q8 = catalog_get("Q8star");
  CHECK_FALSE(q8.covering.has_value());
  CHECK(q8.representation_group);
}

TEST_CASE("aliases") {
  CHECK(catalog_get("G16_9").group.order() == 16);
  CHECK(catalog_get("Phi2(111)", pk(3)).name == "Phi2(1^3)");
  CHECK(catalog_get("Heisenberg", pk(5)).group.order() == 125);
  CHECK(catalog_get("C4xC2").group.order() == 8);
  CHECK(catalog_get("C3^2").group.order() == 9);
}

TEST_CASE("every catalogued covering validates") {
  std::vector<std::pair<std::string, CatalogParams>> cases = {
      {"D8", {}},           {"G16_3", {}},       {"G16_4", {}},        {"D16", {}},          {"D8xC2", {}},
      {"Q8xC2", {}},        {"Pauli", {}},       {"ES32+", {}},        {"ES32-", {}},        {"Phi2(211)a", pk(3)},
      {"Phi2(1^4)", pk(3)}, {"Phi2(22)", pk(3)}, {"Phi2(211)b", pk(3)}, {"Phi2(211)c", pk(3)}, {"Phi3(211)a", pk(3)},
      {"Phi3(1^4)", pk(3)}, {"H3", pk(3, 2)},    {"H3", pk(5)},        {"Phi2(1^3)", pk(7)}, {"Phi2(221)c", pk(5)},
      {"Phi4(221)f0", pk(5)}, {"Phi4(221)d", pk(5)}, {"Phi6(1^5)", pk(5)}, {"Phi10(1^5)", pk(5)}, {"Phi9(1^5)", pk(5)},
      {"C4xC2", {}},        {"Abelian", abelian_332()}};
  for (auto& [name, q] : cases) {
    CAPTURE(name);
    CatalogInstance inst = catalog_get(name, q);
    StructureReport r = validate_instance(inst);
    CHECK(r.ok);
    CHECK(r.gstar_order == r.group_order * r.a_order);
    if (inst.multiplier_order) CHECK(r.a_order == inst.multiplier_order);
  }
}

TEST_CASE("Heisenberg over Z/9 covering order") {
  CatalogInstance h = catalog_get("H3", pk(3, 2));
  CHECK(h.group.order() == 729);
  CHECK(h.covering->gstar.order() == 59049);
}

TEST_CASE("closed-form metadata") {
  CatalogInstance e = catalog_get("Phi5(1^5)", pk(5));
  CHECK(e.closed_form == ClosedFormKind::extraspecial);
  CHECK(e.extraspecial_n == 2);
  CHECK_FALSE(e.covering.has_value());
  CatalogInstance a = catalog_get("C4xC2");
  CHECK(a.closed_form == ClosedFormKind::abelian);
}

TEST_CASE("entry list") {
  const auto& entries = catalog_entries();
  CHECK(entries.size() > 30);
  for (auto& e : entries) {
    CHECK_FALSE(e.name.empty());
    CHECK_FALSE(e.description.empty());
  }
}
