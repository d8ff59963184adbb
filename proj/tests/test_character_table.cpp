#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "projembed/catalog.hpp"
#include "projembed/character_table.hpp"
#include "projembed/errors.hpp"

using namespace projembed;

static CharacterTable table_of(const std::string& name, CatalogParams q = {}) {
  return character_table(Group::build(catalog_get(name, q).group));
}

static std::vector<std::uint64_t> sorted_degrees(const CharacterTable& t) {
  auto d = t.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

TEST_CASE("Q8 and D8 share degrees") {
  CharacterTable q8 = table_of("Q8"), d8 = table_of("D8");
  CHECK(sorted_degrees(q8) == std::vector<std::uint64_t>{1, 1, 1, 1, 2});
  CHECK(sorted_degrees(d8) == std::vector<std::uint64_t>{1, 1, 1, 1, 2});
  CHECK(verify_orthogonality(q8).ok);
  CHECK(verify_orthogonality(d8).ok);
}

TEST_CASE("S3") {
  CatalogParams q;
  q.n = 6;
  CharacterTable t = table_of("Dihedral", q);
  CHECK(sorted_degrees(t) == std::vector<std::uint64_t>{1, 1, 2});
  OrthogonalityReport r = verify_orthogonality(t);
  CHECK(r.ok);
  CHECK(r.exhaustive);
}

TEST_CASE("Phi2(1^3) at p = 3 has cd {1, 3}") {
  CatalogParams q;
  q.p = 3;
  CharacterTable t = table_of("Phi2(1^3)", q);
  auto d = sorted_degrees(t);
  CHECK(d.size() == 11);
  CHECK(std::count(d.begin(), d.end(), 1u) == 9);
  CHECK(std::count(d.begin(), d.end(), 3u) == 2);
  CHECK(t.conductor == 3);
}

TEST_CASE("(Z/3)^2 is linear") {
  CharacterTable t = table_of("C3^2");
  CHECK(t.size() == 9);
  CHECK(sorted_degrees(t) == std::vector<std::uint64_t>(9, 1));
}

TEST_CASE("values are algebraic integers on class functions") {
  CharacterTable t = table_of("Q8");
  const auto& cl = t.classes();
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    CHECK(t.value(chi, 0) == Cyclotomic::integer(t.conductor, static_cast<std::int64_t>(t.irr[chi].degree)));
    for (std::size_t c = 0; c < cl.count(); ++c)
      for (Elem x : cl.members[c]) CHECK(t.value(chi, x) == t.irr[chi].values[c]);
  }
}

TEST_CASE("class budget") {
  GroupPtr g = Group::build(catalog_get("ES32+").group);
  CHECK_THROWS_AS(character_table(g, TableOptions{1000}), ResourceError);
}

TEST_CASE("csv export") {
  std::string csv = table_to_csv(table_of("Q8"));
  CHECK(csv.rfind("character,degree", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
  std::string json = table_to_json(table_of("Q8"));
  CHECK(json.find("schema_version") != std::string::npos);
}
