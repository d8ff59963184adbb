#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "projembed/catalog.hpp"
#include "projembed/character_table.hpp"
#include "projembed/errors.hpp"
#include "projembed/projective.hpp"

using namespace projembed;

static Covering cover(const std::string& name, CatalogParams q = {}) {
  return instance_covering(catalog_get(name, q));
}

static CatalogParams prime(std::uint32_t p) {
  CatalogParams q;
  q.p = p;
  return q;
}

TEST_CASE("D8 covering") {
  Covering c = cover("D8");
  CHECK(c.gstar->order() == 16);
  CHECK(c.a_order() == 2);
  CHECK(c.representation_group);
  CHECK(c.mu[0] == 0);
  for (Elem x = 0; x < c.gstar->order(); ++x) CHECK(c.gstar->mul(c.mu[c.f[x]], c.kernel_part(x)) == x);
  CharacterTable t = character_table(c.gstar);
  auto lambdas = central_characters(c);
  CHECK(lambdas.size() == 2);
  CHECK(irr_over(c, t, lambdas[0]).size() == 5);
  CHECK(irr_over(c, t, lambdas[1]).size() == 2);
  CHECK_FALSE(exists_faithful_irrep_by_regularity(c, lambdas[0]));
  CHECK(exists_faithful_irrep_by_regularity(c, lambdas[1]));
  CHECK(alpha_regular_central(c, lambdas[1]).is_trivial());
}

TEST_CASE("cocycle is normalized") {
  Covering c = cover("H3", prime(3));
  auto lambdas = central_characters(c);
  CHECK(lambdas.size() == 9);
  for (const auto& l : lambdas)
    for (Elem g = 0; g < c.G->order(); ++g) {
      CHECK(cocycle_value(c, l, 0, g) == 0);
      CHECK(cocycle_value(c, l, g, 0) == 0);
    }
}

TEST_CASE("tau and tau_irr with witnesses") {
  struct Case {
    const char* name;
    std::uint32_t p;
    std::optional<std::uint64_t> tau, tau_irr;
  };
  for (Case k : {Case{"Q8", 0, 3, std::nullopt}, Case{"D8", 0, 2, 2}, Case{"H3", 3, 3, 3}, Case{"Phi2(21)", 5, 6, std::nullopt},
                 Case{"Pauli", 0, 3, std::nullopt}}) {
    CAPTURE(k.name);
    Covering c = cover(k.name, k.p ? prime(k.p) : CatalogParams{});
    CharacterTable t = character_table(c.gstar);
    ProjectiveData d = projective_data(c, t);
    TauReport r = tau(d), ri = tau_irr(d);
    CHECK(r.value == k.tau);
    CHECK(ri.value == k.tau_irr);
    CHECK(r.exact);
    CHECK(verify_witness(d, r));
    CHECK(verify_witness(d, ri));
  }
}

TEST_CASE("ordinary degrees") {
  Covering c = cover("Q8");
  CharacterTable t = character_table(c.gstar);
  TauReport d = delta(t), di = delta_irr(t);
  CHECK(d.value == 2u);
  CHECK(di.value == 2u);
  CHECK(verify_delta_witness(t, d));
}

TEST_CASE("trivial covering is a bound only") {
  GroupPtr g = Group::build(catalog_get("D8").group);
  Covering c = trivial_covering(g);
  CHECK(c.A.is_trivial());
  CHECK_FALSE(c.representation_group);
  CharacterTable t = character_table(c.gstar);
  TauReport r = tau(projective_data(c, t));
  CHECK(r.value == 3u);
  CHECK_FALSE(r.exact);
}

TEST_CASE("section perturbation keeps the answer") {
  Covering c = cover("Phi2(1^4)", prime(3));
  CharacterTable t = character_table(c.gstar);
  ProjectiveData d = projective_data(c, t);
  std::uint64_t want = *tau(d).value;
  for (std::uint64_t seed : {7u, 11u}) {
    Covering pc = perturb_section(c, seed);
    ProjectiveData pd = projective_data(pc, t);
    TauReport r = tau(pd);
    CHECK(r.value == want);
    CHECK(verify_witness(pd, r));
  }
}

TEST_CASE("quotient tables agree with the full table") {
  Covering c = cover("Phi2(1^3)", prime(5));
  CharacterTable t = character_table(c.gstar);
  ProjectiveData full = projective_data(c, t);
  ProjectiveData split = projective_data_by_quotients(c);
  CHECK(split.decomposed);
  CHECK(tau(full).value == tau(split).value);
  CHECK(tau_irr(full).value == tau_irr(split).value);
  CHECK(tau(split).value == 5u);
  CHECK_THROWS_AS(projective_data_by_quotients(c, TableOptions{8}), ResourceError);
}

TEST_CASE("quotient covering") {
  Covering c = cover("H3", prime(3));
  std::vector<Elem> map;
  Subgroup k = c.gstar->subgroup({c.A.gens.at(0)});
  Covering q = quotient_covering(c, k, &map);
  CHECK(q.gstar->order() == 81);
  CHECK(q.a_order() == 3);
  CHECK(map.size() == 243);
}
