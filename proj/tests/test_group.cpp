#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "projembed/catalog.hpp"
#include "projembed/group.hpp"

using namespace projembed;

static GroupPtr build(const std::string& name, CatalogParams q = {}) {
  return Group::build(catalog_get(name, q).group);
}

static std::vector<std::uint32_t> sorted_sizes(const Group& g) {
  auto s = g.classes().sizes;
  std::sort(s.begin(), s.end());
  return s;
}

TEST_CASE("Q8") {
  GroupPtr g = build("Q8");
  CHECK(g->order() == 8);
  CHECK(sorted_sizes(*g) == std::vector<std::uint32_t>{1, 1, 2, 2, 2});
  CHECK(g->center().size() == 2);
  CHECK(g->derived_subgroup().size() == 2);
  CHECK(g->exponent() == 4);
  CHECK(g->is_nilpotent());
  CHECK_FALSE(g->is_abelian());
}

TEST_CASE("Heisenberg group of order 27") {
  CatalogParams q;
  q.p = 3;
  GroupPtr g = build("H3", q);
  CHECK(g->classes().count() == 11);
  CHECK(g->center().size() == 3);
  CHECK(g->exponent() == 3);
}

TEST_CASE("S3 and D12 are not nilpotent") {
  CatalogParams q;
  q.n = 6;
  GroupPtr s3 = build("Dihedral", q);
  CHECK(sorted_sizes(*s3) == std::vector<std::uint32_t>{1, 2, 3});
  CHECK_FALSE(s3->is_nilpotent());
  q.n = 12;
  GroupPtr d12 = build("Dihedral", q);
  CHECK(d12->classes().count() == 6);
  CHECK_FALSE(d12->is_nilpotent());
}

TEST_CASE("element arithmetic") {
  GroupPtr g = build("D8");
  for (Elem x = 0; x < g->order(); ++x) {
    CHECK(g->mul(x, g->inv(x)) == 0);
    CHECK(g->pow(x, static_cast<std::int64_t>(g->element_order(x))) == 0);
    CHECK(g->decode(x).size() == g->ngens());
    CHECK(g->encode(g->decode(x)) == x);
  }
}

TEST_CASE("quotients and products") {
  GroupPtr q8 = build("Q8");
  Quotient q = quotient(*q8, q8->center());
  CHECK(q.group->order() == 4);
  CHECK(q.group->is_abelian());
  CHECK(q.group->exponent() == 2);
  GroupPtr d8 = build("D8");
  GroupPtr prod = direct_product(*d8, *q8);
  CHECK(prod->order() == 64);
  CHECK(prod->classes().count() == 25);
  CHECK(prod->center().size() == 4);
}

TEST_CASE("subgroups") {
  GroupPtr g = build("Q8");
  Subgroup h = g->subgroup({g->generator(0)});
  CHECK(h.size() == 4);
  CHECK(g->is_normal(h));
  CHECK(g->centralizer(g->generator(0)).size() == 4);
  CHECK(g->normal_closure({g->generator(0)}).size() == 4);
  CHECK(g->trivial_subgroup().is_trivial());
}

TEST_CASE("extension from an alternating form") {
  AbelianInvariants inv{3, {1, 1}};
  AlternatingForm f = AlternatingForm::standard_symplectic(3, 1, 2);
  GroupPtr e = Group::build(extension_from_form(inv, f));
  CHECK(e->order() == 27);
  CHECK(e->center().size() == 3);
  CHECK(e->classes().count() == 11);
  GroupPtr a = Group::build(abelian_presentation(AbelianInvariants{2, {2, 1}}));
  CHECK(a->order() == 8);
  CHECK(a->is_abelian());
  CHECK(a->exponent() == 4);
}

TEST_CASE("abelian decomposition of a subgroup") {
  GroupPtr a = Group::build(abelian_presentation(AbelianInvariants{2, {2, 1}}));
  AbelianDecomposition d = decompose_abelian(*a, a->whole());
  CHECK(d.size() == 8);
}
