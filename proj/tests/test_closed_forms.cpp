#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "projembed/closed_forms.hpp"
#include "projembed/errors.hpp"

using namespace projembed;

TEST_CASE("abelian tau") {
  CHECK(tau_abelian(AbelianInvariants{2, {1}}) == 2);
  CHECK(tau_abelian(AbelianInvariants{2, {1, 1}}) == 2);
  CHECK(tau_abelian(AbelianInvariants{2, {1, 1, 1}}) == 4);
  CHECK(tau_abelian(AbelianInvariants{2, {1, 1, 1, 1}}) == 4);
  CHECK(tau_abelian(AbelianInvariants{2, {1, 1, 1, 1, 1, 1}}) == 7);
  CHECK(tau_abelian(AbelianInvariants{3, {1, 1}}) == 3);
  CHECK(tau_abelian(AbelianInvariants{3, {2, 1, 1}}) == 4);
  CHECK(tau_abelian(std::vector<std::uint64_t>{}) == 1);
  CHECK(tau_abelian(std::vector<std::uint64_t>{6, 2}) == 3);
}

TEST_CASE("abelian tau_irr on symmetric types") {
  CHECK(tau_irr_abelian(AbelianInvariants{3, {2, 2}}) == 9u);
  CHECK(tau_irr_abelian(AbelianInvariants{2, {3, 3}}) == 8u);
  CHECK(tau_irr_abelian(AbelianInvariants{2, {2, 2, 1, 1}}) == 8u);
  CHECK_FALSE(tau_irr_abelian(AbelianInvariants{3, {2, 1}}).has_value());
  CHECK(is_symmetric_type({4, 4, 3, 3}));
  CHECK_FALSE(is_symmetric_type({4, 2}));
}

TEST_CASE("regular subgroup of an alternating form") {
  AlternatingForm f = AlternatingForm::standard_symplectic(3, 1, 2);
  CHECK(regular_subgroup(f).kernel_size == 1);
  CHECK(irr_degree_abelian(f) == 3);
  AlternatingForm z = AlternatingForm::zero(5, 1, 3);
  CHECK(regular_subgroup(z).kernel_size == 125);
  AlternatingForm g = AlternatingForm::zero(3, 2, 2);
  g.c[0][1] = 3;
  g.c[1][0] = 6;
  RegularSubgroup r = regular_subgroup(g);
  CHECK(r.kernel_size == 9);
  CHECK(irr_degree_abelian(g) == 3);
}

TEST_CASE("extraspecial and Heisenberg") {
  CHECK(tau_extraspecial(2, 2).tau == 4);
  CHECK_FALSE(tau_extraspecial(2, 2).tau_irr.has_value());
  CHECK(tau_extraspecial(5, 2).tau == 10);
  CHECK(tau_extraspecial(3, 3).tau == 12);
  CHECK_THROWS_AS(tau_extraspecial(3, 1), InputError);
  ClosedValues h = heisenberg_values(3, 2, 1);
  CHECK(h.tau == 9);
  CHECK(h.tau_irr == 9u);
  CHECK(h.tau_exact);
  CHECK_FALSE(heisenberg_values(3, 1, 2).tau_exact);
  CHECK_THROWS_AS(heisenberg_values(2, 1, 1), InputError);
}

TEST_CASE("direct product rules") {
  FactorData q8{8, true, 3, std::nullopt};
  FactorData c3sq{9, false, 3, 3};
  ProductValues v = product_rules(q8, c3sq);
  CHECK(v.tau_upper == 9u);
  CHECK_FALSE(v.rules.empty());
  FactorData d8{8, false, 2, 2};
  CHECK(product_tau_irr(d8, c3sq) == 6);
  CHECK_THROWS_AS(product_tau_irr(q8, c3sq), InputError);
}

TEST_CASE("expected tables") {
  ExpectedTable two = table_expected(TableId::two4, 2);
  CHECK(two.rows.size() == 9);
  bool q16 = false;
  for (auto& r : two.rows)
    if (r.row.find("Q16") != std::string::npos) {
      q16 = true;
      CHECK(r.tau == 3u);
      CHECK(r.printed_tau == 2u);
      CHECK_FALSE(r.note.empty());
    }
  CHECK(q16);
  CHECK(table_expected(TableId::p3, 5).rows.size() == 2);
  ExpectedTable p4 = table_expected(TableId::p4, 3);
  CHECK(p4.rows.size() == 10);
  ExpectedTable p5 = table_expected(TableId::p5, 7);
  CHECK(p5.rows.size() == 60);
  CHECK(p5.p == 7);
  CHECK_THROWS_AS(table_expected(TableId::p5, 3), InputError);
  CHECK_THROWS_AS(table_expected(TableId::p4, 2), InputError);
  CHECK(parse_table_id("2^4") == TableId::two4);
  CHECK(table_id_name(TableId::p5) == "p5");
  CHECK(two.to_csv().find("Q16") != std::string::npos);
}

TEST_CASE("least nonresidue") {
  CHECK(least_nonresidue(3) == 2);
  CHECK(least_nonresidue(5) == 2);
  CHECK(least_nonresidue(7) == 3);
  CHECK(least_nonresidue(17) == 3);
  CHECK(least_nonresidue(23) == 5);
}
