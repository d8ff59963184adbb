#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "projembed/cyclotomic.hpp"

using namespace projembed;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(9) == std::vector<std::int64_t>{1, 0, 0, 1, 0, 0, 1});
  CHECK(euler_phi(25) == 20);
  CHECK(euler_phi(16) == 8);
}

TEST_CASE("roots of unity") {
  Cyclotomic z = Cyclotomic::root_of_unity(3, 1);
  Cyclotomic one = Cyclotomic::integer(3, 1);
  CHECK((one + z + z * z).is_zero());
  CHECK(z * z * z == one);
  CHECK(Cyclotomic::root_of_unity(12, 12) == Cyclotomic::integer(12, 1));
  CHECK(Cyclotomic::root_of_unity(12, -1) == Cyclotomic::root_of_unity(12, 11));
  CHECK(Cyclotomic::root_of_unity(8, 2).abs_square() == Cyclotomic::integer(8, 1));
}

TEST_CASE("canonical text") {
  CHECK(Cyclotomic::root_of_unity(12, 1).to_string() == "z12");
  CHECK((Cyclotomic::integer(5, 3) - Cyclotomic::root_of_unity(5, 2)).to_string() == "3 - z5^2");
  CHECK(Cyclotomic::integer(7, 0).to_string() == "0");
}

TEST_CASE("scaled roots and conjugation") {
  Cyclotomic x = Cyclotomic::root_of_unity(9, 4).scaled(3);
  auto j = x.as_scaled_root(3);
  REQUIRE(j.has_value());
  CHECK(*j == 4);
  CHECK_FALSE(x.as_scaled_root(2).has_value());
  CHECK(x.conjugate() == Cyclotomic::root_of_unity(9, 5).scaled(3));
  CHECK(x.abs_square() == Cyclotomic::integer(9, 9));
  CHECK(Cyclotomic::integer(4, -2).as_integer() == BigInt(-2));
}

TEST_CASE("coercion to a multiple conductor") {
  Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  CHECK(z3.coerce(12) == Cyclotomic::root_of_unity(12, 4));
  CHECK(Cyclotomic::root_of_unity(4, 1).coerce(12) * z3.coerce(12) == Cyclotomic::root_of_unity(12, 7));
}

TEST_CASE("exponent counts: the sum of all 5th roots vanishes") {
  CHECK(Cyclotomic::from_exponent_counts(5, {1, 1, 1, 1, 1}).is_zero());
  CHECK(Cyclotomic::from_exponent_counts(4, {2, 0, 1, 0}) == Cyclotomic::integer(4, 1));
}

TEST_CASE("promotion past int64") {
  Cyclotomic x = Cyclotomic::integer(5, 3037000500LL);
  Cyclotomic sq = x * x;
  CHECK_FALSE(sq.is_small());
  CHECK(sq.as_integer() == BigInt(3037000500LL) * BigInt(3037000500LL));
  Cyclotomic back = sq - sq + Cyclotomic::integer(5, 7);
  CHECK(back.is_small());
  CHECK(back == Cyclotomic::integer(5, 7));
}
