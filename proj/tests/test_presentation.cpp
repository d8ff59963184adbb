#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "projembed/errors.hpp"
#include "projembed/presentation.hpp"

using namespace projembed;

static const char* kH3Star = R"(pcgroup H3_3_1_star
gen x y z z1 z2
ord x=3 y=3 z=3 z1=3 z2=3
conj y^x = y*z^2
conj z^x = z*z1
conj z^y = z*z2
end
kernel z1 z2
quotient H3
)";

TEST_CASE("parse a covering") {
  CoveringSpec c = parse_covering(kH3Star);
  CHECK(c.gstar.size() == 5);
  CHECK(c.kernel_gens == std::vector<std::string>{"z1", "z2"});
  CHECK(c.kernel_start() == 3);
  CHECK(c.gstar.order() == 243);
  CHECK(check_consistency(c.gstar).consistent);
}

TEST_CASE("canonical text reparses to the same structure") {
  CoveringSpec c = parse_covering(kH3Star);
  CoveringSpec again = parse_covering(to_text(c));
  CHECK(again.gstar == c.gstar);
  CHECK(again.kernel_gens == c.kernel_gens);
  PcPresentation p = parse_presentation(to_text(c.gstar));
  CHECK(p == c.gstar);
}

TEST_CASE("commutator relations") {
  PcPresentation p = parse_presentation(R"(pcgroup P
gen b a ap
ord b=3 a=3 ap=3
pow a=ap
comm [a,b]=ap
end
)");
  CHECK(p.order() == 27);
  CHECK(check_consistency(p).consistent);
}

TEST_CASE("inconsistent presentation is reported") {
  PcPresentation p = parse_presentation(R"(pcgroup Bad
gen a b
ord a=2 b=3
pow a=b
conj b^a = b^2
end
)");
  ConsistencyReport r = check_consistency(p);
  CHECK_FALSE(r.consistent);
  CHECK_FALSE(r.failures().empty());
  CHECK_THROWS_AS(require_consistent(p), StructureError);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_presentation("pcgroup X\ngen a\nord a=2\npow a=q\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("pcgroup X\ngen a b\nord a=2\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("pcgroup X\ngen a b\nord a=2 b=2\nconj b^a = b^-1\nend\n"), ParseError);
}

TEST_CASE("empty generator list is the trivial group") {
  PcPresentation p = parse_presentation("pcgroup T\ngen\nend\n");
  CHECK(p.size() == 0);
  CHECK(p.order() == 1);
}
