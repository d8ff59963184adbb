#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "projembed/errors.hpp"
#include "projembed/verify.hpp"

using namespace projembed;

TEST_CASE("budgets") {
  CHECK(parse_budget("low") == Budget::low);
  CHECK(parse_budget("default") == Budget::standard);
  CHECK(parse_budget("high") == Budget::high);
  CHECK_THROWS_AS(parse_budget("huge"), InputError);
  CHECK(budget_classes_cubed(Budget::low) == 1000000);
  CHECK(budget_classes_cubed(Budget::high) == 10000000000ULL);
}

TEST_CASE("2^4 table") {
  VerificationReport r = verify_table(TableId::two4, 2);
  CHECK(r.rows.size() == 9);
  CHECK(r.count(RowStatus::match) == 9);
  CHECK_FALSE(r.has_mismatch());
}

TEST_CASE("p^3 table at p = 2 and p = 7") {
  CHECK(verify_table(TableId::p3, 2).count(RowStatus::match) == 2);
  CHECK(verify_table(TableId::p3, 7).count(RowStatus::match) == 2);
}

TEST_CASE("json is deterministic without timing") {
  std::string a = verify_table(TableId::p3, 3).to_json(false);
  std::string b = verify_table(TableId::p3, 3).to_json(false);
  CHECK(a == b);
  auto j = nlohmann::json::parse(a);
  CHECK(j["schema_version"] == 1);
  CHECK(j["summary"]["match"] == 2);
  CHECK(j["rows"][0]["witnesses"].contains("tau"));
  CHECK_FALSE(j["rows"][0].contains("seconds"));
}

TEST_CASE("low budget degrades to skipped rows, never omitted") {
  VerificationReport r = verify_table(TableId::p5, 5, Budget::low);
  CHECK(r.rows.size() == 60);
  CHECK(r.count(RowStatus::match) == 2);
  CHECK(r.count(RowStatus::mismatch) == 0);
  for (auto& row : r.rows) {
    if (row.status == RowStatus::skipped) CHECK_FALSE(row.reason.empty());
    if (row.row.rfind("Phi5", 0) == 0) CHECK(row.method == "closed-form");
  }
  std::string csv = r.to_csv();
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 61);
}
