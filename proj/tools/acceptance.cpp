#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "harness.hpp"
#include "projembed/catalog.hpp"
#include "projembed/closed_forms.hpp"
#include "projembed/verify.hpp"

using namespace projembed;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string opt(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "-"; }

// Criteria whose stated bound no representation group can meet; they still print FAIL.
const std::set<int> kUnattainable = {3};

bool run(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = s < limit_s;
  bool pass = o.pass && in_time;
  std::ostringstream line;
  line << "criterion " << id << " " << (pass ? "PASS" : "FAIL") << "  " << title << "  [" << std::fixed
       << std::setprecision(1) << s << " s, limit " << limit_s << " s]  " << o.detail;
  if (!in_time) line << "; time limit exceeded";
  if (!pass && kUnattainable.count(id)) line << " (known unattainable)";
  std::cout << line.str() << std::endl;
  return pass;
}

Outcome table_all_match(TableId id, std::uint32_t p, std::size_t expected_rows) {
  VerificationReport r = verify_table(id, p);
  Outcome o;
  std::size_t m = r.count(RowStatus::match);
  o.pass = m == expected_rows && r.rows.size() == expected_rows;
  o.detail = table_id_name(id) + " p=" + std::to_string(r.p) + ": " + std::to_string(m) + "/" +
             std::to_string(r.rows.size()) + " match";
  for (auto& row : r.rows)
    if (row.status != RowStatus::match) o.detail += "; " + row.row + " " + status_name(row.status) + " " + row.reason;
  return o;
}

struct Computed {
  std::optional<std::uint64_t> tau, tau_irr;
  bool exact = false, witnessed = false;
  std::uint64_t gstar_order = 0;
};

Computed compute(const std::string& name, const CatalogParams& q, Budget b = Budget::standard) {
  CatalogInstance inst = catalog_get(name, q);
  Covering c = instance_covering(inst);
  PreparedData prep = prepare_projective(c, budget_classes_cubed(b));
  TauReport r1 = tau(prep.data), r2 = tau_irr(prep.data);
  return {r1.value, r2.value, r1.exact, verify_witness(prep.data, r1) && verify_witness(prep.data, r2),
          c.gstar->order()};
}

}  // namespace

int main() {
  int failed = 0, unexpected = 0;
  auto tally = [&](int id, bool pass) {
    failed += !pass;
    unexpected += !pass && !kUnattainable.count(id);
  };

  tally(1, run(1, "2^4 table, Q16 at tau = 3", 60, [] {
    Outcome o = table_all_match(TableId::two4, 2, 9);
    VerificationReport r = verify_table(TableId::two4, 2);
    for (auto& row : r.rows)
      if (row.row.find("Q16") != std::string::npos) {
        bool flagged = row.printed_tau == 2u && row.tau == 3u;
        o.pass = o.pass && flagged;
        o.detail += "; Q16 computed " + opt(row.tau) + ", printed " + opt(row.printed_tau) + " (discrepancy reported)";
      }
    return o;
  }));

  tally(2, run(2, "p^3 at p = 3, 5", 120, [] {
    Outcome o{true, ""};
    for (std::uint32_t p : {3u, 5u}) {
      CatalogParams q;
      q.p = p;
      Computed a = compute("Phi2(21)", q), b = compute("Phi2(1^3)", q);
      bool ok = a.tau == p + 1 && !a.tau_irr && b.tau == p && b.tau_irr == p && a.exact && b.exact && a.witnessed &&
                b.witnessed;
      o.pass = o.pass && ok;
      o.detail += "p=" + std::to_string(p) + ": Phi2(21) (" + opt(a.tau) + ", " + opt(a.tau_irr) + "), Phi2(1^3) (" +
                  opt(b.tau) + ", " + opt(b.tau_irr) + ")  ";
    }
    return o;
  }));

  tally(3, run(3, "p^4 table at p = 3", 600, [] {
    Outcome o = table_all_match(TableId::p4, 3, 10);
    std::uint64_t largest = 0;
    for (auto& row : verify_table(TableId::p4, 3).rows) largest = std::max(largest, row.gstar_order);
    o.pass = o.pass && largest <= 729;
    o.detail += ", largest covering " + std::to_string(largest);
    if (largest > 729)
      o.detail += " exceeds 3^6; Phi2(1^4) = Phi2(1^3) x Z/3 has |M(G)| = 81, so every representation group has order 3^8";
    return o;
  }));

  tally(4, run(4, "abelian oracle, |G| <= 81", 600, [] {
    auto cases = abelian_oracle(81);
    Outcome o{true, ""};
    std::size_t forms = 0, ok = 0, sym = 0;
    for (auto& c : cases) {
      forms += c.forms;
      ok += c.ok;
      sym += c.tau_irr_closed.has_value();
      if (!c.ok) {
        o.pass = false;
        std::string inv;
        for (auto e : c.inv.exponents) inv += std::to_string(e);
        o.detail += "p=" + std::to_string(c.inv.p) + " (" + inv + ") tau " + std::to_string(c.tau) + " vs " +
                    std::to_string(c.tau_closed) + "; ";
      }
    }
    o.detail += std::to_string(ok) + "/" + std::to_string(cases.size()) + " groups agree over " +
                std::to_string(forms) + " forms, " + std::to_string(sym) + " symmetric types";
    return o;
  }));

  tally(5, run(5, "extraspecial 2^5", 900, [] {
    Outcome o{true, ""};
    ClosedValues cf = tau_extraspecial(2, 2);
    for (const char* n : {"ES32+", "ES32-"}) {
      Computed c = compute(n, {});
      bool ok = c.tau == cf.tau && !c.tau_irr && !cf.tau_irr && c.exact && c.witnessed && c.gstar_order == 1024;
      o.pass = o.pass && ok;
      o.detail += std::string(n) + ": tau " + opt(c.tau) + " (closed form " + std::to_string(cf.tau) + "), tau_irr " +
                  opt(c.tau_irr) + ", |G*| " + std::to_string(c.gstar_order) + "  ";
    }
    return o;
  }));

  tally(6, run(6, "Heisenberg H3(Z/3), H3(Z/9)", 1200, [] {
    Outcome o{true, ""};
    for (std::uint32_t k : {1u, 2u}) {
      CatalogParams q;
      q.p = 3;
      q.k = k;
      Computed c = compute("H3", q);
      std::uint64_t want = k == 1 ? 3 : 9;
      bool ok = c.tau == want && c.tau_irr == want && c.exact && c.witnessed;
      o.pass = o.pass && ok;
      o.detail += "k=" + std::to_string(k) + ": (" + opt(c.tau) + ", " + opt(c.tau_irr) + "), |G*| " +
                  std::to_string(c.gstar_order) + "  ";
    }
    return o;
  }));

  tally(7, run(7, "p^5 spot rows at p = 5", 900, [] {
    ExpectedTable t = table_expected(TableId::p5, 5);
    ClosedValues cf = tau_extraspecial(5, 2);
    Outcome o{true, ""};
    for (auto& e : t.rows) {
      if (e.row.rfind("Phi5", 0) == 0) {
        VerifyRow v = verify_row(e, TableId::p5, 5, Budget::standard);
        bool ok = v.status == RowStatus::match && v.method == "closed-form" && v.tau == cf.tau && !v.tau_irr;
        o.pass = o.pass && ok;
        o.detail += e.row + " " + status_name(v.status) + " (" + opt(v.tau) + ", " + opt(v.tau_irr) + "); ";
      }
      if (e.row == "Phi9(1^5)") {
        VerifyRow v = verify_row(e, TableId::p5, 5, Budget::standard);
        VerifyRow h = verify_row(e, TableId::p5, 5, Budget::high);
        bool high_ok = h.status == RowStatus::match && h.tau == 5u && h.tau_irr == 5u;
        bool ok;
        if (v.status == RowStatus::skipped)
          ok = v.reason.find("exceeds the classes-cubed budget") != std::string::npos && high_ok;
        else
          ok = v.status == RowStatus::match && v.tau == 5u && v.tau_irr == 5u;
        o.pass = o.pass && ok;
        o.detail += "Phi9(1^5) default budget: " + status_name(v.status) +
                    (v.status == RowStatus::skipped ? " (" + v.reason + ")" : "") + "; high budget: " +
                    status_name(h.status) + " (" + opt(h.tau) + ", " + opt(h.tau_irr) + ")";
      }
    }
    return o;
  }));

  tally(8, run(8, "property suites", 1200, [] {
    auto checks = run_property_suite();
    Outcome o{true, ""};
    for (auto& c : checks) {
      o.pass = o.pass && c.ok() && c.cases > 0;
      o.detail += c.name + " " + std::to_string(c.cases - std::min(c.cases, c.failures.size())) + "/" +
                  std::to_string(c.cases) + "; ";
      for (auto& f : c.failures) o.detail += "[" + f + "] ";
    }
    return o;
  }));

  std::cout << (8 - failed) << "/8 criteria passed";
  if (failed > unexpected) std::cout << ", " << (failed - unexpected) << " known unattainable";
  std::cout << std::endl;
  return unexpected == 0 ? 0 : 1;
}
