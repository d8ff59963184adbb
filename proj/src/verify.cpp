#include "projembed/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "projembed/catalog.hpp"
#include "projembed/errors.hpp"

namespace projembed {

Budget parse_budget(const std::string& s) {
  if (s == "low") return Budget::low;
  if (s == "default" || s == "standard") return Budget::standard;
  if (s == "high") return Budget::high;
  throw InputError("unknown budget '" + s + "' (expected low, default or high)");
}

std::string budget_name(Budget b) {
  switch (b) {
    case Budget::low: return "low";
    case Budget::standard: return "default";
    case Budget::high: return "high";
  }
  return "";
}

std::uint64_t budget_classes_cubed(Budget b) {
  switch (b) {
    case Budget::low: return 1000000;
    case Budget::standard: return Limits::from_env().max_classes_cubed;
    case Budget::high: return 10000000000ULL;
  }
  return 0;
}

PreparedData prepare_projective(const Covering& c, std::uint64_t max_classes_cubed) {
  PreparedData out;
  TableOptions opts;
  opts.max_classes_cubed = max_classes_cubed;
  std::uint64_t k = c.gstar->classes().count();
  if (k * k * k <= max_classes_cubed || c.A.is_trivial()) {
    out.table = std::make_unique<CharacterTable>(character_table(c.gstar, opts));
    out.data = projective_data(c, *out.table);
  } else {
    out.data = projective_data_by_quotients(c, opts);
  }
  return out;
}

std::string status_name(RowStatus s) {
  switch (s) {
    case RowStatus::match: return "match";
    case RowStatus::mismatch: return "mismatch";
    case RowStatus::skipped: return "skipped";
    case RowStatus::bound_only: return "bound-only";
  }
  return "";
}

namespace {

std::string opt_text(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "-"; }

nlohmann::ordered_json opt_json(const std::optional<std::uint64_t>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

bool entry_accepts(const std::string& name, char param) {
  for (const auto& e : catalog_entries()) {
    if (e.name != name) continue;
    for (std::size_t i = 0; i < e.params.size(); ++i)
      if (e.params[i] == param) return true;
  }
  return false;
}

}  // namespace

VerifyRow verify_row(const ExpectedRow& e, TableId, std::uint32_t p, Budget budget) {
  auto start = std::chrono::steady_clock::now();
  VerifyRow v;
  v.row = e.row;
  v.catalog = e.catalog;
  v.expected_tau_text = e.tau_text;
  v.expected_tau_irr_text = e.tau_irr_text;
  v.expected_tau = e.tau;
  v.expected_tau_irr = e.tau_irr;
  v.printed_tau = e.printed_tau;
  v.note = e.note;
  v.method = "none";
  auto finish = [&] {
    v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return v;
  };
  if (e.catalog.empty()) {
    v.status = RowStatus::skipped;
    v.reason = "no presentation catalogued for this row";
    return finish();
  }
  CatalogParams q;
  if (entry_accepts(e.catalog, 'p')) q.p = p;
  if (e.r && entry_accepts(e.catalog, 'r')) q.r = e.r;
  v.params = q.to_string();
  try {
    CatalogInstance inst = catalog_get(e.catalog, q);
    if (!inst.covering && !inst.representation_group && inst.closed_form == ClosedFormKind::extraspecial &&
        inst.extraspecial_n >= 2) {
      ClosedValues cf = tau_extraspecial(p, inst.extraspecial_n);
      v.tau = cf.tau;
      v.tau_irr = cf.tau_irr;
      v.tau_exact = cf.tau_exact;
      v.computed = true;
      v.method = "closed-form";
      v.gstar_order = Group::build(inst.group)->order();
    } else {
      Covering c = instance_covering(inst);
      v.gstar_order = c.gstar->order();
      PreparedData prep = prepare_projective(c, budget_classes_cubed(budget));
      v.method = prep.data.decomposed ? "quotient-tables" : "table";
      TauReport r1 = tau(prep.data);
      TauReport r2 = tau_irr(prep.data);
      v.computed = true;
      v.tau = r1.value;
      v.tau_irr = r2.value;
      v.tau_exact = r1.exact;
      bool ok = verify_witness(prep.data, r1) && verify_witness(prep.data, r2);
      v.tau_report = std::move(r1);
      v.tau_irr_report = std::move(r2);
      if (!ok) {
        v.status = RowStatus::mismatch;
        v.reason = "witness re-verification failed";
        return finish();
      }
    }
  } catch (const ResourceError& ex) {
    v.status = RowStatus::skipped;
    v.reason = std::string("budget ") + budget_name(budget) + ": " + ex.what();
    return finish();
  }
  if (!v.tau_exact) {
    v.status = RowStatus::bound_only;
    v.reason = "covering is not a representation group; tau is an upper bound";
  } else if (v.tau == v.expected_tau && v.tau_irr == v.expected_tau_irr) {
    v.status = RowStatus::match;
  } else {
    v.status = RowStatus::mismatch;
    v.reason = "computed (" + opt_text(v.tau) + ", " + opt_text(v.tau_irr) + ") vs expected (" +
               opt_text(v.expected_tau) + ", " + opt_text(v.expected_tau_irr) + ")";
  }
  return finish();
}

VerificationReport verify_table(TableId table, std::uint32_t p, Budget budget) {
  ExpectedTable t = table_expected(table, p);
  VerificationReport rep;
  rep.table = table;
  rep.p = t.p;
  rep.version = t.version;
  rep.budget = budget;
  rep.rows.resize(t.rows.size());
  std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), t.rows.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](std::size_t w) {
    try {
      for (std::size_t i; (i = next++) < t.rows.size();) rep.rows[i] = verify_row(t.rows[i], table, t.p, budget);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rep;
}

std::size_t VerificationReport::count(RowStatus s) const {
  std::size_t n = 0;
  for (auto& r : rows) n += r.status == s;
  return n;
}

std::string VerificationReport::to_json(bool timing) const {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["table"] = table_id_name(table);
  j["table_version"] = version;
  j["p"] = p;
  j["budget"] = budget_name(budget);
  j["budget_classes_cubed"] = budget_classes_cubed(budget);
  j["summary"] = {{"rows", rows.size()},
                  {"match", count(RowStatus::match)},
                  {"mismatch", count(RowStatus::mismatch)},
                  {"skipped", count(RowStatus::skipped)},
                  {"bound_only", count(RowStatus::bound_only)}};
  auto& arr = j["rows"] = nlohmann::ordered_json::array();
  for (auto& r : rows) {
    nlohmann::ordered_json o;
    o["row"] = r.row;
    o["catalog"] = r.catalog;
    o["params"] = r.params;
    o["expected"] = {{"tau", opt_json(r.expected_tau)}, {"tau_irr", opt_json(r.expected_tau_irr)},
                     {"tau_expr", r.expected_tau_text}, {"tau_irr_expr", r.expected_tau_irr_text}};
    if (r.printed_tau) o["printed_tau"] = *r.printed_tau;
    if (r.computed)
      o["computed"] = {{"tau", opt_json(r.tau)}, {"tau_irr", opt_json(r.tau_irr)}, {"exact", r.tau_exact}};
    else
      o["computed"] = nullptr;
    o["status"] = status_name(r.status);
    o["method"] = r.method;
    o["reason"] = r.reason;
    o["note"] = r.note;
    o["gstar_order"] = r.gstar_order;
    nlohmann::ordered_json w;
    if (r.tau_report) w["tau"] = nlohmann::ordered_json::parse(r.tau_report->to_json());
    if (r.tau_irr_report) w["tau_irr"] = nlohmann::ordered_json::parse(r.tau_irr_report->to_json());
    o["witnesses"] = w.is_null() ? nlohmann::ordered_json::object() : w;
    if (timing) o["seconds"] = r.seconds;
    arr.push_back(std::move(o));
  }
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
  std::ostringstream o;
  o << "table " << table_id_name(table) << " (version " << version << "), p = " << p << ", budget "
    << budget_name(budget) << "\n";
  std::size_t w = 4;
  for (auto& r : rows) w = std::max(w, r.row.size());
  o << std::left << std::setw(static_cast<int>(w) + 2) << "row" << std::setw(14) << "expected" << std::setw(14)
    << "computed" << std::setw(12) << "status" << std::setw(17) << "method"
    << "seconds\n";
  for (auto& r : rows) {
    std::string exp = "(" + opt_text(r.expected_tau) + ", " + opt_text(r.expected_tau_irr) + ")";
    std::string got = r.computed ? "(" + opt_text(r.tau) + ", " + opt_text(r.tau_irr) + ")" : "";
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(2) << r.seconds;
    o << std::setw(static_cast<int>(w) + 2) << r.row << std::setw(14) << exp << std::setw(14) << got << std::setw(12)
      << status_name(r.status) << std::setw(17) << r.method << secs.str() << "\n";
    if (!r.reason.empty() && r.status != RowStatus::skipped) o << "    " << r.reason << "\n";
    if (r.status == RowStatus::skipped && r.reason.rfind("no presentation", 0) != 0) o << "    " << r.reason << "\n";
    if (!r.note.empty()) o << "    note: " << r.note << "\n";
  }
  o << count(RowStatus::match) << " match, " << count(RowStatus::mismatch) << " mismatch, "
    << count(RowStatus::skipped) << " skipped, " << count(RowStatus::bound_only) << " bound-only\n";
  return o.str();
}

std::string VerificationReport::to_csv() const {
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream o;
  o << "table,p,budget,row,catalog,params,expected_tau,expected_tau_irr,printed_tau,tau,tau_irr,exact,status,method,"
       "reason,seconds\n";
  for (auto& r : rows) {
    o << table_id_name(table) << ',' << p << ',' << budget_name(budget) << ',' << field(r.row) << ','
      << field(r.catalog) << ',' << field(r.params) << ',' << opt_text(r.expected_tau) << ','
      << opt_text(r.expected_tau_irr) << ',' << (r.printed_tau ? std::to_string(*r.printed_tau) : "") << ','
      << (r.computed ? opt_text(r.tau) : "") << ',' << (r.computed ? opt_text(r.tau_irr) : "") << ','
      << (r.computed ? (r.tau_exact ? "1" : "0") : "") << ',' << status_name(r.status) << ',' << r.method << ','
      << field(r.reason) << ',' << std::fixed << std::setprecision(3) << r.seconds << '\n';
  }
  return o.str();
}

}  // namespace projembed
