#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "projembed/catalog.hpp"
#include "projembed/character_table.hpp"
#include "projembed/errors.hpp"
#include "projembed/presentation.hpp"
#include "projembed/projective.hpp"
#include "projembed/verify.hpp"

using namespace projembed;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct Ref {
  std::string group, file, covering;
  std::uint32_t p = 0, k = 0, n = 0, r = 0;
  bool partial = false;
  bool json = false, csv = false;
  std::string budget = "default";
  std::string table;

  CatalogParams params() const {
    CatalogParams q;
    if (p) q.p = p;
    if (k) q.k = k;
    if (n) q.n = n;
    if (r) q.r = r;
    return q;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has_kernel_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t");
    if (pos != std::string::npos && line.compare(pos, 6, "kernel") == 0) return true;
  }
  return false;
}

struct Resolved {
  std::string label;
  PcPresentation group;  // G
  std::optional<CoveringSpec> covering;
  bool representation_group = false;
  std::optional<CatalogInstance> instance;
};

Resolved resolve(const Ref& ref) {
  int given = !ref.group.empty() + !ref.file.empty() + !ref.covering.empty();
  if (given != 1) throw InputError("give exactly one of --group, --file, --covering");
  Resolved out;
  if (!ref.group.empty()) {
    CatalogInstance inst = catalog_get(ref.group, ref.params());
    out.label = inst.name + (inst.params.to_string().empty() ? "" : "[" + inst.params.to_string() + "]");
    out.group = inst.group;
    out.covering = inst.covering;
    out.representation_group = inst.representation_group && (inst.covering || inst.multiplier_order == 1);
    out.instance = std::move(inst);
    return out;
  }
  std::string text = read_file(ref.file.empty() ? ref.covering : ref.file);
  if (!ref.covering.empty() || has_kernel_line(text)) {
    CoveringSpec spec = parse_covering(text);
    require_consistent(spec.gstar);
    out.covering = spec;
    out.label = spec.label;
    out.representation_group = !ref.partial;
  } else {
    out.group = parse_presentation(text);
    require_consistent(out.group);
    out.label = out.group.name;
    out.representation_group = false;
  }
  return out;
}

Covering covering_of(const Resolved& r) {
  Covering c = r.covering ? load_covering(*r.covering) : trivial_covering(Group::build(r.group));
  c.representation_group = r.representation_group;
  if (!r.label.empty()) c.label = r.label;
  return c;
}

GroupPtr group_of(const Resolved& r) {
  if (r.covering) return load_covering(*r.covering).G;
  return Group::build(r.group);
}

int cmd_parse(const Ref& ref) {
  if (ref.file.empty() && ref.covering.empty()) {
    Resolved r = resolve(ref);
    std::cout << to_text(r.group);
    if (r.covering) std::cout << "\n" << to_text(*r.covering);
    return 0;
  }
  std::string text = read_file(ref.file.empty() ? ref.covering : ref.file);
  bool cov = !ref.covering.empty() || has_kernel_line(text);
  CoveringSpec spec;
  PcPresentation pres;
  if (cov) {
    spec = parse_covering(text);
    pres = spec.gstar;
  } else {
    pres = parse_presentation(text);
  }
  ConsistencyReport rep = check_consistency(pres);
  if (ref.json) {
    ojson j;
    j["schema_version"] = 1;
    j["name"] = pres.name;
    j["generators"] = pres.gens;
    j["consistent"] = rep.consistent;
    j["order"] = rep.consistent ? ojson(rep.order) : ojson(nullptr);
    j["tests"] = rep.tests.size();
    j["failures"] = rep.failures();
    if (cov) j["kernel"] = spec.kernel_gens;
    j["canonical"] = cov ? to_text(spec) : to_text(pres);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (cov ? to_text(spec) : to_text(pres));
    std::cout << "# " << rep.tests.size() << " overlap tests, " << (rep.consistent ? "consistent" : "INCONSISTENT");
    if (rep.consistent) std::cout << ", order " << rep.order;
    std::cout << "\n";
    for (auto& f : rep.failures()) std::cout << "# failed: " << f << "\n";
  }
  return rep.consistent ? 0 : kExitInput;
}

int cmd_info(const Ref& ref) {
  Resolved r = resolve(ref);
  GroupPtr g = group_of(r);
  std::optional<std::set<std::uint64_t>> cd;
  std::string cd_note;
  try {
    TableOptions opts;
    opts.max_classes_cubed = budget_classes_cubed(parse_budget(ref.budget));
    CharacterTable t = character_table(g, opts);
    auto d = t.degrees();
    cd = std::set<std::uint64_t>(d.begin(), d.end());
  } catch (const ResourceError& e) {
    cd_note = e.what();
  }
  if (ref.json) {
    ojson j;
    j["schema_version"] = 1;
    j["group"] = r.label;
    j["order"] = g->order();
    j["abelian"] = g->is_abelian();
    j["nilpotent"] = g->is_nilpotent();
    j["exponent"] = g->exponent();
    j["center_order"] = g->center().size();
    j["derived_order"] = g->derived_subgroup().size();
    j["classes"] = g->classes().count();
    j["cd"] = cd ? ojson(*cd) : ojson(nullptr);
    if (!cd_note.empty()) j["cd_note"] = cd_note;
    if (r.instance) {
      j["multiplier"] = r.instance->multiplier;
      j["covering"] = r.covering ? ojson(r.covering->gstar.name) : ojson(nullptr);
      j["representation_group"] = r.representation_group;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "group        " << r.label << "\n"
            << "order        " << g->order() << "\n"
            << "abelian      " << (g->is_abelian() ? "yes" : "no") << "\n"
            << "nilpotent    " << (g->is_nilpotent() ? "yes" : "no") << "\n"
            << "exponent     " << g->exponent() << "\n"
            << "|Z(G)|       " << g->center().size() << "\n"
            << "|G'|         " << g->derived_subgroup().size() << "\n"
            << "classes      " << g->classes().count() << "\n"
            << "cd(G)        ";
  if (cd) {
    bool first = true;
    for (auto x : *cd) std::cout << (first ? "{" : ", ") << x, first = false;
    std::cout << "}\n";
  } else {
    std::cout << "skipped: " << cd_note << "\n";
  }
  if (r.instance) {
    std::cout << "multiplier   " << r.instance->multiplier << "\n";
    if (r.covering) std::cout << "covering     " << r.covering->gstar.name << " (" << (r.representation_group ? "representation group" : "partial") << ")\n";
  }
  return 0;
}

int cmd_chartab(const Ref& ref) {
  Resolved r = resolve(ref);
  bool star = ref.group.empty() || (ref.group.size() > 4 && ref.group.ends_with("star")) || ref.group.ends_with("*");
  GroupPtr g = r.covering ? (star ? load_covering(*r.covering).gstar : group_of(r)) : Group::build(r.group);
  TableOptions opts;
  opts.max_classes_cubed = budget_classes_cubed(parse_budget(ref.budget));
  CharacterTable t = character_table(g, opts);
  if (ref.json)
    std::cout << table_to_json(t);
  else
    std::cout << table_to_csv(t);
  return 0;
}

int cmd_tau(const Ref& ref, TauKind kind) {
  Resolved r = resolve(ref);
  Covering c = covering_of(r);
  PreparedData prep = prepare_projective(c, budget_classes_cubed(parse_budget(ref.budget)));
  TauReport rep = kind == TauKind::tau ? tau(prep.data) : tau_irr(prep.data);
  rep.group = r.label;
  if (!verify_witness(prep.data, rep)) {
    std::cerr << "error: witness re-verification failed\n";
    return kExitMismatch;
  }
  std::cout << (ref.json ? rep.to_json() + "\n" : rep.to_text());
  if (!ref.json && !c.representation_group)
    std::cout << "note: covering not declared a representation group; value is an upper bound\n";
  return 0;
}

int cmd_verify(const Ref& ref) {
  if (ref.table.empty()) throw InputError("verify needs --table (p3, 2to4, p4, p5)");
  TableId id = parse_table_id(ref.table);
  std::uint32_t p = ref.p;
  if (!p) {
    if (id == TableId::two4) p = 2;
    else throw InputError("verify --table " + ref.table + " needs -p");
  }
  VerificationReport rep = verify_table(id, p, parse_budget(ref.budget));
  if (ref.json)
    std::cout << rep.to_json();
  else if (ref.csv)
    std::cout << rep.to_csv();
  else
    std::cout << rep.to_text();
  return rep.has_mismatch() ? kExitMismatch : 0;
}

int cmd_catalog(const Ref& ref) {
  if (ref.group.empty()) {
    if (ref.json) {
      ojson arr = ojson::array();
      for (auto& e : catalog_entries())
        arr.push_back({{"name", e.name}, {"aliases", e.aliases}, {"params", e.params}, {"description", e.description},
                       {"provenance", e.provenance}, {"covering", e.has_covering}});
      std::cout << ojson{{"schema_version", 1}, {"entries", arr}}.dump(2) << "\n";
      return 0;
    }
    for (auto& e : catalog_entries()) {
      std::cout << e.name;
      if (!e.params.empty()) std::cout << " [" << e.params << "]";
      for (auto& a : e.aliases) std::cout << " alias " << a;
      std::cout << "  " << e.description << (e.has_covering ? "; covering" : "") << "\n";
    }
    return 0;
  }
  CatalogInstance inst = catalog_get(ref.group, ref.params());
  StructureReport s = validate_instance(inst);
  if (ref.json) {
    ojson j;
    j["schema_version"] = 1;
    j["name"] = inst.name;
    j["params"] = inst.params.to_string();
    j["group"] = to_text(inst.group);
    j["covering"] = inst.covering ? ojson(to_text(*inst.covering)) : ojson(nullptr);
    j["representation_group"] = inst.representation_group;
    j["multiplier"] = inst.multiplier;
    j["provenance"] = inst.provenance;
    j["validation"] = {{"ok", s.ok}, {"gstar_order", s.gstar_order}, {"group_order", s.group_order},
                       {"a_order", s.a_order}, {"failures", s.failures}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "# " << inst.name << (inst.params.to_string().empty() ? "" : " [" + inst.params.to_string() + "]") << "\n"
              << "# " << inst.provenance << "\n# multiplier " << inst.multiplier << "\n"
              << to_text(inst.group);
    if (inst.covering) std::cout << "\n" << to_text(*inst.covering);
    std::cout << "# validation " << (s.ok ? "ok" : "FAILED") << ": |G*| = " << s.gstar_order << ", |G| = " << s.group_order
              << ", |A| = " << s.a_order << "\n";
    for (auto& f : s.failures) std::cout << "# " << f << "\n";
  }
  return s.ok ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projective embedding degrees of finite groups from covering data"};
  app.require_subcommand(1);
  Ref ref;

  auto common = [&](CLI::App* sub, bool group_flags) {
    if (group_flags) {
      sub->add_option("--group,-g", ref.group, "catalog name, e.g. Q8, H3, Phi2(1^3), C4xC2");
      sub->add_option("--file,-f", ref.file, "presentation file (a kernel line makes it a covering)");
      sub->add_option("--covering,-c", ref.covering, "covering file");
      sub->add_option("-p", ref.p, "prime parameter");
      sub->add_option("-k", ref.k, "exponent parameter");
      sub->add_option("-n", ref.n, "size parameter");
      sub->add_option("-r", ref.r, "family parameter");
      sub->add_flag("--partial", ref.partial, "the covering is not a representation group");
    }
    sub->add_flag("--json", ref.json, "JSON output");
    sub->add_option("--budget", ref.budget, "low, default or high")->check(CLI::IsMember({"low", "default", "high"}));
  };

  auto* parse = app.add_subcommand("parse", "parse a presentation and run the consistency checks");
  common(parse, true);
  auto* info = app.add_subcommand("info", "order, center, derived subgroup, classes, cd(G)");
  common(info, true);
  auto* chartab = app.add_subcommand("chartab", "character table of G, or of G* for coverings and starred names");
  common(chartab, true);
  chartab->add_flag("--csv", ref.csv, "CSV output (default)");
  auto* tau_cmd = app.add_subcommand("tau", "projective embedding degree");
  common(tau_cmd, true);
  auto* tau_irr_cmd = app.add_subcommand("tau-irr", "irreducible projective embedding degree");
  common(tau_irr_cmd, true);
  auto* verify = app.add_subcommand("verify", "check an expected-value table");
  common(verify, false);
  verify->add_option("--table,-t", ref.table, "p3, 2to4, p4 or p5")->required();
  verify->add_option("-p", ref.p, "prime");
  verify->add_flag("--csv", ref.csv, "CSV output");
  auto* catalog = app.add_subcommand("catalog", "list catalog entries or show one instance");
  common(catalog, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*parse) return cmd_parse(ref);
    if (*info) return cmd_info(ref);
    if (*chartab) return cmd_chartab(ref);
    if (*tau_cmd) return cmd_tau(ref, TauKind::tau);
    if (*tau_irr_cmd) return cmd_tau(ref, TauKind::tau_irr);
    if (*verify) return cmd_verify(ref);
    if (*catalog) return cmd_catalog(ref);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const StructureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  }
  return 0;
}
