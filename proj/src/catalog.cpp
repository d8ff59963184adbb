#include "projembed/catalog.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <regex>
#include <sstream>

#include "catalog_data.hpp"
#include "projembed/closed_forms.hpp"
#include "projembed/errors.hpp"
#include "projembed/forms.hpp"
#include "projembed/group.hpp"

namespace projembed {

std::string CatalogParams::to_string() const {
  std::string out;
  auto add = [&](const char* k, const std::optional<std::uint32_t>& v) {
    if (!v) return;
    if (!out.empty()) out += ',';
    out += std::string(k) + "=" + std::to_string(*v);
  };
  add("p", p);
  add("k", k);
  add("n", n);
  add("r", r);
  return out;
}

namespace {

// Line-by-line pc text.
struct Text {
  std::string name;
  std::vector<std::pair<std::string, std::uint64_t>> gens;
  std::vector<std::string> rels;
  std::vector<std::string> kernel;

  std::string str() const {
    std::ostringstream o;
    o << "pcgroup " << name << "\ngen";
    for (auto& g : gens) o << ' ' << g.first;
    o << "\nord";
    for (auto& g : gens) o << ' ' << g.first << '=' << g.second;
    o << '\n';
    for (auto& r : rels) o << r << '\n';
    o << "end\n";
    if (!kernel.empty()) {
      o << "kernel";
      for (auto& k : kernel) o << ' ' << k;
      o << '\n';
    }
    return o.str();
  }
};

std::string pw(const std::string& g, std::uint64_t e) { return e == 1 ? g : g + "^" + std::to_string(e); }

struct Built {
  std::string group;
  std::string star;  // empty: none
  std::string multiplier;
  std::uint64_t multiplier_order = 0;
  bool representation_group = true;
  ClosedFormKind closed_form = ClosedFormKind::none;
  std::vector<std::uint64_t> abelian_orders;
  std::uint32_t extraspecial_n = 0;
  std::string provenance;
};

struct Def {
  CatalogEntry entry;
  std::function<Built(const CatalogParams&)> build;
};

[[noreturn]] void bad_param(const std::string& msg) { throw InputError(msg); }

std::uint32_t need_prime(const CatalogParams& q, const std::string& name, std::uint32_t min_p = 2) {
  if (!q.p) bad_param(name + " needs a prime parameter p");
  if (!is_prime(*q.p)) bad_param(name + ": p = " + std::to_string(*q.p) + " is not prime");
  if (*q.p < min_p) bad_param(name + " needs p >= " + std::to_string(min_p));
  return *q.p;
}

std::uint32_t need(const std::optional<std::uint32_t>& v, const std::string& name, const char* key,
                   std::uint32_t min) {
  if (!v) bad_param(name + " needs parameter " + key);
  if (*v < min) bad_param(name + " needs " + key + " >= " + std::to_string(min));
  return *v;
}

std::string power_string(const std::string& base, std::size_t count) {
  if (count == 0) return "trivial";
  if (count == 1) return base;
  return "(" + base + ")^" + std::to_string(count);
}

// Rep group of an abelian group: [x_j, x_i] = z_ij of order gcd(n_i, n_j).
Built abelian_build(const std::vector<std::uint64_t>& orders, const std::string& name) {
  Built b;
  Text g{name, {}, {}, {}};
  for (std::size_t i = 0; i < orders.size(); ++i) g.gens.push_back({"x" + std::to_string(i + 1), orders[i]});
  Text s = g;
  s.name = name + "_star";
  std::uint64_t mo = 1;
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      std::uint64_t d = std::gcd(orders[i], orders[j]);
      if (d == 1) continue;
      std::string z = "z" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      s.gens.push_back({z, d});
      s.rels.push_back("comm [x" + std::to_string(j + 1) + ",x" + std::to_string(i + 1) + "] = " + z);
      s.kernel.push_back(z);
      mo *= d;
      parts.push_back("Z/" + std::to_string(d));
    }
  b.group = g.str();
  if (!s.kernel.empty()) b.star = s.str();
  b.multiplier_order = mo;
  if (parts.empty()) {
    b.multiplier = "trivial";
  } else {
    for (std::size_t i = 0; i < parts.size(); ++i) b.multiplier += (i ? " x " : "") + parts[i];
  }
  b.closed_form = ClosedFormKind::abelian;
  b.abelian_orders = orders;
  b.provenance = "standard family: abelian group with its class-two representation group";
  return b;
}

Built heisenberg_build(std::uint32_t p, std::uint32_t k) {
  std::uint64_t q = ipow(p, k);
  Text g{"H3_" + std::to_string(p) + "_" + std::to_string(k), {{"x", q}, {"y", q}, {"z", q}}, {}, {}};
  g.rels.push_back("comm [y,x] = " + pw("z", q - 1));
  Text s = g;
  s.name += "_star";
  s.gens.push_back({"z1", q});
  s.gens.push_back({"z2", q});
  s.rels.push_back("comm [z,x] = z1");
  s.rels.push_back("comm [z,y] = z2");
  s.kernel = {"z1", "z2"};
  Built b;
  b.group = g.str();
  b.star = s.str();
  b.multiplier = power_string("Z/" + std::to_string(q), 2);
  b.multiplier_order = q * q;
  b.closed_form = ClosedFormKind::heisenberg;
  b.provenance = "representation group: [x,y]=z, [z,x]=z1, [z,y]=z2, exponent p^k";
  return b;
}

std::vector<Def> make_defs() {
  std::vector<Def> defs;
  auto add = [&](CatalogEntry e, std::function<Built(const CatalogParams&)> f) {
    defs.push_back({std::move(e), std::move(f)});
  };

  for (std::size_t i = 0; i < catalog_data::kFixedCount; ++i) {
    const auto& f = catalog_data::kFixed[i];
    std::string name = f.name;
    if (name == "Phi3(211)b_2") continue;  // reached through Phi3(211)b with r
    CatalogEntry e;
    e.name = name == "Phi3(211)b_1" ? "Phi3(211)b" : name;
    e.params = f.p == 2 ? "" : "p";
    if (e.name == "Phi3(211)b") e.params = "p,r";
    e.has_covering = f.star != nullptr;
    e.provenance = f.star ? "representation group computed offline from the listed presentation"
                          : "trivial multiplier";
    e.description = "order " + std::to_string(parse_presentation(f.group).order()) +
                    (f.p == 2 ? "" : ", p = " + std::to_string(f.p) + " only");
    static const std::vector<std::pair<std::string, std::string>> ids = {
        {"G16_3", ""}, {"G16_4", ""}, {"M16", "G16_6"}, {"D16", "G16_7"}, {"SD16", "G16_8"},
        {"Q16", "G16_9"}, {"D8xC2", "G16_11"}, {"Q8xC2", "G16_12"}, {"Pauli", "G16_13"}};
    for (auto& [n, a] : ids)
      if (n == name && !a.empty()) e.aliases.push_back(a);
    std::uint32_t fixed_p = f.p;
    bool is_b = e.name == "Phi3(211)b";
    add(e, [fixed_p, name, is_b](const CatalogParams& q) {
      if (fixed_p != 2) {
        std::uint32_t p = q.p.value_or(fixed_p);
        if (p != fixed_p)
          bad_param(name + " is catalogued for p = " + std::to_string(fixed_p) + " only");
      }
      const catalog_data::FixedEntry* src = nullptr;
      std::string want = name;
      if (is_b) {
        std::uint32_t r = q.r.value_or(1);
        if (r != 1 && r != 2) bad_param("Phi3(211)b needs r = 1 or r = 2 (the non-residue mod 3)");
        want = r == 1 ? "Phi3(211)b_1" : "Phi3(211)b_2";
      }
      for (std::size_t j = 0; j < catalog_data::kFixedCount; ++j)
        if (want == catalog_data::kFixed[j].name) src = &catalog_data::kFixed[j];
      Built b;
      b.group = src->group;
      if (src->star) b.star = src->star;
      b.multiplier = src->multiplier;
      b.multiplier_order = 1;
      std::string m = b.multiplier;
      if (m != "trivial") {
        std::smatch mt;
        if (std::regex_match(m, mt, std::regex(R"(\(Z/(\d+)\)\^(\d+))")))
          b.multiplier_order = ipow(std::stoull(mt[1]), std::stoul(mt[2]));
        else if (std::regex_match(m, mt, std::regex(R"(Z/(\d+))")))
          b.multiplier_order = std::stoull(mt[1]);
      }
      b.provenance = src->star ? "representation group computed offline from the listed presentation"
                               : "trivial multiplier; the group is its own representation group";
      if (name.rfind("ES32", 0) == 0) {
        b.closed_form = ClosedFormKind::extraspecial;
        b.extraspecial_n = 2;
      }
      return b;
    });
  }

  add({"Cyclic", {}, "n", "cyclic group of order n", "standard family", false}, [](const CatalogParams& q) {
    std::uint32_t n = need(q.n, "Cyclic", "n", 1);
    if (n == 1) {
      Built b;
      b.group = "pcgroup C1\ngen\nord\nend\n";
      b.multiplier = "trivial";
      b.multiplier_order = 1;
      b.closed_form = ClosedFormKind::abelian;
      b.provenance = "standard family";
      return b;
    }
    return abelian_build({n}, "C" + std::to_string(n));
  });

  add({"Abelian", {}, "p,k,n", "homocyclic (Z/p^k)^n", "standard family", true}, [](const CatalogParams& q) {
    std::uint32_t p = need_prime(q, "Abelian");
    std::uint32_t k = q.k.value_or(1);
    if (k < 1) bad_param("Abelian needs k >= 1");
    std::uint32_t n = need(q.n, "Abelian", "n", 1);
    return abelian_build(std::vector<std::uint64_t>(n, ipow(p, k)),
                         "Z" + std::to_string(ipow(p, k)) + "_" + std::to_string(n));
  });

  add({"Dihedral", {}, "n", "dihedral group of order n", "standard family", true}, [](const CatalogParams& q) {
    std::uint32_t n = need(q.n, "Dihedral", "n", 6);
    if (n % 2) bad_param("Dihedral needs an even order n");
    std::uint64_t m = n / 2;
    std::string nm = "D" + std::to_string(n);
    Text g{nm, {{"b", 2}, {"a", m}}, {"conj a^b = " + pw("a", m - 1)}, {}};
    Built b;
    b.group = g.str();
    b.provenance = "standard family";
    if (m % 2 == 0) {
      Text s{nm + "_star", {{"b", 2}, {"a", m}, {"c", 2}}, {"pow a = c", "conj a^b = " + pw("a", m - 1) + "*c"}, {"c"}};
      b.star = s.str();
      b.multiplier = "Z/2";
      b.multiplier_order = 2;
      b.provenance = "standard family; representation group is dihedral of order 2n";
    } else {
      b.multiplier = "trivial";
      b.multiplier_order = 1;
    }
    return b;
  });

  add({"Quaternion", {}, "n", "generalized quaternion group of order n", "standard family", false},
      [](const CatalogParams& q) {
        std::uint32_t n = need(q.n, "Quaternion", "n", 8);
        if (n % 4) bad_param("Quaternion needs n divisible by 4");
        std::uint64_t m = n / 2;
        Text g{"Q" + std::to_string(n), {{"b", 2}, {"a", m}}, {"pow b = " + pw("a", m / 2), "conj a^b = " + pw("a", m - 1)}, {}};
        Built b;
        b.group = g.str();
        b.multiplier = "trivial";
        b.multiplier_order = 1;
        b.provenance = "standard family";
        return b;
      });

  add({"Modular", {}, "p,n", "modular p-group <a, b | a^{p^(n-1)}, b^p, a^b = a^{1+p^(n-2)}>", "standard family", false},
      [](const CatalogParams& q) {
        std::uint32_t p = need_prime(q, "Modular");
        std::uint32_t n = need(q.n, "Modular", "n", p == 2 ? 4 : 3);
        std::uint64_t m = ipow(p, n - 1);
        Text g{"M" + std::to_string(p) + "_" + std::to_string(n), {{"b", p}, {"a", m}},
               {"conj a^b = " + pw("a", 1 + ipow(p, n - 2))}, {}};
        Built b;
        b.group = g.str();
        b.multiplier = "trivial";
        b.multiplier_order = 1;
        b.provenance = "standard family";
        return b;
      });

  add({"Extraspecial", {}, "p,n", "extraspecial group of order p^(2n+1) from the standard symplectic form",
       "standard family via extension_from_form", false},
      [](const CatalogParams& q) {
        std::uint32_t p = need_prime(q, "Extraspecial");
        std::uint32_t n = need(q.n, "Extraspecial", "n", 1);
        AbelianInvariants inv{p, std::vector<std::uint32_t>(2 * n, 1)};
        auto pres = extension_from_form(inv, AlternatingForm::standard_symplectic(p, 1, 2 * n),
                                        "ES_" + std::to_string(p) + "_" + std::to_string(n));
        Built b;
        b.group = to_text(pres);
        b.representation_group = false;
        b.multiplier = "not catalogued";
        b.closed_form = n >= 2 ? ClosedFormKind::extraspecial : ClosedFormKind::none;
        b.extraspecial_n = n;
        b.provenance = "standard family via extension_from_form";
        return b;
      });

  add({"H3", {"Heisenberg"}, "p,k", "Heisenberg group H3(Z/p^k), p odd", "representation group", true},
      [](const CatalogParams& q) {
        std::uint32_t p = need_prime(q, "H3", 3);
        std::uint32_t k = q.k.value_or(1);
        if (k < 1) bad_param("H3 needs k >= 1");
        return heisenberg_build(p, k);
      });

  add({"Phi2(1^3)", {"Phi2(111)"}, "p", "extraspecial of order p^3 and exponent p, p odd",
       "representation group (Heisenberg, k = 1)", true},
      [](const CatalogParams& q) {
        Built b = heisenberg_build(need_prime(q, "Phi2(1^3)", 3), 1);
        return b;
      });

  add({"Phi2(21)", {}, "p", "<a, b | a^{p^2}, b^p, a^b = a^{1+p}>, p odd", "trivial multiplier", false},
      [](const CatalogParams& q) {
        std::uint32_t p = need_prime(q, "Phi2(21)", 3);
        Text g{"Phi2_21", {{"b", p}, {"a", p}, {"ap", p}}, {"pow a = ap", "comm [a,b] = ap"}, {}};
        Built b;
        b.group = g.str();
        b.multiplier = "trivial";
        b.multiplier_order = 1;
        b.provenance = "trivial multiplier; the group is its own representation group";
        return b;
      });

  // Printed representation groups of order p^5 groups, p >= 5.
  auto p5 = [&](const std::string& name, std::function<Built(std::uint32_t)> f, bool covering = true) {
    add({name, {}, "p", "order p^5, p >= 5", covering ? "representation group" : "closed form only", covering},
        [name, f](const CatalogParams& q) { return f(need_prime(q, name, 5)); });
  };

  p5("Phi2(221)c", [](std::uint32_t p) {
    std::uint64_t p2 = std::uint64_t(p) * p;
    Text g{"Phi2_221c", {{"a", p2}, {"a1", p}, {"g", p}, {"a2", p}}, {"pow g = a2", "comm [a1,a] = a2"}, {}};
    Text s = g;
    s.name += "_star";
    s.gens.push_back({"c1", p});
    s.gens.push_back({"c2", p2});
    s.rels.push_back("comm [g,a] = c2");
    s.rels.push_back("comm [g,a1] = c1");
    s.rels.push_back("comm [a2,a] = " + pw("c2", p));
    s.kernel = {"c1", "c2"};
    Built b;
    b.group = g.str();
    b.star = s.str();
    b.multiplier = "Z/" + std::to_string(p) + " x Z/" + std::to_string(p2);
    b.multiplier_order = p * p2;
    b.provenance = "representation group; gamma^p = alpha_2 is kept as generator a2";
    return b;
  });

  auto phi4 = [](std::uint32_t p, bool f0) {
    std::uint64_t p2 = std::uint64_t(p) * p;
    std::uint32_t nu = least_nonresidue(p);
    std::uint32_t nu_inv = 1;
    while (nu * nu_inv % p != 1) ++nu_inv;
    std::string nm = f0 ? "Phi4_221f0" : "Phi4_221d";
    Text g{nm, {{"a", p}, {"a1", p}, {"a2", p}, {"b1", p}, {"b2", p}}, {}, {}};
    if (f0) {
      g.rels = {"pow a1 = b2", "pow a2 = " + pw("b1", nu)};
    } else {
      g.rels = {"pow a1 = " + pw("b1", p - 1), "pow a2 = b2"};
    }
    g.rels.push_back("comm [a1,a] = b1");
    g.rels.push_back("comm [a2,a] = b2");
    Text s = g;
    s.name += "_star";
    s.gens.push_back({"c", p2});
    s.rels.push_back("comm [a2,a1] = " + pw("c", p2 - 1));
    if (f0) {
      s.rels.push_back("comm [b1,a1] = " + pw("c", (p2 - p * nu_inv % p2) % p2));
      s.rels.push_back("comm [b2,a2] = " + pw("c", p));
    } else {
      s.rels.push_back("comm [b1,a2] = " + pw("c", p2 - p));
      s.rels.push_back("comm [b2,a1] = " + pw("c", p2 - p));
    }
    s.kernel = {"c"};
    Built b;
    b.group = g.str();
    b.star = s.str();
    b.multiplier = "Z/" + std::to_string(p2);
    b.multiplier_order = p2;
    b.provenance = "representation group with the implied commutators of b1, b2 made explicit";
    return b;
  };
  p5("Phi4(221)f0", [phi4](std::uint32_t p) { return phi4(p, true); });
  p5("Phi4(221)d", [phi4](std::uint32_t p) { return phi4(p, false); });

  p5("Phi6(2111)a", [](std::uint32_t p) {
    Text g{"Phi6_2111a", {{"a1", p}, {"a2", p}, {"b", p}, {"b1", p}, {"b2", p}},
           {"pow a1 = b1", "comm [a2,a1] = " + pw("b", p - 1), "comm [b,a1] = b1", "comm [b,a2] = b2"}, {}};
    Text s = g;
    s.name += "_star";
    s.gens.push_back({"b3", p});
    s.rels.push_back("comm [b2,a2] = b3");
    s.kernel = {"b3"};
    Built b;
    b.group = g.str();
    b.star = s.str();
    b.multiplier = "Z/" + std::to_string(p);
    b.multiplier_order = p;
    b.provenance = "representation group of order p^6";
    return b;
  });

  p5("Phi6(1^5)", [](std::uint32_t p) {
    Text g{"Phi6_11111", {{"a1", p}, {"a2", p}, {"b", p}, {"b1", p}, {"b2", p}},
           {"comm [a2,a1] = " + pw("b", p - 1), "comm [b,a1] = b1", "comm [b,a2] = b2"}, {}};
    Text s = g;
    s.name += "_star";
    for (auto z : {"g", "b3", "b4"}) s.gens.push_back({z, p});
    s.rels.push_back("comm [b1,a1] = b4");
    s.rels.push_back("comm [b1,a2] = g");
    s.rels.push_back("comm [b2,a1] = g");
    s.rels.push_back("comm [b2,a2] = b3");
    s.kernel = {"g", "b3", "b4"};
    Built b;
    b.group = g.str();
    b.star = s.str();
    b.multiplier = power_string("Z/" + std::to_string(p), 3);
    b.multiplier_order = std::uint64_t(p) * p * p;
    b.provenance = "representation group of order p^8";
    return b;
  });

  p5("Phi10(1^5)", [](std::uint32_t p) {
    Text g{"Phi10_11111", {{"a", p}, {"a1", p}, {"a2", p}, {"a3", p}, {"a4", p}},
           {"comm [a1,a] = a2", "comm [a2,a] = a3", "comm [a3,a] = a4", "comm [a2,a1] = " + pw("a4", p - 1)}, {}};
    Text s{"Phi10_11111_star", g.gens, {}, {"b1", "b2", "b3"}};
    for (auto z : {"b1", "b2", "b3"}) s.gens.push_back({z, p});
    s.rels = {"comm [a1,a] = a2",
              "comm [a2,a] = a3",
              "comm [a3,a] = a4",
              "comm [a4,a] = b1",
              "comm [a2,a1] = " + pw("a4", p - 1) + "*" + pw("b3", p - 1),
              "comm [a3,a1] = " + pw("b1", p - 1) + "*" + pw("b2", p - 1),
              "comm [a4,a1] = " + pw("b2", p - 1),
              "comm [a3,a2] = b2"};
    Built b;
    b.group = g.str();
    b.star = s.str();
    b.multiplier = power_string("Z/" + std::to_string(p), 3);
    b.multiplier_order = std::uint64_t(p) * p * p;
    b.provenance = "representation group of order p^8";
    return b;
  });

  auto phi5 = [](std::uint32_t p, bool exp_p2) {
    Text g{exp_p2 ? "Phi5_2111" : "Phi5_11111", {{"a1", p}, {"a2", p}, {"a3", p}, {"a4", p}, {"b", p}}, {}, {}};
    if (exp_p2) g.rels.push_back("pow a1 = b");
    g.rels.push_back("comm [a2,a1] = " + pw("b", p - 1));
    g.rels.push_back("comm [a4,a3] = " + pw("b", p - 1));
    Built b;
    b.group = g.str();
    b.representation_group = false;
    b.multiplier = "not catalogued";
    b.closed_form = ClosedFormKind::extraspecial;
    b.extraspecial_n = 2;
    b.provenance = "extraspecial of order p^5; values from the closed form";
    return b;
  };
  p5("Phi5(2111)", [phi5](std::uint32_t p) { return phi5(p, true); }, false);
  p5("Phi5(1^5)", [phi5](std::uint32_t p) { return phi5(p, false); }, false);

  return defs;
}

const std::vector<Def>& defs() {
  static const std::vector<Def> d = make_defs();
  return d;
}

bool has_param(const std::string& schema, char c) {
  for (std::size_t i = 0; i < schema.size(); ++i)
    if (schema[i] == c && (i + 1 == schema.size() || schema[i + 1] == ',')) return true;
  return false;
}

void check_schema(const std::string& name, const std::string& schema, const CatalogParams& q) {
  auto check = [&](const std::optional<std::uint32_t>& v, char c) {
    if (v && !has_param(schema, c))
      bad_param(name + " takes no parameter " + std::string(1, c) +
                (schema.empty() ? " (it has no parameters)" : " (accepted: " + schema + ")"));
  };
  check(q.p, 'p');
  check(q.k, 'k');
  check(q.n, 'n');
  check(q.r, 'r');
}

// "C4xC2", "C3^2", "C2^3xC4"
std::optional<std::vector<std::uint64_t>> abelian_name(const std::string& s) {
  static const std::regex whole(R"(C\d+(\^\d+)?(xC\d+(\^\d+)?)*)");
  if (!std::regex_match(s, whole)) return std::nullopt;
  static const std::regex part(R"(C(\d+)(?:\^(\d+))?)");
  std::vector<std::uint64_t> out;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), part); it != std::sregex_iterator(); ++it) {
    std::uint64_t n = std::stoull((*it)[1]);
    std::size_t times = (*it)[2].matched ? std::stoul((*it)[2]) : 1;
    if (n < 2 || times < 1 || times > 64) throw InputError("invalid abelian group name '" + s + "'");
    out.insert(out.end(), times, n);
  }
  return out;
}

bool strip_star(std::string& name) {
  for (std::string suffix : {"-star", "_star", "star", "*"}) {
    if (name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
      name.resize(name.size() - suffix.size());
      return true;
    }
  }
  return false;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> e = [] {
    std::vector<CatalogEntry> out;
    for (auto& d : defs()) out.push_back(d.entry);
    out.push_back({"C<n>[^<e>]x...", {}, "", "abelian group by cyclic factors, e.g. C4xC2 or C3^2",
                   "standard family: abelian group with its class-two representation group", true});
    return out;
  }();
  return e;
}

CatalogInstance catalog_get(const std::string& requested, const CatalogParams& params) {
  std::string name = requested;
  bool star = strip_star(name);
  if (name.empty()) throw InputError("empty catalog name");

  Built b;
  std::string canonical;
  if (auto orders = abelian_name(name)) {
    check_schema(name, "", params);
    std::string nm;
    for (char c : name) nm += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    b = abelian_build(*orders, nm);
    canonical = name;
  } else {
    const Def* found = nullptr;
    for (auto& d : defs()) {
      if (d.entry.name == name || std::find(d.entry.aliases.begin(), d.entry.aliases.end(), name) != d.entry.aliases.end())
        found = &d;
    }
    if (!found) {
      // A trailing "star" may belong to the name itself; retry with the requested spelling.
      for (auto& d : defs())
        if (d.entry.name == requested) found = &d;
      if (found) star = false;
    }
    if (!found) throw InputError("unknown catalog group '" + requested + "'");
    check_schema(found->entry.name, found->entry.params, params);
    b = found->build(params);
    canonical = found->entry.name;
  }
  if (star && b.star.empty() && b.multiplier_order != 1)
    throw InputError("no covering catalogued for '" + canonical + "'");

  CatalogInstance inst;
  inst.name = canonical;
  inst.params = params;
  inst.group = parse_presentation(b.group);
  require_consistent(inst.group);
  if (!b.star.empty()) {
    inst.covering = parse_covering(b.star);
    require_consistent(inst.covering->gstar);
  }
  inst.representation_group = b.representation_group;
  inst.multiplier = b.multiplier;
  inst.multiplier_order = b.multiplier_order;
  inst.provenance = b.provenance;
  inst.closed_form = b.closed_form;
  inst.abelian_orders = b.abelian_orders;
  inst.extraspecial_n = b.extraspecial_n;
  return inst;
}

Covering instance_covering(const CatalogInstance& inst, const Limits& limits) {
  Covering c = inst.covering ? load_covering(*inst.covering, limits) : trivial_covering(Group::build(inst.group, limits));
  c.representation_group = inst.representation_group;
  if (!inst.covering) c.representation_group = inst.representation_group && inst.multiplier_order == 1;
  c.label = inst.name;
  return c;
}

StructureReport validate_instance(const CatalogInstance& inst, const Limits& limits) {
  StructureReport rep;
  auto fail = [&](std::string m) {
    rep.ok = false;
    rep.failures.push_back(std::move(m));
  };
  if (!check_consistency(inst.group).consistent) fail("group presentation is inconsistent");
  GroupPtr target = Group::build(inst.group, limits);
  rep.group_order = target->order();
  if (!inst.covering) {
    rep.gstar_order = rep.group_order;
    rep.a_order = 1;
    if (inst.representation_group && inst.multiplier_order != 1)
      fail("representation group flagged without a covering for a nontrivial multiplier");
    return rep;
  }
  Covering c;
  try {
    c = load_covering(*inst.covering, limits);
  } catch (const StructureError& e) {
    fail(e.what());
    return rep;
  }
  rep.gstar_order = c.gstar->order();
  rep.a_order = c.A.size();
  for (Elem a : c.A.gens)
    for (std::size_t i = 0; i < c.gstar->ngens(); ++i)
      if (c.gstar->comm(a, c.gstar->generator(i)) != c.gstar->identity()) fail("A is not central");
  const Subgroup& d = c.gstar->derived_subgroup();
  for (Elem a : c.A.elements)
    if (!d.contains(a)) {
      fail("A is not contained in the derived subgroup of G*");
      break;
    }
  if (rep.gstar_order != c.G->order() * rep.a_order) fail("|G*| != |G| |A|");
  if (c.G->order() != target->order()) fail("quotient order differs from the group order");
  if (c.G->ngens() != inst.group.size()) {
    fail("quotient and group have different generator counts");
  } else {
    std::vector<Elem> images;
    for (std::size_t i = 0; i < c.G->ngens(); ++i) images.push_back(c.G->generator(i));
    if (!satisfies_relations(*c.G, inst.group, images)) fail("quotient does not satisfy the group relations");
  }
  if (inst.representation_group && inst.multiplier_order && rep.a_order != inst.multiplier_order)
    fail("|A| differs from the declared multiplier order");
  return rep;
}

}  // namespace projembed
