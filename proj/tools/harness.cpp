#include "harness.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "projembed/catalog.hpp"
#include "projembed/character_table.hpp"
#include "projembed/closed_forms.hpp"
#include "projembed/group.hpp"
#include "projembed/projective.hpp"

namespace projembed {

namespace {

void partitions(std::uint32_t n, std::uint32_t largest, std::vector<std::uint32_t>& cur,
                std::vector<std::vector<std::uint32_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t k = std::min(n, largest); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

struct Extremes {
  std::optional<std::uint64_t> tau, tau_irr;
  void take(const Covering& c) {
    CharacterTable t = character_table(c.gstar, TableOptions{10000000000ULL});
    ProjectiveData d = projective_data(c, t);
    auto a = projembed::tau(d).value;
    auto b = projembed::tau_irr(d).value;
    if (a && (!tau || *a < *tau)) tau = a;
    if (b && (!tau_irr || *b < *tau_irr)) tau_irr = b;
  }
};

AbelianCase abelian_case(const AbelianInvariants& inv) {
  AbelianCase out;
  out.inv = inv;
  Extremes best;
  std::size_t r = inv.rank();
  best.take(trivial_covering(Group::build(abelian_presentation(inv))));
  out.forms = 1;
  if (r >= 2) {
    std::uint32_t p = inv.p, K = inv.exponents[1];
    std::uint64_t mod = ipow(p, K);
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    std::vector<std::uint64_t> radix, step;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) {
        std::uint32_t m = std::min(inv.exponents[i], inv.exponents[j]);
        idx.push_back({i, j});
        radix.push_back(ipow(p, m));
        step.push_back(ipow(p, K - m));
      }
    std::vector<std::uint64_t> ctr(idx.size(), 0);
    auto advance = [&] {
      std::size_t s = 0;
      while (s < ctr.size() && ++ctr[s] == radix[s]) ctr[s++] = 0;
      return s < ctr.size();
    };
    while (advance()) {
      AlternatingForm f = AlternatingForm::zero(p, K, r);
      for (std::size_t s = 0; s < idx.size(); ++s) {
        auto [i, j] = idx[s];
        auto v = static_cast<std::int64_t>(ctr[s] * step[s]);
        f.c[i][j] = v;
        f.c[j][i] = static_cast<std::int64_t>((mod - static_cast<std::uint64_t>(v)) % mod);
      }
      GroupPtr e = Group::build(extension_from_form(inv, f));
      best.take(make_covering(e, e->subgroup({e->generator(e->ngens() - 1)})));
      ++out.forms;
    }
  }
  out.tau = best.tau.value_or(0);
  out.tau_irr = best.tau_irr;
  out.tau_closed = tau_abelian(inv);
  out.tau_irr_closed = tau_irr_abelian(inv);
  out.ok = out.tau == out.tau_closed && out.tau_irr == out.tau_irr_closed;
  if (out.tau_irr) {
    std::uint64_t s = 1;
    while (s * s < inv.order()) ++s;
    out.ok = out.ok && s * s == inv.order() && *out.tau_irr == s;
  }
  return out;
}

struct Sample {
  std::string name;
  CatalogParams params;
};

std::vector<Sample> property_groups() {
  auto P = [](std::uint32_t p) {
    CatalogParams q;
    q.p = p;
    return q;
  };
  auto N = [](std::uint32_t n) {
    CatalogParams q;
    q.n = n;
    return q;
  };
  std::vector<Sample> s;
  for (const char* n : {"D8", "Q8", "G16_3", "G16_4", "M16", "D16", "SD16", "Q16", "D8xC2", "Q8xC2", "Pauli", "ES32+",
                        "ES32-", "C4xC2", "C3^2", "C2^3"})
    s.push_back({n, {}});
  for (const char* n : {"Phi2(211)a", "Phi2(1^4)", "Phi2(31)", "Phi2(22)", "Phi2(211)b", "Phi2(211)c", "Phi3(211)a",
                        "Phi3(1^4)"})
    s.push_back({n, P(3)});
  CatalogParams b2 = P(3);
  b2.r = 2;
  s.push_back({"Phi3(211)b", b2});
  for (std::uint32_t p : {3u, 5u}) {
    s.push_back({"Phi2(21)", P(p)});
    s.push_back({"Phi2(1^3)", P(p)});
    s.push_back({"H3", P(p)});
  }
  CatalogParams mod = P(3);
  mod.n = 3;
  s.push_back({"Modular", mod});
  s.push_back({"Phi6(2111)a", P(5)});
  s.push_back({"Dihedral", N(6)});
  s.push_back({"Dihedral", N(12)});
  s.push_back({"Quaternion", N(12)});
  return s;
}

std::uint64_t prime_of(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

bool is_prime_power(std::uint64_t n) {
  std::uint64_t p = prime_of(n);
  while (n % p == 0) n /= p;
  return n == 1;
}

// Projective kernel of chi by brute force: g with |chi(mu(g))|^2 = chi(1)^2.
bool faithful_projectively(const Covering& c, const CharacterTable& t, std::size_t chi,
                           const std::vector<Elem>& elems) {
  std::uint64_t d = t.irr[chi].degree;
  Cyclotomic full = Cyclotomic::integer(t.conductor, static_cast<std::int64_t>(d * d));
  for (Elem g : elems) {
    if (g == 0) continue;
    if (t.value(chi, c.mu[g]).abs_square() == full) return false;
  }
  return true;
}

}  // namespace

std::vector<AbelianCase> abelian_oracle(std::uint64_t max_order) {
  std::vector<AbelianCase> out;
  for (std::uint32_t p = 2; p <= max_order; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint32_t e = 1; ipow(p, e) <= max_order; ++e) {
      std::vector<std::vector<std::uint32_t>> parts;
      std::vector<std::uint32_t> cur;
      partitions(e, e, cur, parts);
      for (auto& ex : parts) out.push_back(abelian_case(AbelianInvariants{p, ex}));
    }
  }
  return out;
}

std::vector<PropertyCheck> run_property_suite(std::ostream* log) {
  PropertyCheck ortho{"character-table orthogonality", 0, {}}, partition{"lambda-partition completeness", 0, {}},
      regular{"regularity <=> faithful irreducible", 0, {}}, all_none{"all-or-nothing faithfulness per lambda", 0, {}},
      bound{"tau <= delta + 1", 0, {}}, prime{"tau = p <=> tau_irr = p", 0, {}}, witness{"witness re-verification", 0, {}},
      section{"section-perturbation invariance", 0, {}};
  TableOptions opts{10000000000ULL};
  std::size_t perturbed = 0;

  for (const auto& s : property_groups()) {
    std::string label = s.name + (s.params.to_string().empty() ? "" : "[" + s.params.to_string() + "]");
    auto fail = [&](PropertyCheck& pc, const std::string& msg) { pc.failures.push_back(label + ": " + msg); };
    CatalogInstance inst = catalog_get(s.name, s.params);
    Covering c = instance_covering(inst);
    CharacterTable t = character_table(c.gstar, opts);
    CharacterTable tg = character_table(c.G, opts);

    for (const CharacterTable* tab : {&t, &tg}) {
      ++ortho.cases;
      OrthogonalityReport o = verify_orthogonality(*tab);
      if (!o.ok) fail(ortho, o.failures.empty() ? "failed" : o.failures.front());
    }

    auto lambdas = central_characters(c);
    auto lam_of = lambda_of_characters(c, t);
    std::size_t total = 0;
    ++partition.cases;
    for (std::size_t li = 0; li < lambdas.size(); ++li) {
      auto members = irr_over(c, t, lambdas[li]);
      total += members.size();
      for (auto m : members)
        if (lam_of[m] != li) fail(partition, "character " + std::to_string(m) + " in two blocks");
    }
    if (total != t.size())
      fail(partition, std::to_string(total) + " characters over all lambda, " + std::to_string(t.size()) + " classes");

    bool nilpotent = c.G->is_nilpotent();
    std::vector<Elem> elems = c.G->order() <= 1024 ? c.G->whole().elements : c.G->center().elements;
    if (nilpotent) {
      for (const auto& l : lambdas) {
        auto members = irr_over(c, t, l);
        std::size_t faithful = 0;
        for (auto m : members) faithful += faithful_projectively(c, t, m, elems);
        ++all_none.cases;
        if (faithful != 0 && faithful != members.size())
          fail(all_none, "lambda " + l.to_string() + ": " + std::to_string(faithful) + " of " +
                             std::to_string(members.size()) + " faithful");
        ++regular.cases;
        if (exists_faithful_irrep_by_regularity(c, l) != (faithful > 0))
          fail(regular, "lambda " + l.to_string() + " disagrees");
      }
    }

    ProjectiveData d = projective_data(c, t);
    TauReport r1 = tau(d), r2 = tau_irr(d);
    TauReport dl = delta(tg), dli = delta_irr(tg);
    witness.cases += 4;
    if (!verify_witness(d, r1)) fail(witness, "tau witness");
    if (!verify_witness(d, r2)) fail(witness, "tau_irr witness");
    if (!verify_delta_witness(tg, dl)) fail(witness, "delta witness");
    if (!verify_delta_witness(tg, dli)) fail(witness, "delta_irr witness");

    std::uint64_t order = c.G->order();
    if (r1.exact && !c.G->is_abelian() && is_prime_power(order)) {
      std::uint64_t p = prime_of(order);
      ++bound.cases;
      if (!r1.value || !dl.value || *r1.value > *dl.value + 1) fail(bound, "tau exceeds delta + 1");
      ++prime.cases;
      bool a = r1.value == p, b = r2.value == p;
      if (a != b) fail(prime, "tau = p and tau_irr = p disagree");
    }

    if (perturbed < 3 && !c.A.is_trivial() && c.representation_group) {
      ++perturbed;
      for (std::uint64_t seed : {1u, 2u, 3u}) {
        ++section.cases;
        Covering pc = perturb_section(c, seed);
        ProjectiveData pd = projective_data(pc, t);
        TauReport p1 = tau(pd), p2 = tau_irr(pd);
        if (p1.value != r1.value || p2.value != r2.value) fail(section, "seed " + std::to_string(seed) + " changes tau");
        if (!verify_witness(pd, p1) || !verify_witness(pd, p2)) fail(section, "seed " + std::to_string(seed) + " witness");
        std::vector<std::size_t> a, b;
        for (auto& blk : d.blocks) a.push_back(blk.members.size());
        for (auto& blk : pd.blocks) b.push_back(blk.members.size());
        if (a != b) fail(section, "seed " + std::to_string(seed) + " changes the lambda partition");
      }
    }

    if (log) {
      *log << label << ": |G*| = " << c.gstar->order() << ", tau = " << (r1.value ? std::to_string(*r1.value) : "-")
           << ", tau_irr = " << (r2.value ? std::to_string(*r2.value) : "-") << ", delta = "
           << (dl.value ? std::to_string(*dl.value) : "-") << "\n";
    }
  }
  return {ortho, partition, regular, all_none, bound, prime, witness, section};
}

}  // namespace projembed
