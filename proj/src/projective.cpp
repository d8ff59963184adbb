#include "projembed/projective.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "projembed/errors.hpp"

namespace projembed {

namespace {

constexpr Elem kUnset = std::numeric_limits<Elem>::max();

void require_central(const Group& g, const Subgroup& a) {
  for (Elem x : a.elements)
    for (std::size_t i = 0; i < g.ngens(); ++i)
      if (g.mul(x, g.generator(i)) != g.mul(g.generator(i), x))
        throw StructureError("kernel subgroup is not central in " + g.presentation().name);
}

Subgroup subgroup_from_elements(const GroupPtr& parent, std::vector<Elem> el) {
  std::sort(el.begin(), el.end());
  el.erase(std::unique(el.begin(), el.end()), el.end());
  Subgroup s;
  s.parent = parent;
  s.gens = el;
  s.elements = std::move(el);
  return s;
}

// lambda exponents on all of A, indexed like A.elements.
struct LambdaTable {
  const Covering& c;
  std::vector<std::uint64_t> exps;
  LambdaTable(const Covering& cv, const CentralCharacter& l) : c(cv) {
    exps.reserve(c.A.size());
    for (Elem a : c.A.elements) exps.push_back(lambda_exponent(c, l, a));
  }
  std::uint64_t operator()(Elem a) const {
    auto it = std::lower_bound(c.A.elements.begin(), c.A.elements.end(), a);
    if (it == c.A.elements.end() || *it != a) throw StructureError("element is not in the kernel subgroup");
    return exps[static_cast<std::size_t>(it - c.A.elements.begin())];
  }
};

std::int32_t scalar_at(const Cyclotomic& v, std::uint64_t deg) {
  if (v.is_zero()) return kNonScalar;
  auto j = v.as_scaled_root(static_cast<std::int64_t>(deg));
  return j ? static_cast<std::int32_t>(*j) : kNonScalar;
}

void require_table_of(const Covering& c, const CharacterTable& t) {
  if (t.group.get() != c.gstar.get()) throw InputError("character table does not belong to the covering group");
}

}  // namespace

std::uint64_t Covering::a_exponent() const { return a_dec.orders.empty() ? 1 : a_dec.orders.back(); }

Elem Covering::kernel_part(Elem x) const { return gstar->mul(gstar->inv(mu[f[x]]), x); }

Covering make_covering(const GroupPtr& gstar, const Subgroup& a, const std::string& label) {
  require_central(*gstar, a);
  Covering c;
  c.name = gstar->presentation().name;
  c.gstar = gstar;
  c.A = a;
  c.A.parent = gstar;
  auto q = quotient(*gstar, a, label.empty() ? c.name + "_quotient" : label);
  c.G = q.group;
  c.label = c.G->presentation().name;
  c.f = std::move(q.map);
  c.mu.assign(c.G->order(), kUnset);
  for (std::uint64_t x = 0; x < gstar->order(); ++x)
    if (c.mu[c.f[x]] == kUnset) c.mu[c.f[x]] = static_cast<Elem>(x);
  c.a_dec = decompose_abelian(*gstar, c.A);
  return c;
}

Covering load_covering(const CoveringSpec& spec, const Limits& limits) {
  require_consistent(spec.gstar);
  auto g = Group::build(spec.gstar, limits);
  std::vector<Elem> gens;
  for (std::size_t i = spec.kernel_start(); i < g->ngens(); ++i) gens.push_back(g->generator(i));
  Subgroup a = g->subgroup(gens);
  return make_covering(g, a, spec.label);
}

Covering trivial_covering(const GroupPtr& g) {
  Covering c;
  c.name = g->presentation().name;
  c.label = c.name;
  c.gstar = g;
  c.G = g;
  c.A = g->trivial_subgroup();
  c.f.resize(g->order());
  for (std::uint64_t x = 0; x < g->order(); ++x) c.f[x] = static_cast<Elem>(x);
  c.mu = c.f;
  c.a_dec = decompose_abelian(*g, c.A);
  c.representation_group = false;
  return c;
}

Covering perturb_section(const Covering& c, std::uint64_t seed) {
  Covering out = c;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, c.A.size() - 1);
  for (std::size_t g = 1; g < out.mu.size(); ++g) out.mu[g] = c.gstar->mul(out.mu[g], c.A.elements[pick(rng)]);
  return out;
}

Covering quotient_covering(const Covering& c, const Subgroup& k, std::vector<Elem>* map) {
  for (Elem x : k.elements)
    if (!c.A.contains(x)) throw InputError("quotient_covering: subgroup is not inside A");
  auto q = quotient(*c.gstar, k, c.name + "_mod_" + std::to_string(k.size()));
  Covering out;
  out.gstar = q.group;
  out.name = q.group->presentation().name;
  out.label = c.label;
  out.G = c.G;
  std::vector<Elem> img;
  for (Elem a : c.A.elements) img.push_back(q.map[a]);
  out.A = subgroup_from_elements(q.group, img);
  out.f.assign(q.group->order(), 0);
  for (std::uint64_t x = 0; x < c.gstar->order(); ++x) out.f[q.map[x]] = c.f[x];
  out.mu.resize(c.mu.size());
  for (std::size_t g = 0; g < c.mu.size(); ++g) out.mu[g] = q.map[c.mu[g]];
  out.a_dec = decompose_abelian(*q.group, out.A);
  if (map) *map = std::move(q.map);
  return out;
}

std::string CentralCharacter::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < exponents.size(); ++i) s += (i ? "," : "") + std::to_string(exponents[i]);
  return s + ")";
}

std::vector<CentralCharacter> central_characters(const Covering& c) {
  const auto& d = c.a_dec.orders;
  std::vector<CentralCharacter> out;
  CentralCharacter cur;
  cur.exponents.assign(d.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = d.size();
    while (i > 0 && ++cur.exponents[i - 1] == d[i - 1]) cur.exponents[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::size_t central_character_index(const Covering& c, const CentralCharacter& l) {
  const auto& d = c.a_dec.orders;
  if (l.exponents.size() != d.size()) throw InputError("central character has the wrong number of exponents");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (l.exponents[i] >= d[i]) throw InputError("central character exponent out of range");
    idx = idx * d[i] + l.exponents[i];
  }
  return idx;
}

std::uint64_t lambda_exponent(const Covering& c, const CentralCharacter& l, Elem a) {
  central_character_index(c, l);
  const std::uint64_t n = c.a_exponent();
  auto co = c.a_dec.coordinates(*c.gstar, a);
  std::uint64_t e = 0;
  for (std::size_t i = 0; i < co.size(); ++i) e = (e + (n / c.a_dec.orders[i]) * l.exponents[i] * co[i]) % n;
  return e;
}

Subgroup lambda_kernel(const Covering& c, const CentralCharacter& l) {
  LambdaTable lt(c, l);
  std::vector<Elem> el;
  for (std::size_t i = 0; i < c.A.size(); ++i)
    if (lt.exps[i] == 0) el.push_back(c.A.elements[i]);
  return subgroup_from_elements(c.gstar, el);
}

std::uint64_t cocycle_value(const Covering& c, const CentralCharacter& l, Elem g, Elem h) {
  const Group& s = *c.gstar;
  Elem a = s.mul(s.mul(c.mu[g], c.mu[h]), s.inv(c.mu[c.G->mul(g, h)]));
  return lambda_exponent(c, l, a);
}

Subgroup alpha_regular_central(const Covering& c, const CentralCharacter& l) {
  LambdaTable lt(c, l);
  const Group& s = *c.gstar;
  const Group& g = *c.G;
  auto cocycle = [&](Elem x, Elem y) {
    return lt(s.mul(s.mul(c.mu[x], c.mu[y]), s.inv(c.mu[g.mul(x, y)])));
  };
  std::vector<Elem> reg;
  for (Elem z : g.center().elements) {
    bool ok = true;
    for (std::uint64_t x = 0; x < g.order() && ok; ++x)
      if (cocycle(z, static_cast<Elem>(x)) != cocycle(static_cast<Elem>(x), z)) ok = false;
    if (ok) reg.push_back(z);
  }
  return subgroup_from_elements(c.G, reg);
}

bool exists_faithful_irrep_by_regularity(const Covering& c, const CentralCharacter& l) {
  if (!c.G->is_nilpotent()) throw InputError("the regularity criterion requires a nilpotent quotient");
  return alpha_regular_central(c, l).is_trivial();
}

std::vector<std::size_t> lambda_of_characters(const Covering& c, const CharacterTable& t) {
  require_table_of(c, t);
  const auto& d = c.a_dec.orders;
  const std::uint64_t m = t.conductor;
  std::vector<std::size_t> out(t.size(), 0);
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const Cyclotomic& v = t.value(chi, c.a_dec.generators[i]);
      auto j = v.as_scaled_root(static_cast<std::int64_t>(t.irr[chi].degree));
      std::uint64_t unit = m / d[i];
      if (!j || *j % unit) throw StructureError("character is not scalar on the kernel subgroup");
      idx = idx * d[i] + *j / unit;
    }
    out[chi] = idx;
  }
  return out;
}

std::vector<std::size_t> irr_over(const Covering& c, const CharacterTable& t, const CentralCharacter& l) {
  std::size_t want = central_character_index(c, l);
  auto lam = lambda_of_characters(c, t);
  std::vector<std::size_t> out;
  for (std::size_t chi = 0; chi < lam.size(); ++chi)
    if (lam[chi] == want) out.push_back(chi);
  return out;
}

ScalarSignature scalar_signature(const Covering& c, const CharacterTable& t, std::size_t chi,
                                 const std::vector<Elem>& probes) {
  require_table_of(c, t);
  ScalarSignature s;
  s.scalar.reserve(probes.size());
  for (Elem g : probes) s.scalar.push_back(scalar_at(t.value(chi, c.mu[g]), t.irr[chi].degree));
  return s;
}

std::vector<Elem> joint_projective_kernel(const Covering& c, const CharacterTable& t,
                                          const std::vector<std::size_t>& members,
                                          const std::vector<Elem>& probes) {
  auto lam = lambda_of_characters(c, t);
  for (std::size_t chi : members)
    if (lam[chi] != lam[members.front()])
      throw InputError("joint kernel requested for characters over different central characters");
  std::vector<ScalarSignature> sigs;
  for (std::size_t chi : members) sigs.push_back(scalar_signature(c, t, chi, probes));
  std::vector<Elem> out;
  for (std::size_t p = 0; p < probes.size(); ++p) {
    bool alive = true;
    for (const auto& s : sigs)
      if (s.scalar[p] == kNonScalar || s.scalar[p] != sigs.front().scalar[p]) alive = false;
    if (alive) out.push_back(probes[p]);
  }
  return out;
}

std::vector<Elem> default_probes(const Covering& c) {
  std::vector<Elem> out;
  if (c.G->is_nilpotent()) {
    for (Elem z : c.G->center().elements)
      if (z) out.push_back(z);
  } else {
    for (std::uint64_t x = 1; x < c.G->order(); ++x) out.push_back(static_cast<Elem>(x));
  }
  return out;
}

const LambdaBlock& ProjectiveData::block(const CentralCharacter& l) const {
  return blocks.at(central_character_index(*covering, l));
}

ProjectiveData projective_data(const Covering& c, const CharacterTable& t) {
  ProjectiveData d;
  d.covering = &c;
  auto lams = central_characters(c);
  auto of = lambda_of_characters(c, t);
  d.blocks.resize(lams.size());
  for (std::size_t i = 0; i < lams.size(); ++i) {
    d.blocks[i].lambda = lams[i];
    d.blocks[i].cover = &c;
    d.blocks[i].table = &t;
  }
  for (std::size_t chi = 0; chi < of.size(); ++chi) d.blocks[of[chi]].members.push_back(chi);
  return d;
}

ProjectiveData projective_data_by_quotients(const Covering& c, const TableOptions& opts) {
  ProjectiveData d;
  d.covering = &c;
  d.decomposed = true;
  auto lams = central_characters(c);
  const std::uint64_t n = c.a_exponent();
  std::map<std::vector<Elem>, std::size_t> views;
  std::vector<std::vector<Elem>> maps;
  std::vector<std::size_t> view_of;
  for (const auto& l : lams) {
    Subgroup k = lambda_kernel(c, l);
    auto it = views.find(k.elements);
    if (it != views.end()) {
      view_of.push_back(it->second);
      continue;
    }
    std::vector<Elem> map;
    d.owned_covers.push_back(std::make_unique<Covering>(quotient_covering(c, k, &map)));
    maps.push_back(std::move(map));
    view_of.push_back(d.owned_covers.size() - 1);
    views.emplace(k.elements, d.owned_covers.size() - 1);
  }
  // Refuse before any table is built.
  std::uint64_t worst = 0;
  for (const auto& cover : d.owned_covers) worst = std::max<std::uint64_t>(worst, cover->gstar->classes().count());
  if (worst * worst * worst > opts.max_classes_cubed)
    throw ResourceError("quotient table with " + std::to_string(worst) + " classes exceeds the classes-cubed budget " +
                        std::to_string(opts.max_classes_cubed));
  std::vector<std::vector<std::size_t>> view_lambda;
  for (const auto& cover : d.owned_covers) {
    d.owned_tables.push_back(std::make_unique<CharacterTable>(character_table(cover->gstar, opts)));
    view_lambda.push_back(lambda_of_characters(*cover, *d.owned_tables.back()));
  }
  for (std::size_t li = 0; li < lams.size(); ++li) {
    const auto& l = lams[li];
    std::size_t v = view_of[li];
    const Covering& qc = *d.owned_covers[v];
    // lambda on the cyclic generators of A / ker(lambda).
    LambdaTable lt(c, l);
    CentralCharacter lq;
    for (std::size_t i = 0; i < qc.a_dec.orders.size(); ++i) {
      Elem gen = qc.a_dec.generators[i];
      std::size_t pos = 0;
      while (maps[v][c.A.elements[pos]] != gen) ++pos;
      std::uint64_t e = lt.exps[pos];
      lq.exponents.push_back(static_cast<std::uint32_t>((e * qc.a_dec.orders[i] / n) % qc.a_dec.orders[i]));
    }
    std::size_t want = central_character_index(qc, lq);
    LambdaBlock b;
    b.lambda = l;
    b.cover = &qc;
    b.table = d.owned_tables[v].get();
    for (std::size_t chi = 0; chi < view_lambda[v].size(); ++chi)
      if (view_lambda[v][chi] == want) b.members.push_back(chi);
    d.blocks.push_back(std::move(b));
  }
  return d;
}

std::string kind_name(TauKind k) {
  switch (k) {
    case TauKind::tau: return "tau";
    case TauKind::tau_irr: return "tau_irr";
    case TauKind::delta: return "delta";
    case TauKind::delta_irr: return "delta_irr";
  }
  return "?";
}

namespace {

struct Item {
  std::size_t index;
  std::uint64_t degree;
  std::vector<std::int32_t> sig;
};

struct Candidate {
  bool found = false;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> degrees;
  std::vector<std::size_t> indices;

  bool better_than(const Candidate& o) const {
    if (!o.found) return found;
    if (!found) return false;
    if (total != o.total) return total < o.total;
    if (degrees.size() != o.degrees.size()) return degrees.size() < o.degrees.size();
    if (degrees != o.degrees) return degrees < o.degrees;
    return indices < o.indices;
  }
};

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

// Minimum-total set of items whose joint kernel on the probes is empty.
// Each probe stands for `weight` elements of a subgroup, so the surviving
// elements plus the identity always form a subgroup.
class CoverSearch {
 public:
  CoverSearch(std::vector<Item> items, std::vector<std::uint64_t> weight, std::uint64_t q,
              std::uint64_t limit)
      : items_(std::move(items)), weight_(std::move(weight)), q_(q), limit_(limit) {
    prefix_.assign(items_.size() + 1, 0);
    for (std::size_t i = 0; i < items_.size(); ++i) prefix_[i + 1] = prefix_[i] + items_[i].degree;
  }

  Candidate run() {
    std::vector<std::int32_t> none;
    dfs(0, none, 0);
    return best_;
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::vector<Item> items_;
  std::vector<std::uint64_t> weight_;
  std::uint64_t q_, limit_;
  std::vector<std::uint64_t> prefix_;
  std::vector<std::size_t> chosen_;
  Candidate best_;
  std::uint64_t nodes_ = 0;

  std::size_t min_more(std::uint64_t alive) const {
    std::size_t c = 0;
    for (std::uint64_t s = 1; s < alive + 1; s *= q_) ++c;
    return c;
  }

  bool prune(std::size_t next, std::uint64_t total, std::size_t more) const {
    if (next + more > items_.size()) return true;
    if (!best_.found) return false;
    std::uint64_t lb = total + prefix_[next + more] - prefix_[next];
    if (lb != best_.total) return lb > best_.total;
    std::size_t count = chosen_.size() + more;
    if (count != best_.degrees.size()) return count > best_.degrees.size();
    std::vector<std::uint64_t> deg;
    for (std::size_t i : chosen_) deg.push_back(items_[i].degree);
    for (std::size_t i = next; i < next + more; ++i) deg.push_back(items_[i].degree);
    return !(deg < best_.degrees);
  }

  void record() {
    Candidate c;
    c.found = true;
    for (std::size_t i : chosen_) {
      c.total += items_[i].degree;
      c.degrees.push_back(items_[i].degree);
      c.indices.push_back(items_[i].index);
    }
    if (c.better_than(best_)) best_ = std::move(c);
  }

  void dfs(std::size_t pos, const std::vector<std::int32_t>& state, std::uint64_t total) {
    if (++nodes_ > limit_) throw ResourceError("projective search exceeded its node limit");
    for (std::size_t i = pos; i < items_.size(); ++i) {
      const Item& it = items_[i];
      if (best_.found && total + it.degree > best_.total) break;
      std::vector<std::int32_t> next(weight_.size());
      std::uint64_t left = 0;
      bool killed = false;
      for (std::size_t p = 0; p < weight_.size(); ++p) {
        std::int32_t s = it.sig[p];
        if (chosen_.empty()) {
          next[p] = s;
        } else if (state[p] == kNonScalar || s != state[p]) {
          next[p] = kNonScalar;
          if (state[p] != kNonScalar) killed = true;
        } else {
          next[p] = state[p];
        }
        if (next[p] != kNonScalar) left += weight_[p];
      }
      if (!chosen_.empty() && !killed) continue;
      chosen_.push_back(i);
      if (left == 0) {
        record();
      } else if (!prune(i + 1, total + it.degree, min_more(left))) {
        dfs(i + 1, next, total + it.degree);
      }
      chosen_.pop_back();
    }
  }
};

struct ProbeSet {
  std::vector<Elem> reps;
  std::vector<std::uint64_t> weight;
};

// Probe domain as class representatives of G with class sizes as weights.
ProbeSet probe_set(const Group& g, bool center_only) {
  ProbeSet ps;
  if (center_only) {
    for (Elem z : g.center().elements)
      if (z) {
        ps.reps.push_back(z);
        ps.weight.push_back(1);
      }
    return ps;
  }
  const auto& cp = g.classes();
  for (std::size_t c = 1; c < cp.count(); ++c) {
    ps.reps.push_back(cp.reps[c]);
    ps.weight.push_back(cp.sizes[c]);
  }
  return ps;
}

std::vector<std::string> words(const Group& g, const std::vector<Elem>& el) {
  std::vector<std::string> out;
  for (Elem x : el) out.push_back(word_to_text(g.presentation(), g.decode(x)));
  return out;
}

TauReport base_report(const Covering& c, TauKind kind, bool decomposed) {
  TauReport r;
  r.group = c.label;
  r.covering = c.name;
  r.kind = kind;
  r.exact = c.representation_group;
  r.decomposed = decomposed;
  return r;
}

// True if some x in G* \ A-cosets over 1 has chi(x) scalar, i.e. the projective kernel is nontrivial.
bool projective_kernel_nontrivial(const Covering& c, const CharacterTable& t, std::size_t chi) {
  const auto& cp = t.classes();
  for (std::size_t k = 0; k < cp.count(); ++k) {
    if (c.f[cp.reps[k]] == 0) continue;
    if (scalar_at(t.irr[chi].values[k], t.irr[chi].degree) != kNonScalar) return true;
  }
  return false;
}

}  // namespace

TauReport tau(const ProjectiveData& d, const SearchOptions& opts) {
  const Covering& c = *d.covering;
  TauReport r = base_report(c, TauKind::tau, d.decomposed);
  const Group& g = *c.G;
  ProbeSet ps = probe_set(g, g.is_nilpotent());
  r.probes_checked = ps.reps.size();
  std::uint64_t q = g.order() > 1 ? smallest_prime_factor(g.order()) : 2;
  Candidate best;
  std::size_t best_block = 0;
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const LambdaBlock& blk = d.blocks[b];
    std::map<std::vector<std::int32_t>, Item> classes;
    for (std::size_t chi : blk.members) {
      auto sig = scalar_signature(*blk.cover, *blk.table, chi, ps.reps).scalar;
      Item it{chi, blk.table->irr[chi].degree, sig};
      auto [pos, fresh] = classes.emplace(sig, it);
      if (!fresh && it.degree < pos->second.degree) pos->second = it;
    }
    std::vector<Item> items;
    for (auto& [sig, it] : classes) items.push_back(std::move(it));
    std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
      return x.degree != y.degree ? x.degree < y.degree : x.index < y.index;
    });
    CoverSearch s(std::move(items), ps.weight, q, opts.node_limit);
    Candidate cand = s.run();
    r.nodes_expanded += s.nodes();
    if (cand.better_than(best)) {
      best = std::move(cand);
      best_block = b;
    }
  }
  if (!best.found) return r;
  const LambdaBlock& blk = d.blocks[best_block];
  r.value = best.total;
  r.lambda = blk.lambda;
  for (std::size_t i = 0; i < best.indices.size(); ++i) r.constituents.push_back({best.indices[i], best.degrees[i]});
  r.kernel = joint_projective_kernel(*blk.cover, *blk.table, best.indices, ps.reps);
  r.kernel_words = words(g, r.kernel);
  return r;
}

TauReport tau_irr(const ProjectiveData& d) {
  const Covering& c = *d.covering;
  TauReport r = base_report(c, TauKind::tau_irr, d.decomposed);
  r.probes_checked = c.G->order() - 1;
  std::optional<std::pair<std::uint64_t, std::size_t>> best;
  for (const auto& blk : d.blocks)
    for (std::size_t chi : blk.members) {
      std::uint64_t deg = blk.table->irr[chi].degree;
      if (best && (best->first < deg || (best->first == deg && best->second <= chi))) continue;
      ++r.nodes_expanded;
      if (projective_kernel_nontrivial(*blk.cover, *blk.table, chi)) continue;
      best = {deg, chi};
      r.lambda = blk.lambda;
    }
  if (!best) return r;
  r.value = best->first;
  r.constituents.push_back({best->second, best->first});
  return r;
}

TauReport tau(const Covering& c, const CharacterTable& t, const SearchOptions& opts) {
  return tau(projective_data(c, t), opts);
}

TauReport tau_irr(const Covering& c, const CharacterTable& t) { return tau_irr(projective_data(c, t)); }

TauReport delta(const CharacterTable& t, const SearchOptions& opts) {
  const Group& g = *t.group;
  TauReport r;
  r.group = g.presentation().name;
  r.kind = TauKind::delta;
  r.exact = true;
  ProbeSet ps = probe_set(g, false);
  r.probes_checked = ps.reps.size();
  const auto& cp = g.classes();
  std::map<std::vector<std::int32_t>, Item> classes;
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    std::vector<std::int32_t> sig;
    Cyclotomic deg = Cyclotomic::integer(t.conductor, static_cast<std::int64_t>(t.irr[chi].degree));
    for (Elem x : ps.reps) sig.push_back(t.irr[chi].values[cp.class_of[x]] == deg ? 0 : kNonScalar);
    Item it{chi, t.irr[chi].degree, sig};
    auto [pos, fresh] = classes.emplace(sig, it);
    if (!fresh && it.degree < pos->second.degree) pos->second = it;
  }
  std::vector<Item> items;
  for (auto& [sig, it] : classes) items.push_back(std::move(it));
  std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
    return x.degree != y.degree ? x.degree < y.degree : x.index < y.index;
  });
  std::uint64_t q = g.order() > 1 ? smallest_prime_factor(g.order()) : 2;
  CoverSearch s(std::move(items), ps.weight, q, opts.node_limit);
  Candidate best = s.run();
  r.nodes_expanded = s.nodes();
  if (!best.found) return r;
  r.value = best.total;
  for (std::size_t i = 0; i < best.indices.size(); ++i) r.constituents.push_back({best.indices[i], best.degrees[i]});
  return r;
}

TauReport delta_irr(const CharacterTable& t) {
  const Group& g = *t.group;
  TauReport r;
  r.group = g.presentation().name;
  r.kind = TauKind::delta_irr;
  r.exact = true;
  r.probes_checked = g.order() - 1;
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    ++r.nodes_expanded;
    Cyclotomic deg = Cyclotomic::integer(t.conductor, static_cast<std::int64_t>(t.irr[chi].degree));
    bool faithful = true;
    for (std::size_t k = 1; k < t.classes().count() && faithful; ++k)
      if (t.irr[chi].values[k] == deg) faithful = false;
    if (faithful && (!r.value || t.irr[chi].degree < *r.value)) {
      r.value = t.irr[chi].degree;
      r.constituents = {{chi, t.irr[chi].degree}};
    }
  }
  return r;
}

namespace {

// Witness kernel evaluated element by element, without signatures or classes.
std::vector<Elem> kernel_from_scratch(const Covering& c, const CharacterTable& t,
                                      const std::vector<std::size_t>& members) {
  std::vector<Elem> out;
  const Group& s = *t.group;
  for (std::uint64_t g = 1; g < c.G->order(); ++g) {
    Elem x = c.mu[g];
    std::optional<std::int32_t> common;
    bool alive = true;
    for (std::size_t chi : members) {
      const auto& ch = t.irr[chi];
      std::int32_t j = scalar_at(ch.values[s.classes().class_of[x]], ch.degree);
      if (j == kNonScalar || (common && *common != j)) {
        alive = false;
        break;
      }
      common = j;
    }
    if (alive) out.push_back(static_cast<Elem>(g));
  }
  return out;
}

}  // namespace

bool verify_witness(const ProjectiveData& d, const TauReport& r) {
  if (r.kind != TauKind::tau && r.kind != TauKind::tau_irr) return false;
  if (!r.value) {
    if (r.kind == TauKind::tau) return d.blocks.empty();
    for (const auto& blk : d.blocks)
      for (std::size_t chi : blk.members)
        if (kernel_from_scratch(*blk.cover, *blk.table, {chi}).empty()) return false;
    return true;
  }
  const LambdaBlock& blk = d.block(r.lambda);
  std::vector<std::size_t> members;
  std::uint64_t total = 0;
  for (const auto& con : r.constituents) {
    if (std::find(blk.members.begin(), blk.members.end(), con.index) == blk.members.end()) return false;
    if (blk.table->irr[con.index].degree != con.degree) return false;
    members.push_back(con.index);
    total += con.degree;
  }
  if (members.empty() || total != *r.value) return false;
  if (r.kind == TauKind::tau_irr && members.size() != 1) return false;
  return kernel_from_scratch(*blk.cover, *blk.table, members).empty();
}

bool verify_delta_witness(const CharacterTable& t, const TauReport& r) {
  const Group& g = *t.group;
  if (!r.value) {
    if (r.kind != TauKind::delta_irr) return false;
    for (std::size_t chi = 0; chi < t.size(); ++chi) {
      Cyclotomic deg = Cyclotomic::integer(t.conductor, static_cast<std::int64_t>(t.irr[chi].degree));
      bool faithful = true;
      for (std::uint64_t x = 1; x < g.order() && faithful; ++x)
        if (t.value(chi, static_cast<Elem>(x)) == deg) faithful = false;
      if (faithful) return false;
    }
    return true;
  }
  std::uint64_t total = 0;
  for (const auto& con : r.constituents) {
    if (con.index >= t.size() || t.irr[con.index].degree != con.degree) return false;
    total += con.degree;
  }
  if (total != *r.value) return false;
  for (std::uint64_t x = 1; x < g.order(); ++x) {
    bool in_all = true;
    for (const auto& con : r.constituents) {
      const auto& ch = t.irr[con.index];
      if (!(t.value(con.index, static_cast<Elem>(x)) ==
            Cyclotomic::integer(t.conductor, static_cast<std::int64_t>(ch.degree)))) {
        in_all = false;
        break;
      }
    }
    if (in_all) return false;
  }
  return true;
}

std::string TauReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["group"] = group;
  j["covering"] = covering;
  j["kind"] = kind_name(kind);
  if (value)
    j["value"] = *value;
  else
    j["value"] = nullptr;
  j["exact"] = exact;
  j["decomposed"] = decomposed;
  nlohmann::ordered_json w;
  w["lambda"] = lambda.exponents;
  auto cons = nlohmann::ordered_json::array();
  for (const auto& c : constituents) cons.push_back({{"index", c.index}, {"degree", c.degree}});
  w["constituents"] = cons;
  j["witness"] = w;
  j["kernel"] = kernel_words;
  j["probes_checked"] = probes_checked;
  j["nodes_expanded"] = nodes_expanded;
  return j.dump(2);
}

std::string TauReport::to_text() const {
  std::ostringstream o;
  o << kind_name(kind) << "(" << group << ") = ";
  if (value)
    o << *value;
  else
    o << "-";
  if (value && !exact && kind == TauKind::tau) o << " (upper bound)";
  if (!covering.empty()) o << "  via " << covering;
  if (value) {
    o << "\n  lambda " << lambda.to_string() << "  constituents";
    for (const auto& c : constituents) o << " chi" << c.index + 1 << "[" << c.degree << "]";
  }
  o << "\n  probes " << probes_checked << "  nodes " << nodes_expanded << "\n";
  return o.str();
}

}  // namespace projembed
