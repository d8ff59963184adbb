#include "projembed/group.hpp"

#include <algorithm>
#include <numeric>

#include "projembed/collector.hpp"
#include "projembed/errors.hpp"
#include "projembed/smith.hpp"

namespace projembed {

bool Subgroup::contains(Elem x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

Group::Group(PcPresentation p) : pres_(std::move(p)) {}

GroupPtr Group::build(const PcPresentation& p, const Limits& limits) {
  if (p.order() > limits.max_order)
    throw ResourceError("group " + p.name + " of order " + std::to_string(p.order()) +
                        " exceeds the configured bound " + std::to_string(limits.max_order));
  std::shared_ptr<Group> g(new Group(p));
  g->self_ = g;
  std::size_t n = p.size();
  g->order_ = p.order();
  g->strides_.resize(n);
  std::uint64_t s = 1;
  for (std::size_t i = n; i-- > 0;) {
    g->strides_[i] = s;
    s *= p.rel_orders[i];
  }
  Collector coll(g->pres_, true);
  g->rmul_.assign(n, std::vector<Elem>(g->order_));
  g->rinv_.assign(n, std::vector<Elem>(g->order_));
  for (std::size_t i = n; i-- > 0;)
    for (std::uint64_t x = 0; x < g->order_; ++x) {
      Elem y = static_cast<Elem>(coll.mul_gen(x, i));
      g->rmul_[i][x] = y;
      g->rinv_[i][y] = static_cast<Elem>(x);
    }
  return g;
}

Elem Group::encode(const NormalWord& w) const {
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < w.size(); ++i) x += w[i] * strides_[i];
  return static_cast<Elem>(x);
}

NormalWord Group::decode(Elem x) const {
  NormalWord w(ngens());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = exponent_at(x, i);
  return w;
}

Elem Group::mul(Elem x, Elem y) const {
  for (std::size_t i = 0; i < strides_.size() && y; ++i) {
    std::uint64_t a = y / strides_[i];
    y = static_cast<Elem>(y % strides_[i]);
    const auto& t = rmul_[i];
    for (; a; --a) x = t[x];
  }
  return x;
}

Elem Group::inv(Elem x) const {
  Elem y = 0;
  for (std::size_t i = strides_.size(); i-- > 0;) {
    const auto& t = rinv_[i];
    for (std::uint32_t a = exponent_at(x, i); a; --a) y = t[y];
  }
  return y;
}

Elem Group::pow(Elem x, std::int64_t m) const {
  if (m < 0) {
    x = inv(x);
    m = -m;
  }
  Elem r = 0;
  while (m) {
    if (m & 1) r = mul(r, x);
    m >>= 1;
    if (m) x = mul(x, x);
  }
  return r;
}

Elem Group::conj(Elem x, Elem g) const { return mul(inv(g), mul(x, g)); }

Elem Group::comm(Elem x, Elem y) const { return mul(inv(mul(y, x)), mul(x, y)); }

std::uint64_t Group::element_order(Elem x) const {
  std::uint64_t o = order_;
  std::uint64_t rest = order_;
  for (std::uint64_t q = 2; q * q <= rest || rest > 1; ++q) {
    if (q * q > rest) q = rest;
    if (rest % q) continue;
    while (rest % q == 0) rest /= q;
    while (o % q == 0 && pow(x, static_cast<std::int64_t>(o / q)) == 0) o /= q;
  }
  return o;
}

const std::vector<std::uint32_t>& Group::element_orders() const {
  std::call_once(orders_once_, [this] {
    const auto& cp = classes();
    std::vector<std::uint32_t> rep_order(cp.count());
    for (std::size_t c = 0; c < cp.count(); ++c)
      rep_order[c] = static_cast<std::uint32_t>(element_order(cp.reps[c]));
    orders_.resize(order_);
    for (std::uint64_t x = 0; x < order_; ++x) orders_[x] = rep_order[cp.class_of[x]];
  });
  return orders_;
}

std::uint64_t Group::exponent() const {
  std::uint64_t e = 1;
  for (auto o : element_orders()) e = std::lcm(e, static_cast<std::uint64_t>(o));
  return e;
}

bool Group::is_abelian() const {
  for (std::size_t i = 0; i < ngens(); ++i)
    for (std::size_t j = i + 1; j < ngens(); ++j)
      if (!pres_.is_trivial_conj(j, i)) return false;
  return true;
}

bool Group::is_nilpotent() const {
  const auto& ords = element_orders();
  std::uint64_t rest = order_;
  for (std::uint64_t q = 2; rest > 1; ++q) {
    if (rest % q) continue;
    std::uint64_t part = 1;
    while (rest % q == 0) {
      rest /= q;
      part *= q;
    }
    std::uint64_t count = 0;
    for (auto o : ords) {
      std::uint64_t v = o;
      while (v % q == 0) v /= q;
      if (v == 1) ++count;
    }
    if (count != part) return false;
  }
  return true;
}

const ClassPartition& Group::classes() const {
  std::call_once(classes_once_, [this] {
    std::vector<Elem> ginv(ngens());
    for (std::size_t i = 0; i < ngens(); ++i) ginv[i] = inv(generator(i));
    const std::uint32_t unset = 0xffffffffu;
    classes_.class_of.assign(order_, unset);
    std::vector<Elem> stack;
    for (std::uint64_t x0 = 0; x0 < order_; ++x0) {
      if (classes_.class_of[x0] != unset) continue;
      auto c = static_cast<std::uint32_t>(classes_.reps.size());
      std::vector<Elem> mem{static_cast<Elem>(x0)};
      classes_.class_of[x0] = c;
      stack.assign(1, static_cast<Elem>(x0));
      while (!stack.empty()) {
        Elem x = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < ngens(); ++i) {
          Elem y = mul(ginv[i], rmul_[i][x]);
          if (classes_.class_of[y] == unset) {
            classes_.class_of[y] = c;
            mem.push_back(y);
            stack.push_back(y);
          }
        }
      }
      std::sort(mem.begin(), mem.end());
      classes_.reps.push_back(static_cast<Elem>(x0));
      classes_.sizes.push_back(static_cast<std::uint32_t>(mem.size()));
      classes_.members.push_back(std::move(mem));
    }
  });
  return classes_;
}

const Subgroup& Group::center() const {
  std::call_once(center_once_, [this] {
    const auto& cp = classes();
    std::vector<Elem> z;
    for (std::size_t c = 0; c < cp.count(); ++c)
      if (cp.sizes[c] == 1) z.push_back(cp.reps[c]);
    center_ = subgroup(z);
    if (center_.size() != z.size()) throw StructureError("center is not closed");
  });
  return center_;
}

const Subgroup& Group::derived_subgroup() const {
  std::call_once(derived_once_, [this] {
    std::vector<Elem> cs;
    for (std::size_t i = 0; i < ngens(); ++i)
      for (std::size_t j = i + 1; j < ngens(); ++j) {
        Elem c = comm(generator(i), generator(j));
        if (c) cs.push_back(c);
      }
    derived_ = normal_closure(cs);
  });
  return derived_;
}

namespace {

Subgroup closure(const Group& g, const std::vector<Elem>& gens, bool normal) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> elems{0};
  seen[0] = 1;
  std::vector<Elem> gis;
  for (std::size_t i = 0; i < g.ngens(); ++i) gis.push_back(g.generator(i));
  for (std::size_t k = 0; k < elems.size(); ++k) {
    Elem x = elems[k];
    for (Elem s : gens) {
      Elem y = g.mul(x, s);
      if (!seen[y]) {
        seen[y] = 1;
        elems.push_back(y);
      }
    }
    if (normal)
      for (Elem s : gis) {
        Elem y = g.conj(x, s);
        if (!seen[y]) {
          seen[y] = 1;
          elems.push_back(y);
        }
      }
  }
  std::sort(elems.begin(), elems.end());
  Subgroup h;
  h.parent = g.self();
  h.elements = std::move(elems);
  for (Elem s : gens)
    if (s) h.gens.push_back(s);
  return h;
}

}  // namespace

Subgroup Group::subgroup(const std::vector<Elem>& gens) const { return closure(*this, gens, false); }

Subgroup Group::normal_closure(const std::vector<Elem>& gens) const {
  return closure(*this, gens, true);
}

Subgroup Group::centralizer(Elem x) const {
  std::vector<Elem> c;
  for (std::uint64_t y = 0; y < order_; ++y)
    if (mul(x, static_cast<Elem>(y)) == mul(static_cast<Elem>(y), x)) c.push_back(static_cast<Elem>(y));
  Subgroup h;
  h.parent = self();
  h.elements = std::move(c);
  h.gens = h.elements;
  if (!h.gens.empty()) h.gens.erase(h.gens.begin());
  return h;
}

Subgroup Group::whole() const {
  Subgroup h;
  h.parent = self();
  h.elements.resize(order_);
  std::iota(h.elements.begin(), h.elements.end(), 0);
  for (std::size_t i = 0; i < ngens(); ++i) h.gens.push_back(generator(i));
  return h;
}

Subgroup Group::trivial_subgroup() const {
  Subgroup h;
  h.parent = self();
  h.elements = {0};
  return h;
}

bool Group::is_normal(const Subgroup& s) const {
  for (Elem x : s.elements)
    for (std::size_t i = 0; i < ngens(); ++i)
      if (!s.contains(conj(x, generator(i)))) return false;
  return true;
}

Quotient quotient(const Group& g, const Subgroup& nsub, const std::string& name) {
  if (!g.is_normal(nsub)) throw StructureError("quotient by a subgroup that is not normal");
  std::size_t n = g.ngens();
  // depth[x] = largest s with x in N * G_s, where G_s = <g_s, ..., g_n>.
  std::vector<std::uint8_t> depth(g.order(), 0);
  const std::uint8_t none = 0xff;
  if (n >= none) throw ResourceError("too many generators for quotient");
  std::fill(depth.begin(), depth.end(), none);
  std::vector<Elem> level(nsub.elements);
  for (Elem x : level) depth[x] = static_cast<std::uint8_t>(n);
  std::vector<std::uint32_t> r(n, 1);
  for (std::size_t s = n; s-- > 0;) {
    std::vector<Elem> base = level;
    Elem cur = g.generator(s);
    while (depth[cur] == none) {
      for (Elem y : base) {
        Elem z = g.mul(y, cur);
        if (depth[z] == none) {
          depth[z] = static_cast<std::uint8_t>(s);
          level.push_back(z);
        }
      }
      cur = g.mul(cur, g.generator(s));
      ++r[s];
    }
  }
  std::vector<std::size_t> kept;
  std::vector<int> qindex(n, -1);
  for (std::size_t s = 0; s < n; ++s)
    if (r[s] > 1) {
      qindex[s] = static_cast<int>(kept.size());
      kept.push_back(s);
    }
  std::vector<std::vector<Elem>> ginv_pows(n);
  for (std::size_t s : kept) {
    Elem gi = g.inv(g.generator(s));
    Elem cur = 0;
    for (std::uint32_t a = 0; a < r[s]; ++a) {
      ginv_pows[s].push_back(cur);
      cur = g.mul(cur, gi);
    }
  }
  std::size_t m = kept.size();
  auto sift = [&](Elem x) {
    NormalWord w(m, 0);
    for (std::size_t s : kept) {
      std::uint32_t a = 0;
      for (; a < r[s]; ++a) {
        Elem y = g.mul(ginv_pows[s][a], x);
        if (depth[y] != none && depth[y] > s) {
          x = y;
          break;
        }
      }
      if (a == r[s]) throw StructureError("sifting failed in quotient construction");
      w[static_cast<std::size_t>(qindex[s])] = a;
    }
    return w;
  };
  PcPresentation q;
  q.name = name.empty() ? g.presentation().name + "_quotient" : name;
  for (std::size_t s : kept) {
    q.gens.push_back(g.presentation().gens[s]);
    q.rel_orders.push_back(r[s]);
  }
  q.power_rels.assign(m, NormalWord(m, 0));
  q.conj_rels.assign(m, std::vector<NormalWord>(m));
  for (std::size_t a = 0; a < m; ++a) {
    std::size_t s = kept[a];
    q.power_rels[a] = sift(g.pow(g.generator(s), r[s]));
    for (std::size_t b = a + 1; b < m; ++b)
      q.conj_rels[b][a] = sift(g.conj(g.generator(kept[b]), g.generator(s)));
  }
  require_consistent(q);
  Quotient out;
  out.group = Group::build(q);
  const Group& qg = *out.group;
  std::vector<Elem> gen_image(n);
  for (std::size_t s = 0; s < n; ++s) gen_image[s] = qg.encode(sift(g.generator(s)));
  out.map.assign(g.order(), 0);
  for (std::uint64_t x = 1; x < g.order(); ++x) {
    std::size_t last = n;
    while (g.exponent_at(static_cast<Elem>(x), last - 1) == 0) --last;
    std::size_t i = last - 1;
    Elem prev = static_cast<Elem>(x) - g.generator(i);
    out.map[x] = qg.mul(out.map[prev], gen_image[i]);
  }
  if (qg.order() * nsub.size() != g.order()) throw StructureError("quotient order mismatch");
  return out;
}

PcPresentation direct_product(const PcPresentation& g, const PcPresentation& h,
                              const std::string& name) {
  std::size_t a = g.size(), b = h.size(), n = a + b;
  PcPresentation d;
  d.name = name.empty() ? g.name + "x" + h.name : name;
  d.gens = g.gens;
  for (const auto& s : h.gens) {
    std::string t = s;
    while (std::find(d.gens.begin(), d.gens.end(), t) != d.gens.end()) t += "_2";
    d.gens.push_back(t);
  }
  d.rel_orders = g.rel_orders;
  d.rel_orders.insert(d.rel_orders.end(), h.rel_orders.begin(), h.rel_orders.end());
  auto left = [&](const NormalWord& w) {
    NormalWord v(n, 0);
    std::copy(w.begin(), w.end(), v.begin());
    return v;
  };
  auto right = [&](const NormalWord& w) {
    NormalWord v(n, 0);
    std::copy(w.begin(), w.end(), v.begin() + static_cast<std::ptrdiff_t>(a));
    return v;
  };
  d.power_rels.resize(n);
  d.conj_rels.assign(n, std::vector<NormalWord>(n));
  for (std::size_t i = 0; i < a; ++i) d.power_rels[i] = left(g.power_rels[i]);
  for (std::size_t i = 0; i < b; ++i) d.power_rels[a + i] = right(h.power_rels[i]);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (j < a)
        d.conj_rels[j][i] = left(g.conj_rels[j][i]);
      else if (i >= a)
        d.conj_rels[j][i] = right(h.conj_rels[j - a][i - a]);
      else
        d.conj_rels[j][i] = d.generator_word(j);
    }
  return d;
}

GroupPtr direct_product(const Group& g, const Group& h, const std::string& name) {
  return Group::build(direct_product(g.presentation(), h.presentation(), name));
}

GroupPtr central_product(const Group& g, Elem z1, const Group& h, Elem z2,
                         const std::string& name) {
  if (!g.center().contains(z1) || !h.center().contains(z2))
    throw StructureError("central product needs central elements");
  if (g.element_order(z1) != h.element_order(z2))
    throw StructureError("central product needs elements of equal order");
  auto d = direct_product(g, h);
  NormalWord w = g.decode(z1);
  NormalWord v = h.decode(h.inv(z2));
  w.insert(w.end(), v.begin(), v.end());
  Elem t = d->encode(w);
  auto q = quotient(*d, d->subgroup({t}),
                    name.empty() ? g.presentation().name + "o" + h.presentation().name : name);
  return q.group;
}

PcPresentation abelian_presentation(const AbelianInvariants& inv, const std::string& name) {
  inv.validate();
  std::vector<std::string> gens;
  std::vector<std::uint32_t> orders;
  for (std::size_t i = 0; i < inv.rank(); ++i) {
    gens.push_back("x" + std::to_string(i + 1));
    orders.push_back(static_cast<std::uint32_t>(ipow(inv.p, inv.exponents[i])));
  }
  return PcPresentation::free_abelian_like(name, gens, orders);
}

PcPresentation extension_from_form(const AbelianInvariants& inv, const AlternatingForm& form,
                                   const std::string& name) {
  inv.validate();
  if (form.p != inv.p) throw InputError("form and invariants use different primes");
  if (form.size() != inv.rank()) throw InputError("form dimension does not match the rank");
  if (form.k == 0) throw InputError("form modulus must be p^k with k >= 1");
  if (!form.is_alternating()) throw InputError("form is not alternating");
  AlternatingForm c = form.reduced();
  std::size_t n = inv.rank();
  std::vector<std::string> gens;
  std::vector<std::uint32_t> orders;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back("x" + std::to_string(i + 1));
    orders.push_back(static_cast<std::uint32_t>(ipow(inv.p, inv.exponents[i])));
  }
  gens.push_back("z");
  orders.push_back(static_cast<std::uint32_t>(c.modulus()));
  PcPresentation p = PcPresentation::free_abelian_like(name, gens, orders);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      auto v = c.c[j][i];
      if (!v) continue;
      std::uint32_t lo = std::min(inv.exponents[i], inv.exponents[j]);
      if (lo < c.k && v % static_cast<std::int64_t>(ipow(inv.p, c.k - lo)) != 0)
        throw InputError("form entry (" + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                         ") is incompatible with the factor orders");
      p.conj_rels[j][i][n] = static_cast<std::uint32_t>(v);
    }
  return p;
}

bool satisfies_relations(const Group& g, const PcPresentation& p, const std::vector<Elem>& images) {
  if (images.size() != p.size()) return false;
  auto eval = [&](const NormalWord& w) {
    Elem x = 0;
    for (std::size_t k = 0; k < w.size(); ++k) x = g.mul(x, g.pow(images[k], w[k]));
    return x;
  };
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (g.pow(images[i], p.rel_orders[i]) != eval(p.power_rels[i])) return false;
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (g.conj(images[j], images[i]) != eval(p.conj_rels[j][i])) return false;
  }
  return true;
}

InducedPcgs induced_pcgs(const Group& g, const Subgroup& h) {
  InducedPcgs pc;
  const auto& el = h.elements;
  std::size_t n = g.ngens();
  for (std::size_t i = 0; i < n; ++i) {
    // H_i is the prefix of elements below |G_i|.
    std::uint64_t bound = static_cast<std::uint64_t>(g.generator(i)) * g.presentation().rel_orders[i];
    std::uint32_t best = 0;
    Elem who = 0;
    for (Elem x : el) {
      if (x >= bound) break;
      std::uint32_t a = g.exponent_at(x, i);
      if (a && (best == 0 || a < best)) {
        best = a;
        who = x;
      }
    }
    if (!best) continue;
    pc.gens.push_back(who);
    pc.rel_orders.push_back(g.presentation().rel_orders[i] / best);
    pc.depth.push_back(i);
    pc.lead.push_back(best);
  }
  return pc;
}

std::optional<std::vector<std::uint32_t>> InducedPcgs::sift(const Group& g, Elem h) const {
  std::vector<std::uint32_t> out(gens.size(), 0);
  std::size_t s = 0;
  for (std::size_t i = 0; i < g.ngens() && h; ++i) {
    std::uint32_t a = g.exponent_at(h, i);
    if (s < gens.size() && depth[s] == i) {
      if (a % lead[s]) return std::nullopt;
      std::uint32_t c = a / lead[s];
      if (c) h = g.mul(g.pow(gens[s], -static_cast<std::int64_t>(c)), h);
      out[s] = c;
      ++s;
    } else if (a) {
      return std::nullopt;
    }
  }
  if (h) return std::nullopt;
  return out;
}

std::uint64_t AbelianDecomposition::size() const {
  std::uint64_t s = 1;
  for (auto d : orders) s *= d;
  return s;
}

std::vector<std::uint64_t> AbelianDecomposition::coordinates(const Group& g, Elem h) const {
  auto a = pcgs.sift(g, h);
  if (!a) throw StructureError("element outside the abelian subgroup");
  std::vector<std::uint64_t> c(orders.size(), 0);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t s = 0; s < a->size(); ++s) acc = (acc + (*a)[s] * coord_map[s][i]) % orders[i];
    c[i] = acc;
  }
  return c;
}

AbelianDecomposition decompose_abelian(const Group& g, const Subgroup& h) {
  for (Elem x : h.gens)
    for (Elem y : h.gens)
      if (g.mul(x, y) != g.mul(y, x)) throw StructureError("subgroup is not abelian");
  AbelianDecomposition dec;
  dec.pcgs = induced_pcgs(g, h);
  const auto& pc = dec.pcgs;
  std::size_t r = pc.gens.size();
  IntMatrix rel(r, std::vector<BigInt>(r, 0));
  for (std::size_t s = 0; s < r; ++s) {
    auto w = pc.sift(g, g.pow(pc.gens[s], pc.rel_orders[s]));
    rel[s][s] = pc.rel_orders[s];
    for (std::size_t t = 0; t < r; ++t) rel[s][t] -= (*w)[t];
  }
  auto snf = smith_normal_form(rel);
  for (std::size_t i = 0; i < r; ++i) {
    auto d = static_cast<std::uint64_t>(snf.d[i]);
    if (d <= 1) continue;
    dec.orders.push_back(d);
    Elem gen = 0;
    for (std::size_t s = 0; s < r; ++s) {
      BigInt e = snf.Vinv[i][s] % BigInt(g.element_order(pc.gens[s]));
      gen = g.mul(gen, g.pow(pc.gens[s], static_cast<std::int64_t>(e)));
    }
    dec.generators.push_back(gen);
  }
  dec.coord_map.assign(r, std::vector<std::uint64_t>(dec.orders.size(), 0));
  for (std::size_t s = 0; s < r; ++s) {
    std::size_t col = 0;
    for (std::size_t i = 0; i < r; ++i) {
      auto d = static_cast<std::uint64_t>(snf.d[i]);
      if (d <= 1) continue;
      BigInt v = snf.V[s][i] % BigInt(d);
      if (v < 0) v += d;
      dec.coord_map[s][col++] = static_cast<std::uint64_t>(v);
    }
  }
  return dec;
}

}  // namespace projembed
