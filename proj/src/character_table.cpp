#include "projembed/character_table.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "projembed/errors.hpp"

namespace projembed {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

struct Field {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

bool prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> f;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back(n);
  return f;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& a, const Field& f) {
  std::vector<std::size_t> piv;
  if (a.empty()) return piv;
  std::size_t cols = a[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t s = r;
    while (s < a.size() && a[s][c] == 0) ++s;
    if (s == a.size()) continue;
    std::swap(a[s], a[r]);
    u64 iv = f.inv(a[r][c]);
    for (auto& x : a[r]) x = f.mul(x, iv);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      u64 t = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (a[r][j]) a[i][j] = f.sub(a[i][j], f.mul(t, a[r][j]));
    }
    piv.push_back(c);
    ++r;
  }
  a.resize(r);
  return piv;
}

// Basis of {x : a x = 0}.
Mat nullspace(Mat a, const Field& f) {
  std::size_t n = a.empty() ? 0 : a[0].size();
  auto piv = rref(a, f);
  std::vector<int> is_piv(n, -1);
  for (std::size_t r = 0; r < piv.size(); ++r) is_piv[piv[r]] = static_cast<int>(r);
  Mat out;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_piv[c] >= 0) continue;
    Vec v(n, 0);
    v[c] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = f.sub(0, a[r][c]);
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial, low degree first, via Hessenberg reduction.
Vec charpoly(Mat h, const Field& f) {
  std::size_t n = h.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h[i][j] == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      std::swap(h[i], h[j + 1]);
      for (auto& row : h) std::swap(row[i], row[j + 1]);
    }
    u64 iv = f.inv(h[j + 1][j]);
    for (std::size_t r = j + 2; r < n; ++r) {
      if (h[r][j] == 0) continue;
      u64 t = f.mul(h[r][j], iv);
      for (std::size_t c = 0; c < n; ++c) h[r][c] = f.sub(h[r][c], f.mul(t, h[j + 1][c]));
      for (std::size_t c = 0; c < n; ++c) h[c][j + 1] = f.add(h[c][j + 1], f.mul(t, h[c][r]));
    }
  }
  std::vector<Vec> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    Vec cur(k + 1, 0);
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      cur[d + 1] = f.add(cur[d + 1], p[k - 1][d]);
      cur[d] = f.sub(cur[d], f.mul(h[k - 1][k - 1], p[k - 1][d]));
    }
    u64 prod = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      prod = f.mul(prod, h[i][i - 1]);
      if (prod == 0) break;
      u64 t = f.mul(h[i - 1][k - 1], prod);
      for (std::size_t d = 0; d < p[i - 1].size(); ++d) cur[d] = f.sub(cur[d], f.mul(t, p[i - 1][d]));
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

std::vector<u64> roots(const Vec& poly, const Field& f) {
  std::vector<u64> r;
  const std::size_t n = poly.size() - 1;
  if (n >= 1 && n < f.p) {
    // Fast path for (x - a)^n.
    u64 a = f.mul(poly[n - 1], f.inv(n % f.p));
    a = f.sub(0, a);
    Vec q{1};
    for (std::size_t i = 0; i < n; ++i) {
      Vec nq(q.size() + 1, 0);
      for (std::size_t d = 0; d < q.size(); ++d) {
        nq[d + 1] = f.add(nq[d + 1], q[d]);
        nq[d] = f.sub(nq[d], f.mul(a, q[d]));
      }
      q = std::move(nq);
    }
    if (q == poly) return {a};
  }
  for (u64 x = 0; x < f.p; ++x) {
    u64 acc = 0;
    for (std::size_t d = poly.size(); d-- > 0;) acc = f.add(f.mul(acc, x), poly[d]);
    if (acc == 0) r.push_back(x);
  }
  return r;
}

struct Orbit {
  std::uint32_t rep;                                         // class index
  std::vector<std::pair<std::uint32_t, std::uint32_t>> members;  // (class, index into Z)
  std::vector<std::uint32_t> stabilizer;                     // indices into Z
};

void check_budget(std::size_t k, const TableOptions& opts) {
  long double cube = static_cast<long double>(k) * k * k;
  if (cube > static_cast<long double>(opts.max_classes_cubed))
    throw ResourceError("class count " + std::to_string(k) + " exceeds the classes-cubed budget " +
                        std::to_string(opts.max_classes_cubed));
}

}  // namespace

std::uint32_t CharacterTable::power_class(std::size_t c, std::int64_t t) const {
  const auto& pc = power_classes[c];
  auto o = static_cast<std::int64_t>(pc.size());
  return pc[static_cast<std::size_t>(((t % o) + o) % o)];
}

std::vector<std::uint64_t> CharacterTable::degrees() const {
  std::vector<std::uint64_t> d;
  for (const auto& c : irr) d.push_back(c.degree);
  return d;
}

std::vector<std::vector<std::vector<std::uint32_t>>> class_mult_coefficients(const Group& g,
                                                                             const TableOptions& opts) {
  const auto& cp = g.classes();
  std::size_t k = cp.count();
  check_budget(k, opts);
  std::vector<std::vector<std::vector<std::uint32_t>>> a(
      k, std::vector<std::vector<std::uint32_t>>(k, std::vector<std::uint32_t>(k, 0)));
  for (std::size_t i = 0; i < k; ++i)
    for (Elem x : cp.members[i]) {
      Elem xi = g.inv(x);
      for (std::size_t t = 0; t < k; ++t) ++a[i][cp.class_of[g.mul(xi, cp.reps[t])]][t];
    }
  return a;
}

CharacterTable character_table(const GroupPtr& gp, const TableOptions& opts) {
  const Group& g = *gp;
  const auto& cp = g.classes();
  const std::size_t k = cp.count();
  check_budget(k, opts);
  CharacterTable t;
  t.group = gp;
  const u64 order = g.order();
  const u64 m = g.exponent();
  t.conductor = static_cast<std::uint32_t>(m);

  u64 ell = m + 1;
  while (!(ell * ell > 4 * order && prime(ell))) ell += m;
  if (ell >= (1u << 20)) throw ResourceError("modular prime too large for the table routine");
  t.prime = ell;
  Field f{ell};
  u64 prim = 2;
  if (ell == 2) prim = 1;
  auto qs = prime_factors(ell - 1);
  for (;; ++prim) {
    bool ok = true;
    for (u64 q : qs)
      if (f.pow(prim, (ell - 1) / q) == 1) ok = false;
    if (ok || ell == 2) break;
  }
  const u64 w = f.pow(prim, (ell - 1) / m);
  Vec wpow(m);
  for (u64 e = 0; e < m; ++e) wpow[e] = f.pow(w, e);

  t.class_orders.resize(k);
  t.inverse_class.resize(k);
  t.power_classes.resize(k);
  for (std::size_t c = 0; c < k; ++c) {
    Elem r = cp.reps[c];
    t.class_orders[c] = static_cast<std::uint32_t>(g.element_orders()[r]);
    t.inverse_class[c] = cp.class_of[g.inv(r)];
    Elem x = 0;
    for (std::uint32_t s = 0; s < t.class_orders[c]; ++s) {
      t.power_classes[c].push_back(cp.class_of[x]);
      x = g.mul(x, r);
    }
  }

  const Subgroup& z = g.center();
  t.center = decompose_abelian(g, z);
  const auto& dec = t.center;
  const std::size_t nz = z.size();
  std::vector<std::vector<u64>> zc(nz);
  for (std::size_t i = 0; i < nz; ++i) zc[i] = dec.coordinates(g, z.elements[i]);

  // Orbits of Z acting on classes by multiplication.
  std::vector<Orbit> orbits;
  std::vector<int> orbit_of(k, -1);
  for (std::size_t c0 = 0; c0 < k; ++c0) {
    if (orbit_of[c0] >= 0) continue;
    Orbit o;
    o.rep = static_cast<std::uint32_t>(c0);
    int id = static_cast<int>(orbits.size());
    for (std::size_t zi = 0; zi < nz; ++zi) {
      std::uint32_t c = cp.class_of[g.mul(z.elements[zi], cp.reps[c0])];
      if (c == c0) o.stabilizer.push_back(static_cast<std::uint32_t>(zi));
      if (orbit_of[c] < 0) {
        orbit_of[c] = id;
        o.members.push_back({c, static_cast<std::uint32_t>(zi)});
      }
    }
    orbits.push_back(std::move(o));
  }

  std::vector<std::uint32_t> z_of_class(k, 0);
  for (const auto& o : orbits)
    for (auto [c, zi] : o.members) z_of_class[c] = zi;

  std::vector<std::uint32_t> noncentral;
  for (std::size_t c = 0; c < k; ++c)
    if (cp.sizes[c] > 1) noncentral.push_back(static_cast<std::uint32_t>(c));
  std::stable_sort(noncentral.begin(), noncentral.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return cp.sizes[a] < cp.sizes[b]; });

  // rows[(j, orbit)] = sparse row a_{j, rep(orbit), *}.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::pair<std::uint32_t, u64>>> rows;
  std::vector<u64> cnt(k, 0);
  auto row = [&](std::uint32_t j, std::uint32_t ob) -> const std::vector<std::pair<std::uint32_t, u64>>& {
    auto key = std::make_pair(j, ob);
    auto it = rows.find(key);
    if (it != rows.end()) return it->second;
    std::uint32_t i = orbits[ob].rep;
    std::vector<std::uint32_t> touched;
    for (Elem x : cp.members[j]) {
      std::uint32_t c = cp.class_of[g.mul(x, cp.reps[i])];
      if (!cnt[c]++) touched.push_back(c);
    }
    std::vector<std::pair<std::uint32_t, u64>> r;
    for (std::uint32_t c : touched) {
      u64 num = cnt[c] * cp.sizes[i];
      if (num % cp.sizes[c]) throw StructureError("class multiplication coefficient is not integral");
      r.push_back({c, num / cp.sizes[c]});
      cnt[c] = 0;
    }
    return rows.emplace(key, std::move(r)).first->second;
  };

  // Enumerate central characters nu by tuples over the cyclic factors of Z.
  std::size_t nf = dec.orders.size();
  std::vector<u64> tup(nf, 0);
  std::vector<u64> inv_size(k);
  for (std::size_t c = 0; c < k; ++c) inv_size[c] = f.inv(cp.sizes[c] % ell);
  const std::size_t id_orbit = static_cast<std::size_t>(orbit_of[0]);

  while (true) {
    std::vector<std::uint32_t> ez(nz);
    for (std::size_t zi = 0; zi < nz; ++zi) {
      u64 e = 0;
      for (std::size_t i = 0; i < nf; ++i) e += (m / dec.orders[i]) * tup[i] * zc[zi][i];
      ez[zi] = static_cast<std::uint32_t>(e % m);
    }
    std::vector<std::uint32_t> central(nf);
    for (std::size_t i = 0; i < nf; ++i) central[i] = static_cast<std::uint32_t>((m / dec.orders[i]) * tup[i] % m);

    std::vector<std::uint32_t> supp;
    std::vector<int> pos(orbits.size(), -1);
    for (std::size_t ob = 0; ob < orbits.size(); ++ob) {
      bool ok = true;
      for (auto zi : orbits[ob].stabilizer)
        if (ez[zi]) ok = false;
      if (ok) {
        pos[ob] = static_cast<int>(supp.size());
        supp.push_back(static_cast<std::uint32_t>(ob));
      }
    }
    const std::size_t d = supp.size();
    const std::size_t p0 = static_cast<std::size_t>(pos[id_orbit]);

    auto tmatrix = [&](std::uint32_t j) {
      Mat tm(d, Vec(d, 0));
      for (std::size_t a = 0; a < d; ++a) {
        for (auto [c, coef] : row(j, supp[a])) {
          int b = pos[orbit_of[c]];
          if (b < 0) continue;
          tm[a][b] = f.add(tm[a][b], f.mul(coef % ell, wpow[ez[z_of_class[c]]]));
        }
      }
      return tm;
    };

    std::vector<Mat> spaces;
    {
      Mat idm(d, Vec(d, 0));
      for (std::size_t a = 0; a < d; ++a) idm[a][a] = 1;
      spaces.push_back(std::move(idm));
    }
    for (std::size_t jj = 0; jj < noncentral.size(); ++jj) {
      bool all_one = true;
      for (auto& s : spaces)
        if (s.size() > 1) all_one = false;
      if (all_one) break;
      Mat tm = tmatrix(noncentral[jj]);
      std::vector<Mat> next;
      for (auto& s : spaces) {
        if (s.size() == 1) {
          next.push_back(std::move(s));
          continue;
        }
        auto piv = rref(s, f);
        std::size_t dim = s.size();
        Mat mm(dim, Vec(dim, 0));
        for (std::size_t c = 0; c < dim; ++c)
          for (std::size_t r = 0; r < dim; ++r) {
            u64 acc = 0;
            const Vec& trow = tm[piv[r]];
            const Vec& sc = s[c];
            for (std::size_t b = 0; b < d; ++b) acc += trow[b] * sc[b];
            mm[r][c] = acc % ell;
          }
        auto ev = roots(charpoly(mm, f), f);
        if (ev.size() <= 1) {
          next.push_back(std::move(s));
          continue;
        }
        std::size_t total = 0;
        for (u64 lam : ev) {
          Mat shifted = mm;
          for (std::size_t r = 0; r < dim; ++r) shifted[r][r] = f.sub(shifted[r][r], lam);
          Mat ns = nullspace(shifted, f);
          Mat sub;
          for (auto& cvec : ns) {
            Vec v(d, 0);
            for (std::size_t c = 0; c < dim; ++c)
              if (cvec[c])
                for (std::size_t b = 0; b < d; ++b) v[b] = (v[b] + cvec[c] * s[c][b]) % ell;
            sub.push_back(std::move(v));
          }
          rref(sub, f);
          total += sub.size();
          next.push_back(std::move(sub));
        }
        if (total != dim) throw StructureError("class matrix is not diagonalizable over the chosen prime");
      }
      spaces = std::move(next);
    }
    for (auto& s : spaces)
      if (s.size() != 1) throw StructureError("common eigenspaces did not split to dimension one");

    for (auto& s : spaces) {
      Vec c = s[0];
      if (c[p0] == 0) throw StructureError("eigenvector vanishes at the identity class");
      u64 iv = f.inv(c[p0]);
      for (auto& x : c) x = f.mul(x, iv);
      Vec omega(k, 0);
      for (std::size_t b = 0; b < d; ++b)
        for (auto [cls, zi] : orbits[supp[b]].members) omega[cls] = f.mul(c[b], wpow[ez[zi]]);
      u64 ssum = 0;
      for (std::size_t cl = 0; cl < k; ++cl)
        if (omega[cl]) ssum = f.add(ssum, f.mul(f.mul(omega[cl], omega[t.inverse_class[cl]]), inv_size[cl]));
      if (ssum == 0) throw StructureError("degenerate eigenvector norm");
      u64 dsq = f.mul(order % ell, f.inv(ssum));
      u64 deg = 0;
      for (u64 cand = 1; cand * cand <= order; ++cand)
        if (order % cand == 0 && cand * cand % ell == dsq) {
          deg = cand;
          break;
        }
      if (!deg) throw StructureError("no admissible degree for an eigenvector");
      Vec val(k);
      for (std::size_t cl = 0; cl < k; ++cl) val[cl] = f.mul(f.mul(omega[cl], deg % ell), inv_size[cl]);

      Character ch;
      ch.degree = deg;
      ch.central = central;
      ch.values.assign(k, Cyclotomic(t.conductor));
      for (std::size_t b = 0; b < d; ++b) {
        const Orbit& ob = orbits[supp[b]];
        std::uint32_t c0 = ob.rep;
        u64 o = t.class_orders[c0];
        u64 step = m / o;
        u64 inv_o = f.inv(o % ell);
        std::vector<std::int64_t> counts(m, 0);
        u64 total = 0;
        for (u64 sft = 0; sft < o; ++sft) {
          u64 acc = 0;
          for (u64 tt = 0; tt < o; ++tt)
            acc += val[t.power_classes[c0][tt]] * wpow[(m - step * ((sft * tt) % o)) % m];
          u64 mu = f.mul(acc % ell, inv_o);
          if (mu > deg) throw StructureError("eigenvalue multiplicity out of range in lift");
          counts[step * sft] = static_cast<std::int64_t>(mu);
          total += mu;
        }
        if (total != deg) throw StructureError("eigenvalue multiplicities do not sum to the degree");
        Cyclotomic v0 = Cyclotomic::from_exponent_counts(t.conductor, counts);
        for (auto [cls, zi] : ob.members) ch.values[cls] = ez[zi] ? v0.times_root(ez[zi]) : v0;
      }
      t.irr.push_back(std::move(ch));
    }

    std::size_t i = 0;
    while (i < nf && ++tup[i] == dec.orders[i]) tup[i++] = 0;
    if (i == nf) break;
  }

  if (t.irr.size() != k) throw StructureError("number of characters differs from the class count");
  std::sort(t.irr.begin(), t.irr.end(), [](const Character& a, const Character& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return std::lexicographical_compare(a.values.begin(), a.values.end(), b.values.begin(),
                                        b.values.end());
  });
  return t;
}

std::vector<std::vector<Cyclotomic>> restrict_fusion(const CharacterTable& t, const Subgroup& s) {
  const Group& g = *t.group;
  if (s.parent && s.parent.get() != t.group.get())
    throw InputError("subgroup belongs to a different group");
  auto regen = g.subgroup(s.gens);
  if (regen.elements != s.elements) throw InputError("element set is not the subgroup it claims to be");
  std::vector<std::vector<Cyclotomic>> out(t.size());
  for (std::size_t c = 0; c < t.size(); ++c)
    for (Elem x : s.elements) out[c].push_back(t.value(c, x));
  return out;
}

namespace {

// sum over classes of weight * a * conj(b), accumulated by exponent of zeta_m.
struct Accumulator {
  std::uint32_t m;
  std::vector<__int128> counts;
  explicit Accumulator(std::uint32_t n) : m(n), counts(n, 0) {}
  void add(const Cyclotomic& a, const Cyclotomic& b, std::int64_t weight) {
    if (a.is_zero() || b.is_zero()) return;
    if (!a.is_small() || !b.is_small()) {
      Cyclotomic prod = (a * b.conjugate()).scaled(weight);
      for (std::size_t i = 0; i < prod.length(); ++i)
        counts[i] += static_cast<__int128>(static_cast<long long>(prod.coefficient(i)));
      return;
    }
    const auto& x = a.small_coefficients();
    const auto& y = b.small_coefficients();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!x[i]) continue;
      __int128 wi = static_cast<__int128>(x[i]) * weight;
      for (std::size_t j = 0; j < y.size(); ++j)
        if (y[j]) counts[(i + m - j) % m] += wi * y[j];
    }
  }
  Cyclotomic value() const {
    std::vector<BigInt> v(m);
    for (std::size_t i = 0; i < m; ++i) {
      __int128 c = counts[i];
      bool neg = c < 0;
      unsigned __int128 u = neg ? static_cast<unsigned __int128>(-c) : static_cast<unsigned __int128>(c);
      BigInt b = static_cast<std::uint64_t>(u >> 64);
      b <<= 64;
      b += static_cast<std::uint64_t>(u);
      v[i] = neg ? BigInt(-b) : b;
    }
    return Cyclotomic::from_coefficients(m, std::move(v));
  }
};

}  // namespace

OrthogonalityReport verify_orthogonality(const CharacterTable& t, std::size_t direct_limit) {
  OrthogonalityReport rep;
  const Group& g = *t.group;
  const auto& cp = t.classes();
  const std::size_t k = cp.count();
  const std::uint32_t m = t.conductor;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    if (rep.failures.size() < 20) rep.failures.push_back(s);
  };
  if (t.size() != k) fail("character count differs from class count");
  BigInt sq = 0;
  for (std::size_t c = 0; c < t.size(); ++c) {
    const auto& ch = t.irr[c];
    sq += BigInt(ch.degree) * ch.degree;
    if (g.order() % ch.degree) fail("degree does not divide the group order");
    if (!(ch.values[0] == Cyclotomic::integer(m, static_cast<std::int64_t>(ch.degree))))
      fail("value at the identity differs from the degree");
  }
  if (sq != BigInt(g.order())) fail("sum of squared degrees differs from the group order");

  const auto& z = g.center();
  const auto& dec = t.center;
  // Transformation law under the center on the decomposition generators.
  for (std::size_t c = 0; c < t.size(); ++c)
    for (std::size_t i = 0; i < dec.generators.size(); ++i)
      for (std::size_t cl = 0; cl < k; ++cl) {
        std::uint32_t moved = cp.class_of[g.mul(dec.generators[i], cp.reps[cl])];
        if (!(t.irr[c].values[moved] == t.irr[c].values[cl].times_root(t.irr[c].central[i]))) {
          fail("central transformation law fails for character " + std::to_string(c));
          cl = k;
        }
      }

  Cyclotomic order_val = Cyclotomic::integer(m, static_cast<std::int64_t>(g.order()));
  Cyclotomic zero(m);
  bool direct = k <= direct_limit;
  rep.exhaustive = direct;
  if (direct) {
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a; b < k; ++b) {
        Accumulator acc(m);
        for (std::size_t cl = 0; cl < k; ++cl)
          acc.add(t.irr[a].values[cl], t.irr[b].values[cl], cp.sizes[cl]);
        ++rep.row_pairs;
        if (!(acc.value() == (a == b ? order_val : zero)))
          fail("row orthogonality fails for (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
  } else {
    // With the transformation law in place, rows with different central
    // characters are orthogonal and each Z-orbit of classes contributes
    // |orbit| times its representative term.
    std::vector<int> seen(k, 0);
    std::vector<std::pair<std::uint32_t, std::int64_t>> reps;
    for (std::size_t c0 = 0; c0 < k; ++c0) {
      if (seen[c0]) continue;
      std::int64_t n_orbit = 0;
      for (Elem zz : z.elements) {
        std::uint32_t c = cp.class_of[g.mul(zz, cp.reps[c0])];
        if (!seen[c]) {
          seen[c] = 1;
          ++n_orbit;
        }
      }
      reps.push_back({static_cast<std::uint32_t>(c0), n_orbit * cp.sizes[c0]});
    }
    std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> blocks;
    for (std::size_t c = 0; c < t.size(); ++c) blocks[t.irr[c].central].push_back(c);
    for (auto& [key, members] : blocks)
      for (std::size_t x = 0; x < members.size(); ++x)
        for (std::size_t y = x; y < members.size(); ++y) {
          Accumulator acc(m);
          for (auto [cl, wgt] : reps) acc.add(t.irr[members[x]].values[cl], t.irr[members[y]].values[cl], wgt);
          ++rep.row_pairs;
          if (!(acc.value() == (x == y ? order_val : zero)))
            fail("row orthogonality fails for (" + std::to_string(members[x]) + "," +
                 std::to_string(members[y]) + ")");
        }
  }

  auto column = [&](std::size_t a, std::size_t b) {
    Accumulator acc(m);
    for (std::size_t c = 0; c < t.size(); ++c) acc.add(t.irr[c].values[a], t.irr[c].values[b], 1);
    ++rep.column_pairs;
    Cyclotomic expect = a == b ? Cyclotomic::integer(m, static_cast<std::int64_t>(g.order() / cp.sizes[a])) : zero;
    if (!(acc.value() == expect))
      fail("column orthogonality fails for (" + std::to_string(a) + "," + std::to_string(b) + ")");
  };
  if (direct) {
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a; b < k; ++b) column(a, b);
  } else {
    for (std::size_t a = 0; a < k; ++a) column(a, a);
    std::size_t samples = 1000;
    std::uint64_t state = 12345;
    for (std::size_t s = 0; s < samples; ++s) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      std::size_t a = static_cast<std::size_t>((state >> 33) % k);
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      std::size_t b = static_cast<std::size_t>((state >> 33) % k);
      if (a != b) column(a, b);
    }
  }
  return rep;
}

std::string table_to_csv(const CharacterTable& t) {
  const auto& cp = t.classes();
  const auto& pres = t.group->presentation();
  std::ostringstream o;
  o << "character,degree";
  for (std::size_t c = 0; c < cp.count(); ++c)
    o << ",\"" << word_to_text(pres, t.group->decode(cp.reps[c])) << "\"";
  o << "\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    o << "chi" << i + 1 << "," << t.irr[i].degree;
    for (const auto& v : t.irr[i].values) o << ",\"" << v.to_string() << "\"";
    o << "\n";
  }
  return o.str();
}

std::string table_to_json(const CharacterTable& t) {
  const auto& cp = t.classes();
  const auto& pres = t.group->presentation();
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["group"] = pres.name;
  j["order"] = t.group->order();
  j["conductor"] = t.conductor;
  j["prime"] = t.prime;
  auto classes = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < cp.count(); ++c)
    classes.push_back({{"representative", word_to_text(pres, t.group->decode(cp.reps[c]))},
                       {"size", cp.sizes[c]},
                       {"element_order", t.class_orders[c]}});
  j["classes"] = classes;
  auto chars = nlohmann::ordered_json::array();
  for (const auto& ch : t.irr) {
    auto vals = nlohmann::ordered_json::array();
    for (const auto& v : ch.values) vals.push_back(v.to_string());
    chars.push_back({{"degree", ch.degree}, {"values", vals}});
  }
  j["characters"] = chars;
  return j.dump(2);
}

}  // namespace projembed
