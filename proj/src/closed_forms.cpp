#include "projembed/closed_forms.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "projembed/errors.hpp"
#include "projembed/smith.hpp"

namespace projembed {

namespace {

std::uint64_t isqrt_exact(std::uint64_t n) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) throw std::logic_error("index of the regular subgroup is not a square");
  return r;
}

// Prime-power factors of each cyclic order, keyed by prime.
std::map<std::uint64_t, std::vector<std::uint64_t>> primary_parts(const std::vector<std::uint64_t>& orders) {
  std::map<std::uint64_t, std::vector<std::uint64_t>> parts;
  for (auto n : orders) {
    if (n == 0) throw InputError("cyclic factor orders must be positive");
    for (std::uint64_t q = 2; n > 1; ++q) {
      if (q * q > n) q = n;
      if (n % q) continue;
      std::uint64_t pp = 1;
      while (n % q == 0) {
        n /= q;
        pp *= q;
      }
      parts[q].push_back(pp);
    }
  }
  return parts;
}

std::vector<std::uint64_t> orders_of(const AbelianInvariants& inv) {
  inv.validate();
  std::vector<std::uint64_t> o;
  for (auto k : inv.exponents) o.push_back(ipow(inv.p, k));
  return o;
}

}  // namespace

RegularSubgroup regular_subgroup(const AlternatingForm& c) {
  if (!c.is_alternating()) throw InputError("form is not alternating");
  const std::size_t n = c.size();
  const std::uint64_t m = c.modulus();
  AlternatingForm r = c.reduced();
  RegularSubgroup out;
  if (n == 0) return out;
  IntMatrix mat(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mat[i][j] = r.c[i][j];
  SmithForm s = smith_normal_form(mat);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt d = i < s.d.size() ? s.d[i] : BigInt(0);
    if (d < 0) d = -d;
    std::uint64_t g = d == 0 ? m : std::gcd(static_cast<std::uint64_t>(d % m), m);
    if (g == 0) g = m;
    out.kernel_size *= g;
    if (g == 1) continue;
    std::uint64_t step = m / g;
    std::vector<std::uint64_t> b(n);
    for (std::size_t row = 0; row < n; ++row) {
      BigInt v = (s.V[row][i] * step) % m;
      if (v < 0) v += m;
      b[row] = static_cast<std::uint64_t>(v);
    }
    out.generators.push_back(std::move(b));
  }
  return out;
}

std::uint64_t irr_degree_abelian(const AlternatingForm& c) {
  std::uint64_t total = ipow(c.modulus(), static_cast<std::uint32_t>(c.size()));
  return isqrt_exact(total / regular_subgroup(c).kernel_size);
}

std::uint64_t tau_abelian(const std::vector<std::uint64_t>& cyclic_orders) {
  auto parts = primary_parts(cyclic_orders);
  std::size_t rank = 0;
  for (auto& [q, v] : parts) rank = std::max(rank, v.size());
  if (rank == 0) return 1;
  if (parts.size() == 1 && parts.begin()->first == 2) {
    auto& v = parts.begin()->second;
    bool elementary = std::all_of(v.begin(), v.end(), [](auto x) { return x == 2; });
    if (elementary && (rank == 2 || rank == 4)) return rank;
  }
  return rank + 1;
}

std::uint64_t tau_abelian(const AbelianInvariants& inv) { return tau_abelian(orders_of(inv)); }

bool is_symmetric_type(const std::vector<std::uint64_t>& cyclic_orders) {
  for (auto& [q, v] : primary_parts(cyclic_orders)) {
    std::map<std::uint64_t, std::size_t> count;
    for (auto x : v) ++count[x];
    for (auto& [x, c] : count)
      if (c % 2) return false;
  }
  return true;
}

std::optional<std::uint64_t> tau_irr_abelian(const std::vector<std::uint64_t>& cyclic_orders) {
  if (!is_symmetric_type(cyclic_orders)) return std::nullopt;
  std::uint64_t order = 1;
  for (auto n : cyclic_orders) order *= n;
  return isqrt_exact(order);
}

std::optional<std::uint64_t> tau_irr_abelian(const AbelianInvariants& inv) {
  return tau_irr_abelian(orders_of(inv));
}

ClosedValues tau_extraspecial(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw InputError("extraspecial groups need a prime p");
  if (n < 2) throw InputError("extraspecial formula needs n >= 2; order p^3 groups are tabulated separately");
  ClosedValues v;
  if (n % 2 == 0)
    v.tau = 2 * ipow(p, n / 2);
  else
    v.tau = ipow(p, (n + 1) / 2) + ipow(p, (n - 1) / 2);
  return v;
}

ClosedValues heisenberg_values(std::uint32_t p, std::uint32_t k, std::uint32_t n) {
  if (!is_prime(p) || p == 2) throw InputError("Heisenberg values need an odd prime p");
  if (k < 1 || n < 1) throw InputError("Heisenberg values need k >= 1 and n >= 1");
  ClosedValues v;
  if (n == 1) {
    v.tau = ipow(p, k);
    v.tau_irr = v.tau;
    return v;
  }
  v.tau = ipow(p, k * (n / 2)) + ipow(p, k * ((n + 1) / 2));
  v.tau_exact = false;
  return v;
}

ProductValues product_rules(const FactorData& h, const FactorData& k) {
  ProductValues out;
  if (k.order == 1 || h.order == 1) {
    const FactorData& f = k.order == 1 ? h : k;
    out.tau = f.tau;
    out.tau_irr = f.tau_irr;
    out.rules.push_back("trivial factor");
    return out;
  }
  bool coprime = std::gcd(h.order, k.order) == 1;
  if (coprime && h.tau_irr && k.tau_irr) {
    out.tau_irr = *h.tau_irr * *k.tau_irr;
    out.rules.push_back("tau_irr multiplicative for coprime orders");
  }
  if (h.tau && k.tau) {
    out.tau_upper = *h.tau * *k.tau;
    out.rules.push_back("tau <= tau(H) tau(K)");
    if (h.trivial_multiplier && k.trivial_multiplier) {
      out.tau_upper = std::min(*out.tau_upper, *h.tau + *k.tau);
      out.rules.push_back("tau <= tau(H) + tau(K) for trivial multipliers");
    }
  }
  return out;
}

std::uint64_t product_tau_irr(const FactorData& h, const FactorData& k) {
  if (!h.tau_irr || !k.tau_irr) throw InputError("tau_irr of the product needs tau_irr of both factors");
  if (std::gcd(h.order, k.order) != 1) throw InputError("tau_irr of the product is exact only for coprime orders");
  return *h.tau_irr * *k.tau_irr;
}

std::uint32_t least_nonresidue(std::uint32_t p) {
  if (!is_prime(p) || p == 2) throw InputError("non-residue needs an odd prime");
  for (std::uint32_t a = 2; a < p; ++a) {
    bool square = false;
    for (std::uint64_t x = 1; x < p && !square; ++x) square = x * x % p == a;
    if (!square) return a;
  }
  throw std::logic_error("no quadratic non-residue");
}

TableId parse_table_id(const std::string& s) {
  if (s == "p3") return TableId::p3;
  if (s == "2to4" || s == "2^4") return TableId::two4;
  if (s == "p4") return TableId::p4;
  if (s == "p5") return TableId::p5;
  throw InputError("unknown table '" + s + "' (expected p3, 2to4, p4 or p5)");
}

std::string table_id_name(TableId t) {
  switch (t) {
    case TableId::p3: return "p3";
    case TableId::two4: return "2to4";
    case TableId::p4: return "p4";
    case TableId::p5: return "p5";
  }
  return "";
}

namespace {

struct RawRow {
  const char* row;
  const char* catalog;
  std::uint32_t r;
  const char* tau;
  const char* tau_irr;
};

// "-", integer, or a p + b, a p^2 + b.
std::optional<std::uint64_t> eval_expr(const std::string& e, std::uint64_t p) {
  if (e == "-") return std::nullopt;
  std::size_t i = 0;
  std::uint64_t coef = 1;
  bool have_coef = false;
  if (std::isdigit(static_cast<unsigned char>(e[0]))) {
    std::size_t used;
    coef = std::stoull(e, &used);
    i = used;
    have_coef = true;
  }
  if (i == e.size()) return coef;
  if (e[i] != 'p') throw std::logic_error("bad expression " + e);
  ++i;
  std::uint64_t v = p;
  if (i < e.size() && e[i] == '^') {
    v = ipow(p, static_cast<std::uint32_t>(e[i + 1] - '0'));
    i += 2;
  }
  v *= have_coef ? coef : 1;
  if (i < e.size()) {
    if (e[i] != '+') throw std::logic_error("bad expression " + e);
    v += std::stoull(e.substr(i + 1));
  }
  return v;
}

const RawRow kP3[] = {
    {"Phi2(21)", "Phi2(21)", 0, "p+1", "-"},
    {"Phi2(1^3)", "Phi2(1^3)", 0, "p", "p"},
    {"Q8", "Q8", 0, "3", "-"},
    {"D8", "D8", 0, "2", "2"},
};

const RawRow k2to4[] = {
    {"3 (Z/2)^2 : Z/4", "G16_3", 0, "4", "4"},
    {"4 Z/4 : Z/4", "G16_4", 0, "4", "-"},
    {"6 Z/8 :5 Z/2", "M16", 0, "3", "-"},
    {"7 D16", "D16", 0, "2", "2"},
    {"8 Z/8 :3 Z/2", "SD16", 0, "3", "-"},
    {"9 Q16", "Q16", 0, "3", "-"},
    {"11 D8 x Z/2", "D8xC2", 0, "4", "4"},
    {"12 Q8 x Z/2", "Q8xC2", 0, "4", "-"},
    {"13 Q8 : Z/2", "Pauli", 0, "3", "-"},
};

const RawRow kP4[] = {
    {"Phi2(211)a", "Phi2(211)a", 0, "p+2", "-"},
    {"Phi2(1^4)", "Phi2(1^4)", 0, "p+2", "p^2"},
    {"Phi2(31)", "Phi2(31)", 0, "p+1", "-"},
    {"Phi2(22)", "Phi2(22)", 0, "p+2", "p^2"},
    {"Phi2(211)b", "Phi2(211)b", 0, "p+1", "-"},
    {"Phi2(211)c", "Phi2(211)c", 0, "p+2", "-"},
    {"Phi3(211)a", "Phi3(211)a", 0, "p+1", "-"},
    {"Phi3(211)b_1", "Phi3(211)b", 1, "p+1", "-"},
    {"Phi3(211)b_nu", "Phi3(211)b", 2, "p+1", "-"},
    {"Phi3(1^4)", "Phi3(1^4)", 0, "p", "p"},
};

const RawRow kP5[] = {
    {"Phi2(311)a", "", 0, "p+2", "-"},
    {"Phi2(221)a", "", 0, "p+3", "-"},
    {"Phi2(221)b", "", 0, "p+2", "-"},
    {"Phi2(2111)a", "", 0, "p+3", "-"},
    {"Phi2(2111)b", "", 0, "p+2", "-"},
    {"Phi2(2111)c", "", 0, "p+3", "-"},
    {"Phi2(2111)d", "", 0, "p+2", "-"},
    {"Phi2(1^5)", "", 0, "p+3", "p^2"},
    {"Phi2(41)", "", 0, "p+1", "-"},
    {"Phi2(32)a_1", "", 0, "p+2", "-"},
    {"Phi2(32)a_2", "", 0, "p+2", "-"},
    {"Phi2(311)b", "", 0, "p+1", "-"},
    {"Phi2(311)c", "", 0, "p+2", "-"},
    {"Phi2(221)c", "Phi2(221)c", 0, "p+2", "p^2"},
    {"Phi2(221)d", "", 0, "p+3", "-"},
    {"Phi3(2111)a", "", 0, "p+2", "-"},
    {"Phi3(2111)b_r", "", 0, "p+2", "-"},
    {"Phi3(1^5)", "", 0, "p+2", "p^2"},
    {"Phi3(311)a", "", 0, "p+1", "-"},
    {"Phi3(311)b_r", "", 0, "p+1", "-"},
    {"Phi3(221)a", "", 0, "p+2", "-"},
    {"Phi3(221)b_r", "", 0, "p+2", "p^2"},
    {"Phi3(2111)c", "", 0, "p+1", "-"},
    {"Phi3(2111)d", "", 0, "p+2", "-"},
    {"Phi3(2111)e", "", 0, "p+2", "-"},
    {"Phi4(221)a", "", 0, "2p", "-"},
    {"Phi4(221)b", "", 0, "2p", "p^2"},
    {"Phi4(221)c", "", 0, "2p", "-"},
    {"Phi4(221)d_r, r != (p-1)/2", "", 0, "2p", "-"},
    {"Phi4(221)d_(p-1)/2", "Phi4(221)d", 0, "2p", "-"},
    {"Phi4(221)e", "", 0, "2p", "-"},
    {"Phi4(221)f_0", "Phi4(221)f0", 0, "2p", "-"},
    {"Phi4(221)f_r", "", 0, "2p", "-"},
    {"Phi4(2111)a", "", 0, "2p", "-"},
    {"Phi4(2111)b", "", 0, "2p", "-"},
    {"Phi4(2111)c", "", 0, "2p", "-"},
    {"Phi4(1^5)", "", 0, "2p", "p^2"},
    {"Phi5(2111)", "Phi5(2111)", 0, "2p", "-"},
    {"Phi5(1^5)", "Phi5(1^5)", 0, "2p", "-"},
    {"Phi6(221)a", "", 0, "2p+1", "-"},
    {"Phi6(221)b_r, r != (p-1)/2", "", 0, "2p+1", "-"},
    {"Phi6(221)b_(p-1)/2", "", 0, "2p+1", "p^2"},
    {"Phi6(221)c_r", "", 0, "2p+1", "-"},
    {"Phi6(221)d_0", "", 0, "2p+1", "p^2"},
    {"Phi6(221)d_r", "", 0, "2p+1", "-"},
    {"Phi6(2111)a", "Phi6(2111)a", 0, "2p+1", "-"},
    {"Phi6(2111)b_1", "", 0, "2p+1", "-"},
    {"Phi6(2111)b_nu", "", 0, "2p+1", "-"},
    {"Phi6(1^5)", "Phi6(1^5)", 0, "2p", "p^2"},
    {"Phi7(2111)a", "", 0, "2p", "-"},
    {"Phi7(2111)b_r", "", 0, "2p", "-"},
    {"Phi7(2111)c", "", 0, "2p", "-"},
    {"Phi7(1^5)", "", 0, "2p", "p^2"},
    {"Phi8(32)", "", 0, "p^2+1", "-"},
    {"Phi9(2111)a", "", 0, "p+1", "-"},
    {"Phi9(2111)b_r", "", 0, "p+1", "-"},
    {"Phi9(1^5)", "Phi9(1^5)", 0, "p", "p"},
    {"Phi10(2111)a_r", "", 0, "p^2+1", "-"},
    {"Phi10(2111)b_r", "", 0, "p^2+1", "-"},
    {"Phi10(1^5)", "Phi10(1^5)", 0, "p^2", "p^2"},
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string opt_text(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace

ExpectedTable table_expected(TableId id, std::uint32_t p) {
  ExpectedTable t;
  t.id = id;
  t.version = "1";
  const RawRow* begin = nullptr;
  const RawRow* end = nullptr;
  switch (id) {
    case TableId::p3:
      if (!is_prime(p)) throw InputError("table p3 needs a prime p");
      begin = std::begin(kP3);
      end = std::end(kP3);
      break;
    case TableId::two4:
      if (p != 0 && p != 2) throw InputError("table 2to4 is defined for p = 2 only");
      p = 2;
      begin = std::begin(k2to4);
      end = std::end(k2to4);
      break;
    case TableId::p4:
      if (!is_prime(p) || p < 3) throw InputError("table p4 needs a prime p >= 3");
      begin = std::begin(kP4);
      end = std::end(kP4);
      break;
    case TableId::p5:
      if (!is_prime(p) || p < 5) throw InputError("table p5 needs a prime p >= 5");
      begin = std::begin(kP5);
      end = std::end(kP5);
      break;
  }
  t.p = p;
  for (auto it = begin; it != end; ++it) {
    std::string name = it->row;
    // Odd-p and p = 2 rows of the p^3 table are disjoint.
    if (id == TableId::p3 && ((p == 2) != (name == "Q8" || name == "D8"))) continue;
    ExpectedRow row;
    row.row = name;
    row.catalog = it->catalog;
    row.r = it->r;
    if (row.r == 2 && p > 2) row.r = least_nonresidue(p);
    row.tau_text = it->tau;
    row.tau_irr_text = it->tau_irr;
    row.tau = eval_expr(row.tau_text, p);
    row.tau_irr = eval_expr(row.tau_irr_text, p);
    if (row.catalog == "Q16") {
      row.printed_tau = 2;
      row.note = "table prints tau = 2; tau(Q_4n) = 3 for every n, used here";
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string ExpectedTable::to_csv() const {
  std::ostringstream o;
  o << "table,version,p,row,catalog,r,tau_expr,tau_irr_expr,tau,tau_irr,printed_tau,note\n";
  for (auto& r : rows)
    o << table_id_name(id) << ',' << version << ',' << p << ',' << csv_field(r.row) << ','
      << csv_field(r.catalog) << ',' << r.r << ',' << r.tau_text << ',' << r.tau_irr_text << ','
      << opt_text(r.tau) << ',' << opt_text(r.tau_irr) << ','
      << (r.printed_tau ? std::to_string(*r.printed_tau) : "") << ',' << csv_field(r.note) << '\n';
  return o.str();
}

}  // namespace projembed
