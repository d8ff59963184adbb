#include "projembed/presentation.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "projembed/collector.hpp"
#include "projembed/errors.hpp"

namespace projembed {

std::uint64_t PcPresentation::order() const {
  std::uint64_t o = 1;
  for (auto e : rel_orders) o *= e;
  return o;
}

int PcPresentation::index_of(const std::string& gen) const {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i] == gen) return static_cast<int>(i);
  return -1;
}

NormalWord PcPresentation::generator_word(std::size_t i) const {
  NormalWord w(gens.size(), 0);
  w[i] = 1;
  return w;
}

bool PcPresentation::is_trivial_conj(std::size_t j, std::size_t i) const {
  return conj_rels[j][i] == generator_word(j);
}

PcPresentation PcPresentation::free_abelian_like(std::string name,
                                                 std::vector<std::string> gens,
                                                 std::vector<std::uint32_t> orders) {
  PcPresentation p;
  p.name = std::move(name);
  p.gens = std::move(gens);
  p.rel_orders = std::move(orders);
  std::size_t n = p.gens.size();
  p.power_rels.assign(n, NormalWord(n, 0));
  p.conj_rels.assign(n, std::vector<NormalWord>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) p.conj_rels[j][i] = p.generator_word(j);
  return p;
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t line;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, pos + 1); }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' ||
                              s[pos] == '(' || s[pos] == ')' || s[pos] == '.' || s[pos] == '-' ||
                              s[pos] == '+'))
      ++pos;
    if (start == pos) fail("expected identifier");
    return s.substr(start, pos - start);
  }
  std::string symbol() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected generator name");
    if (std::isdigit(static_cast<unsigned char>(s[start]))) {
      pos = start;
      fail("generator names must not start with a digit");
    }
    return s.substr(start, pos - start);
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (digits == pos) {
      pos = start;
      fail("expected integer");
    }
    try {
      return std::stoll(s.substr(start, pos - start));
    } catch (...) {
      pos = start;
      fail("integer out of range");
    }
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
};

struct Parser {
  ParseOptions opts;
  PcPresentation p;
  bool have_header = false;
  bool have_gens = false;
  bool ended = false;
  std::vector<bool> ord_set;
  std::vector<bool> pow_set;
  std::set<std::pair<std::size_t, std::size_t>> rel_set;
  std::map<std::pair<std::size_t, std::size_t>, NormalWord> comms;
  std::size_t ord_line = 0;
  std::optional<std::vector<std::string>> kernel;
  std::optional<std::string> quotient;

  std::size_t gen_index(Cursor& c, const std::string& name, std::size_t at) {
    int k = p.index_of(name);
    if (k < 0) {
      c.pos = at;
      c.fail("unknown generator '" + name + "'");
    }
    return static_cast<std::size_t>(k);
  }

  void require_orders(Cursor& c) {
    if (!have_gens) c.fail("'gen' must come first");
    for (std::size_t i = 0; i < p.size(); ++i)
      if (!ord_set[i]) c.fail("no relative order given for '" + p.gens[i] + "'");
  }

  // Word with letters strictly after generator `after`, in increasing order.
  NormalWord word(Cursor& c, std::size_t after) {
    NormalWord w(p.size(), 0);
    c.skip_ws();
    if (c.pos < c.s.size() && c.s[c.pos] == '1') {
      std::size_t save = c.pos;
      ++c.pos;
      if (c.done()) return w;
      c.pos = save;
    }
    int last = -1;
    do {
      c.skip_ws();
      std::size_t at = c.pos;
      std::string g = c.symbol();
      std::size_t k = gen_index(c, g, at);
      long long e = 1;
      if (c.accept('^')) e = c.integer();
      if (k <= after) {
        c.pos = at;
        c.fail("ill-ordered relation: '" + g + "' is not a later generator");
      }
      if (static_cast<int>(k) <= last) {
        c.pos = at;
        c.fail("word not in normal form: generators must appear in increasing order");
      }
      if (e < 1 || e >= static_cast<long long>(p.rel_orders[k])) {
        c.pos = at;
        c.fail("exponent out of range for '" + g + "'");
      }
      w[k] = static_cast<std::uint32_t>(e);
      last = static_cast<int>(k);
    } while (c.accept('*'));
    if (!c.done()) c.fail("unexpected trailing input");
    return w;
  }

  void statement(const std::string& text, std::size_t line) {
    Cursor c{text, line};
    if (c.done()) return;
    std::size_t kw_at = c.pos;
    std::string kw = c.symbol();
    auto kw_fail = [&](const std::string& msg) {
      c.pos = kw_at;
      c.fail(msg);
    };
    if (ended) {
      if (kw == "kernel") {
        if (kernel) kw_fail("duplicate 'kernel'");
        std::vector<std::string> ks;
        while (!c.done()) {
          std::size_t at = c.pos;
          std::string g = c.symbol();
          gen_index(c, g, at);
          ks.push_back(g);
        }
        if (ks.empty()) kw_fail("'kernel' needs at least one generator");
        kernel = ks;
      } else if (kw == "quotient") {
        if (quotient) kw_fail("duplicate 'quotient'");
        quotient = c.ident();
        if (!c.done()) c.fail("unexpected trailing input");
      } else {
        kw_fail("unexpected '" + kw + "' after 'end'");
      }
      return;
    }
    if (!have_header) {
      if (kw != "pcgroup") kw_fail("expected 'pcgroup NAME'");
      p.name = c.ident();
      if (!c.done()) c.fail("unexpected trailing input");
      have_header = true;
      return;
    }
    if (kw == "gen") {
      if (have_gens) kw_fail("duplicate 'gen'");
      while (!c.done()) {
        std::size_t at = c.pos;
        std::string g = c.symbol();
        if (p.index_of(g) >= 0) {
          c.pos = at;
          c.fail("duplicate generator '" + g + "'");
        }
        p.gens.push_back(g);
      }
      std::size_t n = p.size();
      p.rel_orders.assign(n, 0);
      p.power_rels.assign(n, NormalWord(n, 0));
      p.conj_rels.assign(n, std::vector<NormalWord>(n));
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) p.conj_rels[j][i] = p.generator_word(j);
      ord_set.assign(n, false);
      pow_set.assign(n, false);
      have_gens = true;
      return;
    }
    if (kw == "ord") {
      if (!have_gens) kw_fail("'gen' must come first");
      ord_line = line;
      while (!c.done()) {
        std::size_t at = c.pos;
        std::string g = c.symbol();
        std::size_t k = gen_index(c, g, at);
        c.expect('=');
        std::size_t vat = c.pos;
        long long e = c.integer();
        if (ord_set[k]) {
          c.pos = at;
          c.fail("duplicate relative order for '" + g + "'");
        }
        if (e < 2 || e > 0x7fffffffLL) {
          c.pos = vat;
          c.fail("relative order must be at least 2");
        }
        p.rel_orders[k] = static_cast<std::uint32_t>(e);
        ord_set[k] = true;
      }
      bool all = true;
      std::uint64_t order = 1;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (!ord_set[i]) {
          all = false;
          continue;
        }
        order *= p.rel_orders[i];
        if (order > opts.max_order) {
          c.pos = kw_at;
          c.fail("group order exceeds configured bound " + std::to_string(opts.max_order));
        }
      }
      (void)all;
      return;
    }
    if (kw == "pow") {
      require_orders(c);
      std::size_t at = c.pos;
      std::string g = c.symbol();
      std::size_t i = gen_index(c, g, at);
      c.expect('=');
      if (pow_set[i]) kw_fail("duplicate power relation for '" + g + "'");
      p.power_rels[i] = word(c, i);
      pow_set[i] = true;
      return;
    }
    if (kw == "conj" || kw == "comm") {
      require_orders(c);
      std::size_t jat, iat;
      std::string gj, gi;
      if (kw == "conj") {
        jat = c.pos;
        gj = c.symbol();
        c.expect('^');
        iat = c.pos;
        gi = c.symbol();
      } else {
        c.expect('[');
        jat = c.pos;
        gj = c.symbol();
        c.expect(',');
        iat = c.pos;
        gi = c.symbol();
        c.expect(']');
      }
      std::size_t j = gen_index(c, gj, jat);
      std::size_t i = gen_index(c, gi, iat);
      c.expect('=');
      if (j <= i) {
        c.pos = jat;
        c.fail("ill-ordered relation: '" + gj + "' must come after '" + gi + "'");
      }
      if (!rel_set.insert({j, i}).second) kw_fail("duplicate relation for pair (" + gj + "," + gi + ")");
      NormalWord w = word(c, i);
      if (kw == "conj")
        p.conj_rels[j][i] = w;
      else
        comms[{j, i}] = w;
      return;
    }
    if (kw == "end") {
      require_orders(c);
      if (!c.done()) c.fail("unexpected trailing input");
      ended = true;
      return;
    }
    kw_fail("unknown statement '" + kw + "'");
  }

  // Rewrite [g_j, g_i] = w as g_j^{g_i} = g_j * w, collecting in the
  // subgroup on generators after i, whose relations are already final.
  void expand_commutators() {
    if (comms.empty()) return;
    Collector coll(p);
    for (std::size_t i = p.size(); i-- > 0;) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        auto it = comms.find({j, i});
        if (it == comms.end()) continue;
        std::uint64_t x = coll.multiply(coll.generator(j), coll.encode(it->second));
        p.conj_rels[j][i] = coll.decode(x);
      }
      coll.refresh(i);
    }
  }
};

Parser run_parser(const std::string& text, const ParseOptions& opts) {
  Parser ps;
  ps.opts = opts;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    ps.statement(raw, line);
  }
  if (!ps.have_header) throw ParseError("missing 'pcgroup' header", line + 1, 1);
  if (!ps.ended) throw ParseError("missing 'end'", line + 1, 1);
  ps.expand_commutators();
  return ps;
}

}  // namespace

PcPresentation parse_presentation(const std::string& text, const ParseOptions& opts) {
  Parser ps = run_parser(text, opts);
  if (ps.kernel || ps.quotient)
    throw ParseError("covering data in a plain presentation", 1, 1);
  return std::move(ps.p);
}

CoveringSpec parse_covering(const std::string& text, const ParseOptions& opts) {
  Parser ps = run_parser(text, opts);
  if (!ps.kernel) throw ParseError("covering needs a 'kernel' line", 1, 1);
  const auto& ks = *ps.kernel;
  std::size_t n = ps.p.size();
  std::size_t start = n - ks.size();
  if (ks.size() > n) throw ParseError("kernel lists too many generators", 1, 1);
  for (std::size_t t = 0; t < ks.size(); ++t) {
    if (ps.p.index_of(ks[t]) != static_cast<int>(start + t))
      throw InputError("kernel must be a pc-chain suffix: '" + ks[t] + "' out of place");
  }
  CoveringSpec spec;
  spec.gstar = std::move(ps.p);
  spec.kernel_gens = ks;
  spec.label = ps.quotient ? *ps.quotient : spec.gstar.name + "_quotient";
  return spec;
}

std::string word_to_text(const PcPresentation& p, const NormalWord& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!w[k]) continue;
    if (!out.empty()) out += '*';
    out += p.gens[k];
    if (w[k] != 1) out += '^' + std::to_string(w[k]);
  }
  return out.empty() ? "1" : out;
}

std::string to_text(const PcPresentation& p) {
  std::ostringstream o;
  o << "pcgroup " << p.name << "\n";
  o << "gen";
  for (auto& g : p.gens) o << ' ' << g;
  o << "\nord";
  for (std::size_t i = 0; i < p.size(); ++i) o << ' ' << p.gens[i] << '=' << p.rel_orders[i];
  o << "\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool trivial = true;
    for (auto a : p.power_rels[i]) trivial = trivial && a == 0;
    if (!trivial) o << "pow " << p.gens[i] << " = " << word_to_text(p, p.power_rels[i]) << "\n";
  }
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!p.is_trivial_conj(j, i))
        o << "conj " << p.gens[j] << '^' << p.gens[i] << " = " << word_to_text(p, p.conj_rels[j][i])
          << "\n";
  o << "end\n";
  return o.str();
}

std::string to_text(const CoveringSpec& c) {
  std::string s = to_text(c.gstar);
  s += "kernel";
  for (auto& k : c.kernel_gens) s += ' ' + k;
  s += "\nquotient " + c.label + "\n";
  return s;
}

std::vector<std::string> ConsistencyReport::failures() const {
  std::vector<std::string> out;
  for (auto& t : tests)
    if (!t.passed) out.push_back(t.label);
  return out;
}

ConsistencyReport check_consistency(const PcPresentation& p) {
  ConsistencyReport rep;
  Collector c(p);
  std::size_t n = p.size();
  auto g = [&](std::size_t i) { return c.generator(i); };
  auto record = [&](std::string label, std::uint64_t lhs, std::uint64_t rhs) {
    bool ok = lhs == rhs;
    rep.tests.push_back({std::move(label), ok});
    rep.consistent = rep.consistent && ok;
  };
  auto nm = [&](std::size_t i) { return p.gens[i]; };
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        std::uint64_t lhs = c.mul_gen(c.mul_gen(g(k), j), i);
        std::uint64_t rhs = c.multiply(g(k), c.mul_gen(g(j), i));
        record("(" + nm(k) + " " + nm(j) + ") " + nm(i) + " = " + nm(k) + " (" + nm(j) + " " +
                   nm(i) + ")",
               lhs, rhs);
      }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      std::uint64_t ej = p.rel_orders[j], ei = p.rel_orders[i];
      std::uint64_t lhs = c.mul_gen(c.gen_power(j, ej), i);
      std::uint64_t rhs = c.multiply(c.gen_power(j, ej - 1), c.mul_gen(g(j), i));
      record("(" + nm(j) + "^" + std::to_string(ej) + ") " + nm(i) + " = " + nm(j) + "^" +
                 std::to_string(ej - 1) + " (" + nm(j) + " " + nm(i) + ")",
             lhs, rhs);
      lhs = c.multiply(g(j), c.gen_power(i, ei));
      rhs = c.multiply(c.mul_gen(g(j), i), c.gen_power(i, ei - 1));
      record(nm(j) + " (" + nm(i) + "^" + std::to_string(ei) + ") = (" + nm(j) + " " + nm(i) +
                 ") " + nm(i) + "^" + std::to_string(ei - 1),
             lhs, rhs);
    }
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t ei = p.rel_orders[i];
    std::uint64_t lhs = c.mul_gen(c.gen_power(i, ei), i);
    std::uint64_t rhs = c.multiply(g(i), c.gen_power(i, ei));
    record("(" + nm(i) + "^" + std::to_string(ei) + ") " + nm(i) + " = " + nm(i) + " (" + nm(i) +
               "^" + std::to_string(ei) + ")",
           lhs, rhs);
  }
  rep.order = rep.consistent ? p.order() : 0;
  return rep;
}

void require_consistent(const PcPresentation& p) {
  auto rep = check_consistency(p);
  if (!rep.consistent)
    throw StructureError("presentation " + p.name + " is inconsistent: " + rep.failures().front());
}

}  // namespace projembed
