#include "projembed/cyclotomic.hpp"

#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "projembed/errors.hpp"

namespace projembed {

namespace {

using Poly = std::vector<std::int64_t>;

Poly compute_cyclotomic(std::uint32_t n, std::map<std::uint32_t, Poly>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d.
  Poly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d) continue;
    Poly den = compute_cyclotomic(d, memo);
    std::size_t dd = den.size() - 1;
    Poly q(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
      std::int64_t c = num[k];
      q[k - dd] = c;
      if (c)
        for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
    }
    num = q;
  }
  memo[n] = num;
  return num;
}

struct ConductorData {
  std::uint32_t n = 1;
  std::uint32_t phi = 1;
  Poly cyc;
  std::vector<Poly> roots;
  std::map<Poly, std::uint32_t> root_index;
};

template <class T>
void reduce_in_place(std::vector<T>& a, const ConductorData& cd) {
  std::size_t phi = cd.phi;
  for (std::size_t deg = a.size(); deg-- > phi;) {
    T t = a[deg];
    if (t == 0) continue;
    for (std::size_t i = 0; i <= phi; ++i) a[deg - phi + i] -= t * cd.cyc[i];
  }
  if (a.size() > phi) a.resize(phi);
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::unique_ptr<ConductorData> make_conductor(std::uint32_t n) {
  auto cd = std::make_unique<ConductorData>();
  std::map<std::uint32_t, Poly> memo;
  cd->n = n;
  cd->cyc = compute_cyclotomic(n, memo);
  cd->phi = static_cast<std::uint32_t>(cd->cyc.size() - 1);
  Poly cur{1};
  for (std::uint32_t j = 0; j < n; ++j) {
    cd->roots.push_back(cur);
    cd->root_index.emplace(cur, j);
    Poly next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
    reduce_in_place(next, *cd);
    cur = next;
  }
  return cd;
}

const ConductorData& conductor_data(std::uint32_t n) {
  static std::shared_mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<ConductorData>> cache;
  {
    std::shared_lock lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  auto fresh = make_conductor(n);
  std::unique_lock lock(mu);
  auto [it, inserted] = cache.emplace(n, std::move(fresh));
  return *it->second;
}

bool add_overflow(std::int64_t a, std::int64_t b, std::int64_t& r) { return __builtin_add_overflow(a, b, &r); }
bool mul_overflow(std::int64_t a, std::int64_t b, std::int64_t& r) { return __builtin_mul_overflow(a, b, &r); }

// Reduction of an int64 array; false on overflow.
bool reduce_small(Poly& a, const ConductorData& cd) {
  std::size_t phi = cd.phi;
  for (std::size_t deg = a.size(); deg-- > phi;) {
    std::int64_t t = a[deg];
    if (!t) continue;
    for (std::size_t i = 0; i <= phi; ++i) {
      std::int64_t prod, sum;
      if (mul_overflow(t, cd.cyc[i], prod)) return false;
      if (__builtin_sub_overflow(a[deg - phi + i], prod, &sum)) return false;
      a[deg - phi + i] = sum;
    }
  }
  if (a.size() > phi) a.resize(phi);
  while (!a.empty() && a.back() == 0) a.pop_back();
  return true;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw InputError("conductor must be positive");
  return conductor_data(n).cyc;
}

std::uint32_t euler_phi(std::uint32_t n) {
  if (n == 0) throw InputError("conductor must be positive");
  return conductor_data(n).phi;
}

Cyclotomic::Cyclotomic(std::uint32_t n) : n_(n) {
  if (n == 0) throw InputError("conductor must be positive");
}

Cyclotomic Cyclotomic::integer(std::uint32_t n, std::int64_t v) {
  Cyclotomic c(n);
  if (v) c.s_ = {v};
  return c;
}

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t n, std::int64_t j) {
  Cyclotomic c(n);
  const auto& cd = conductor_data(n);
  std::int64_t m = ((j % static_cast<std::int64_t>(n)) + n) % n;
  c.s_ = cd.roots[static_cast<std::size_t>(m)];
  return c;
}

Cyclotomic Cyclotomic::from_exponent_counts(std::uint32_t n, const std::vector<std::int64_t>& counts) {
  Cyclotomic c(n);
  const auto& cd = conductor_data(n);
  Poly a(counts);
  a.resize(n, 0);
  if (reduce_small(a, cd)) {
    c.s_ = std::move(a);
    return c;
  }
  std::vector<BigInt> b(counts.begin(), counts.end());
  b.resize(n, 0);
  reduce_in_place(b, cd);
  return make_big(n, std::move(b));
}

Cyclotomic Cyclotomic::from_coefficients(std::uint32_t n, std::vector<BigInt> coeffs) {
  const auto& cd = conductor_data(n);
  reduce_in_place(coeffs, cd);
  return make_big(n, std::move(coeffs));
}

Cyclotomic Cyclotomic::make_big(std::uint32_t n, std::vector<BigInt> v) {
  Cyclotomic c(n);
  while (!v.empty() && v.back() == 0) v.pop_back();
  c.big_ = true;
  c.b_ = std::move(v);
  c.demote();
  return c;
}

void Cyclotomic::demote() {
  if (!big_) return;
  const BigInt lo = std::numeric_limits<std::int64_t>::min();
  const BigInt hi = std::numeric_limits<std::int64_t>::max();
  for (const auto& x : b_)
    if (x < lo || x > hi) return;
  s_.clear();
  for (const auto& x : b_) s_.push_back(static_cast<std::int64_t>(x));
  b_.clear();
  big_ = false;
}

std::vector<BigInt> Cyclotomic::big_coeffs() const {
  if (big_) return b_;
  return std::vector<BigInt>(s_.begin(), s_.end());
}

BigInt Cyclotomic::coefficient(std::size_t i) const {
  if (big_) return i < b_.size() ? b_[i] : BigInt(0);
  return i < s_.size() ? BigInt(s_[i]) : BigInt(0);
}

std::vector<BigInt> Cyclotomic::coefficients() const {
  auto v = big_coeffs();
  v.resize(conductor_data(n_).phi, 0);
  return v;
}

const std::vector<std::int64_t>& Cyclotomic::small_coefficients() const {
  if (big_) throw std::logic_error("cyclotomic value does not fit in 64 bits");
  return s_;
}

void Cyclotomic::check_same(const Cyclotomic& o) const {
  if (n_ != o.n_)
    throw InputError("mismatched conductors " + std::to_string(n_) + " and " + std::to_string(o.n_));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  check_same(o);
  if (!big_ && !o.big_) {
    Poly r(std::max(s_.size(), o.s_.size()), 0);
    bool ok = true;
    for (std::size_t i = 0; i < r.size() && ok; ++i) {
      std::int64_t a = i < s_.size() ? s_[i] : 0, b = i < o.s_.size() ? o.s_[i] : 0;
      ok = !add_overflow(a, b, r[i]);
    }
    if (ok) {
      while (!r.empty() && r.back() == 0) r.pop_back();
      Cyclotomic c(n_);
      c.s_ = std::move(r);
      return c;
    }
  }
  auto a = big_coeffs(), b = o.big_coeffs();
  a.resize(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return make_big(n_, std::move(a));
}

Cyclotomic Cyclotomic::operator-() const {
  return scaled(-1);
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::scaled(std::int64_t k) const {
  if (!big_) {
    Poly r(s_.size());
    bool ok = true;
    for (std::size_t i = 0; i < r.size() && ok; ++i) ok = !mul_overflow(s_[i], k, r[i]);
    if (ok) {
      Cyclotomic c(n_);
      if (k) c.s_ = std::move(r);
      return c;
    }
  }
  auto a = big_coeffs();
  for (auto& x : a) x *= k;
  return make_big(n_, std::move(a));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return Cyclotomic(n_);
  const auto& cd = conductor_data(n_);
  if (!big_ && !o.big_) {
    Poly r(s_.size() + o.s_.size() - 1, 0);
    bool ok = true;
    for (std::size_t i = 0; i < s_.size() && ok; ++i) {
      if (!s_[i]) continue;
      for (std::size_t j = 0; j < o.s_.size() && ok; ++j) {
        std::int64_t p;
        ok = !mul_overflow(s_[i], o.s_[j], p) && !add_overflow(r[i + j], p, r[i + j]);
      }
    }
    if (ok && reduce_small(r, cd)) {
      Cyclotomic c(n_);
      c.s_ = std::move(r);
      return c;
    }
  }
  auto a = big_coeffs(), b = o.big_coeffs();
  std::vector<BigInt> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  reduce_in_place(r, cd);
  return make_big(n_, std::move(r));
}

Cyclotomic Cyclotomic::conjugate() const {
  if (is_zero()) return *this;
  const auto& cd = conductor_data(n_);
  if (!big_) {
    Poly r(n_, 0);
    for (std::size_t i = 0; i < s_.size(); ++i) r[(n_ - i) % n_] = s_[i];
    if (reduce_small(r, cd)) {
      Cyclotomic c(n_);
      c.s_ = std::move(r);
      return c;
    }
  }
  auto a = big_coeffs();
  std::vector<BigInt> r(n_, 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[(n_ - i) % n_] = a[i];
  reduce_in_place(r, cd);
  return make_big(n_, std::move(r));
}

Cyclotomic Cyclotomic::times_root(std::int64_t j) const { return *this * root_of_unity(n_, j); }

Cyclotomic Cyclotomic::coerce(std::uint32_t m) const {
  if (m == 0 || m % n_) throw InputError("coercion needs a multiple of the conductor");
  std::uint32_t f = m / n_;
  auto a = big_coeffs();
  std::vector<BigInt> r(static_cast<std::size_t>(a.size()) * f + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i * f] = a[i];
  return from_coefficients(m, std::move(r));
}

std::optional<std::uint32_t> Cyclotomic::as_scaled_root(std::int64_t d) const {
  if (d <= 0 || is_zero()) return std::nullopt;
  Poly q;
  if (big_) {
    for (const auto& x : b_) {
      if (x % d != 0) return std::nullopt;
      BigInt y = x / d;
      if (y > 64 || y < -64) return std::nullopt;
      q.push_back(static_cast<std::int64_t>(y));
    }
  } else {
    for (auto x : s_) {
      if (x % d) return std::nullopt;
      q.push_back(x / d);
    }
  }
  const auto& cd = conductor_data(n_);
  auto it = cd.root_index.find(q);
  if (it == cd.root_index.end()) return std::nullopt;
  return it->second;
}

std::optional<BigInt> Cyclotomic::as_integer() const {
  if (length() > 1) return std::nullopt;
  return coefficient(0);
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (n_ != o.n_) return false;
  if (!big_ && !o.big_) return s_ == o.s_;
  return big_coeffs() == o.big_coeffs();
}

std::strong_ordering Cyclotomic::operator<=>(const Cyclotomic& o) const {
  check_same(o);
  std::size_t len = std::max(length(), o.length());
  if (!big_ && !o.big_) {
    for (std::size_t i = 0; i < len; ++i) {
      std::int64_t a = i < s_.size() ? s_[i] : 0, b = i < o.s_.size() ? o.s_[i] : 0;
      if (a != b) return a <=> b;
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < len; ++i) {
    BigInt a = coefficient(i), b = o.coefficient(i);
    if (a != b) return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < length(); ++i) {
    BigInt c = coefficient(i);
    if (c == 0) continue;
    bool neg = c < 0;
    BigInt mag = neg ? BigInt(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string z = i == 0 ? "" : (i == 1 ? "z" + std::to_string(n_) : "z" + std::to_string(n_) + "^" + std::to_string(i));
    if (z.empty())
      out += mag.str();
    else if (mag == 1)
      out += z;
    else
      out += mag.str() + "*" + z;
  }
  return out;
}

}  // namespace projembed
