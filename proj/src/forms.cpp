#include "projembed/forms.hpp"

#include "projembed/errors.hpp"

namespace projembed {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t AbelianInvariants::order() const {
  std::uint64_t o = 1;
  for (auto k : exponents) o *= ipow(p, k);
  return o;
}

bool AbelianInvariants::homocyclic() const {
  for (auto k : exponents)
    if (k != exponents.front()) return false;
  return true;
}

void AbelianInvariants::validate() const {
  if (!is_prime(p)) throw InputError("abelian invariants need a prime p, got " + std::to_string(p));
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) throw InputError("abelian invariant exponents must be positive");
    if (i && exponents[i] > exponents[i - 1])
      throw InputError("abelian invariant exponents must be nonincreasing");
  }
}

std::uint64_t AlternatingForm::modulus() const { return ipow(p, k); }

AlternatingForm AlternatingForm::reduced() const {
  AlternatingForm r = *this;
  auto m = static_cast<std::int64_t>(modulus());
  for (auto& row : r.c)
    for (auto& v : row) v = ((v % m) + m) % m;
  return r;
}

bool AlternatingForm::is_alternating() const {
  auto r = reduced();
  auto m = static_cast<std::int64_t>(modulus());
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    if (r.c[i].size() != r.c.size()) return false;
    if (r.c[i][i] != 0) return false;
    for (std::size_t j = 0; j < i; ++j)
      if ((r.c[i][j] + r.c[j][i]) % m != 0) return false;
  }
  return true;
}

AlternatingForm AlternatingForm::zero(std::uint32_t p, std::uint32_t k, std::size_t n) {
  AlternatingForm f;
  f.p = p;
  f.k = k;
  f.c.assign(n, std::vector<std::int64_t>(n, 0));
  return f;
}

AlternatingForm AlternatingForm::standard_symplectic(std::uint32_t p, std::uint32_t k,
                                                     std::size_t n) {
  AlternatingForm f = zero(p, k, n);
  auto m = static_cast<std::int64_t>(f.modulus());
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    f.c[i][i + 1] = 1;
    f.c[i + 1][i] = m - 1;
  }
  return f;
}

}  // namespace projembed
