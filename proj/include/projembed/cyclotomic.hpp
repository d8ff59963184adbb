#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace projembed {

using BigInt = boost::multiprecision::cpp_int;

// Phi_n, coefficients from the constant term up; monic.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n);
std::uint32_t euler_phi(std::uint32_t n);

// Element of Z[zeta_n], stored as its remainder modulo Phi_n with trailing
// zeros trimmed. Coefficients stay in int64 until an operation overflows.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1) {}
  explicit Cyclotomic(std::uint32_t n);

  static Cyclotomic integer(std::uint32_t n, std::int64_t v);
  static Cyclotomic root_of_unity(std::uint32_t n, std::int64_t j);
  // sum_j counts[j] * zeta_n^j, counts indexed by exponent mod n.
  static Cyclotomic from_exponent_counts(std::uint32_t n, const std::vector<std::int64_t>& counts);
  static Cyclotomic from_coefficients(std::uint32_t n, std::vector<BigInt> coeffs);

  std::uint32_t conductor() const { return n_; }
  bool is_zero() const { return big_ ? b_.empty() : s_.empty(); }
  bool is_small() const { return !big_; }
  std::size_t length() const { return big_ ? b_.size() : s_.size(); }
  BigInt coefficient(std::size_t i) const;
  std::vector<BigInt> coefficients() const;
  // Requires is_small().
  const std::vector<std::int64_t>& small_coefficients() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic scaled(std::int64_t k) const;

  Cyclotomic conjugate() const;
  Cyclotomic abs_square() const { return *this * conjugate(); }
  Cyclotomic times_root(std::int64_t j) const;
  // Reinterpret in conductor m, a multiple of the current conductor.
  Cyclotomic coerce(std::uint32_t m) const;

  // j in [0, n) with *this == d * zeta_n^j.
  std::optional<std::uint32_t> as_scaled_root(std::int64_t d) const;
  std::optional<BigInt> as_integer() const;

  bool operator==(const Cyclotomic& o) const;
  // Lexicographic on coefficient vectors; conductors must agree.
  std::strong_ordering operator<=>(const Cyclotomic& o) const;

  // Integer combination of powers of zeta, e.g. "2 - z9^2 + 3*z9^4".
  std::string to_string() const;

 private:
  std::uint32_t n_;
  bool big_ = false;
  std::vector<std::int64_t> s_;
  std::vector<BigInt> b_;

  void check_same(const Cyclotomic& o) const;
  void demote();
  std::vector<BigInt> big_coeffs() const;
  static Cyclotomic make_big(std::uint32_t n, std::vector<BigInt> v);
};

}  // namespace projembed
