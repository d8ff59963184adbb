#pragma once

#include <cstdint>
#include <vector>

namespace projembed {

// G = Z/p^{k_1} x ... x Z/p^{k_n}, k_1 >= k_2 >= ... >= 1.
struct AbelianInvariants {
  std::uint32_t p = 2;
  std::vector<std::uint32_t> exponents;

  std::uint64_t order() const;
  std::size_t rank() const { return exponents.size(); }
  bool homocyclic() const;
  // Throws InputError unless p is prime and exponents are positive and nonincreasing.
  void validate() const;
};

// Alternating n x n matrix over Z/p^k.
struct AlternatingForm {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  std::vector<std::vector<std::int64_t>> c;

  std::uint64_t modulus() const;
  std::size_t size() const { return c.size(); }
  // Entries reduced into [0, p^k).
  AlternatingForm reduced() const;
  bool is_alternating() const;
  static AlternatingForm zero(std::uint32_t p, std::uint32_t k, std::size_t n);
  // Sum of hyperbolic planes on coordinates (2i, 2i+1).
  static AlternatingForm standard_symplectic(std::uint32_t p, std::uint32_t k, std::size_t n);
};

bool is_prime(std::uint64_t n);
std::uint64_t ipow(std::uint64_t b, std::uint32_t e);

}  // namespace projembed
