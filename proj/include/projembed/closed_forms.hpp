#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "projembed/forms.hpp"

namespace projembed {

// Solutions of C b = 0 over (Z/p^k)^n.
struct RegularSubgroup {
  std::uint64_t kernel_size = 1;
  std::vector<std::vector<std::uint64_t>> generators;
};

RegularSubgroup regular_subgroup(const AlternatingForm& c);
// sqrt(|G / G_0|) for G = (Z/p^k)^n.
std::uint64_t irr_degree_abelian(const AlternatingForm& c);

std::uint64_t tau_abelian(const AbelianInvariants& inv);
// Any finite abelian group given by cyclic factor orders (need not be primary).
std::uint64_t tau_abelian(const std::vector<std::uint64_t>& cyclic_orders);
std::optional<std::uint64_t> tau_irr_abelian(const AbelianInvariants& inv);
std::optional<std::uint64_t> tau_irr_abelian(const std::vector<std::uint64_t>& cyclic_orders);
// Pairs of isomorphic primary factors; the brute-force counterpart of symmetric type.
bool is_symmetric_type(const std::vector<std::uint64_t>& cyclic_orders);

struct ClosedValues {
  std::uint64_t tau = 0;
  bool tau_exact = true;  // false: tau is an upper bound
  std::optional<std::uint64_t> tau_irr;
};

// Extraspecial of order p^{2n+1}, n >= 2.
ClosedValues tau_extraspecial(std::uint32_t p, std::uint32_t n);
// H_{2n+1}(Z/p^k), p odd.
ClosedValues heisenberg_values(std::uint32_t p, std::uint32_t k, std::uint32_t n);

struct FactorData {
  std::uint64_t order = 1;
  bool trivial_multiplier = false;
  std::optional<std::uint64_t> tau;
  std::optional<std::uint64_t> tau_irr;
};

struct ProductValues {
  std::optional<std::uint64_t> tau;  // exact
  std::optional<std::uint64_t> tau_upper;
  std::optional<std::uint64_t> tau_irr;  // exact
  std::vector<std::string> rules;
};

ProductValues product_rules(const FactorData& h, const FactorData& k);
// Exact tau_irr of H x K for coprime orders; InputError if a factor lacks tau_irr.
std::uint64_t product_tau_irr(const FactorData& h, const FactorData& k);

enum class TableId { p3, two4, p4, p5 };
TableId parse_table_id(const std::string& s);
std::string table_id_name(TableId t);

struct ExpectedRow {
  std::string row;      // label as printed
  std::string catalog;  // catalog name, empty when not covered
  std::uint32_t r = 0;  // family parameter, 0 if none
  std::string tau_text, tau_irr_text;
  std::optional<std::uint64_t> tau;
  std::optional<std::uint64_t> tau_irr;
  std::optional<std::uint64_t> printed_tau;  // set when the printed value is not authoritative
  std::string note;
};

struct ExpectedTable {
  TableId id = TableId::p3;
  std::uint32_t p = 0;
  std::string version;
  std::vector<ExpectedRow> rows;

  std::string to_csv() const;
};

// Throws InputError for unsupported (table, p).
ExpectedTable table_expected(TableId id, std::uint32_t p);

// Least quadratic non-residue mod an odd prime p.
std::uint32_t least_nonresidue(std::uint32_t p);

}  // namespace projembed
