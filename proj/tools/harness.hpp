#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "projembed/forms.hpp"

namespace projembed {

struct AbelianCase {
  AbelianInvariants inv;
  std::size_t forms = 0;
  std::uint64_t tau = 0, tau_closed = 0;
  std::optional<std::uint64_t> tau_irr, tau_irr_closed;
  bool ok = false;
};

// Generic tau over every alternating form with entries in p^{K - min(a,b)} Z,
// against the closed forms, for all abelian p-groups of order <= max_order.
std::vector<AbelianCase> abelian_oracle(std::uint64_t max_order);

struct PropertyCheck {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Character-table, partition, regularity, bound, witness and section checks
// over the built-in group set. log receives one line per group when non-null.
std::vector<PropertyCheck> run_property_suite(std::ostream* log = nullptr);

}  // namespace projembed
