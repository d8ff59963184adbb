#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "projembed/config.hpp"
#include "projembed/presentation.hpp"
#include "projembed/projective.hpp"

namespace projembed {

struct CatalogParams {
  std::optional<std::uint32_t> p, k, n, r;
  std::string to_string() const;  // "p=3,k=1", empty when unset
};

enum class ClosedFormKind { none, abelian, extraspecial, heisenberg };

struct CatalogEntry {
  std::string name;
  std::vector<std::string> aliases;
  std::string params;  // accepted parameters, e.g. "p,k"
  std::string description;
  std::string provenance;
  bool has_covering = false;
};

struct CatalogInstance {
  std::string name;
  CatalogParams params;
  PcPresentation group;
  // Absent when the group is its own representation group (trivial multiplier)
  // or when no covering is catalogued.
  std::optional<CoveringSpec> covering;
  bool representation_group = false;  // covering (or the group itself) realizes all of M(G)
  std::string multiplier;             // declared M(G), e.g. "(Z/3)^2"
  std::uint64_t multiplier_order = 0; // 0 when unknown
  std::string provenance;
  ClosedFormKind closed_form = ClosedFormKind::none;
  std::vector<std::uint64_t> abelian_orders;  // for ClosedFormKind::abelian
  std::uint32_t extraspecial_n = 0;
};

const std::vector<CatalogEntry>& catalog_entries();

// Names ending in "star" or "-star" select the covering of the base entry.
// Throws InputError for unknown names and invalid parameters; instances are consistency-checked.
CatalogInstance catalog_get(const std::string& name, const CatalogParams& params = {});

// G* with A for instances carrying a covering, G over itself otherwise.
// representation_group follows the instance flag.
Covering instance_covering(const CatalogInstance& inst, const Limits& limits = Limits::from_env());

struct StructureReport {
  bool ok = true;
  std::uint64_t gstar_order = 0, group_order = 0, a_order = 0;
  std::vector<std::string> failures;
};

// A central and inside the derived subgroup, quotient satisfies the group's
// relations with matching order, |G*| = |G| |A|, |A| = declared multiplier.
StructureReport validate_instance(const CatalogInstance& inst, const Limits& limits = Limits::from_env());

}  // namespace projembed
