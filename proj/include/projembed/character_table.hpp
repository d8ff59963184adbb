#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "projembed/config.hpp"
#include "projembed/cyclotomic.hpp"
#include "projembed/group.hpp"

namespace projembed {

struct Character {
  std::uint64_t degree = 1;
  std::vector<Cyclotomic> values;  // per class
  // Restriction to the center: z_i -> zeta_m^{central[i]} on the generators
  // of the table's center decomposition.
  std::vector<std::uint32_t> central;
};

struct TableOptions {
  std::uint64_t max_classes_cubed = Limits::from_env().max_classes_cubed;
};

struct CharacterTable {
  GroupPtr group;
  std::uint32_t conductor = 1;  // exponent of the group
  std::uint64_t prime = 0;      // modular prime used for the computation
  std::vector<std::uint32_t> class_orders;
  std::vector<std::uint32_t> inverse_class;
  std::vector<std::vector<std::uint32_t>> power_classes;  // [class][t], t < class order
  AbelianDecomposition center;
  std::vector<Character> irr;

  const ClassPartition& classes() const { return group->classes(); }
  std::size_t size() const { return irr.size(); }
  std::uint32_t power_class(std::size_t c, std::int64_t t) const;
  const Cyclotomic& value(std::size_t chi, Elem x) const {
    return irr[chi].values[classes().class_of[x]];
  }
  std::vector<std::uint64_t> degrees() const;
};

// a[i][j][k] = #{(x, y) in C_i x C_j : x y = rep_k}. Guarded by the classes-cubed budget.
std::vector<std::vector<std::vector<std::uint32_t>>> class_mult_coefficients(
    const Group& g, const TableOptions& opts = {});

// Throws ResourceError when the class count exceeds the budget.
CharacterTable character_table(const GroupPtr& g, const TableOptions& opts = {});

// values[chi][s] = chi(S.elements[s]). Throws InputError if s is not a subgroup of the table's group.
std::vector<std::vector<Cyclotomic>> restrict_fusion(const CharacterTable& t, const Subgroup& s);

struct OrthogonalityReport {
  bool ok = true;
  bool exhaustive = false;  // every row and column pair summed directly
  std::size_t row_pairs = 0;
  std::size_t column_pairs = 0;
  std::vector<std::string> failures;
};

// Exact checks of both orthogonality relations and the table invariants.
// Tables with more than `direct_limit` classes use the center-block reduction
// for rows and a deterministic sample of off-diagonal column pairs.
OrthogonalityReport verify_orthogonality(const CharacterTable& t, std::size_t direct_limit = 200);

std::string table_to_csv(const CharacterTable& t);
std::string table_to_json(const CharacterTable& t);

}  // namespace projembed
