#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "projembed/config.hpp"

namespace projembed {

// Exponent vector (a_1, ..., a_n) with 0 <= a_i < e_i; all zeros is the identity.
using NormalWord = std::vector<std::uint32_t>;

struct PcPresentation {
  std::string name;
  std::vector<std::string> gens;
  std::vector<std::uint32_t> rel_orders;
  // power_rels[i] = g_i^{e_i}, supported on generators after i.
  std::vector<NormalWord> power_rels;
  // conj_rels[j][i] = g_i^{-1} g_j g_i for i < j, supported on generators after i.
  std::vector<std::vector<NormalWord>> conj_rels;

  std::size_t size() const { return gens.size(); }
  std::uint64_t order() const;
  int index_of(const std::string& gen) const;  // -1 if absent

  NormalWord identity_word() const { return NormalWord(gens.size(), 0); }
  NormalWord generator_word(std::size_t i) const;
  bool is_trivial_conj(std::size_t j, std::size_t i) const;

  // Presentation with unset relations; every relation trivial.
  static PcPresentation free_abelian_like(std::string name,
                                          std::vector<std::string> gens,
                                          std::vector<std::uint32_t> orders);

  bool operator==(const PcPresentation& o) const = default;
};

struct CoveringSpec {
  PcPresentation gstar;
  std::vector<std::string> kernel_gens;
  std::string label;  // name of the quotient group
  std::size_t kernel_start() const { return gstar.size() - kernel_gens.size(); }
};

struct ParseOptions {
  std::uint64_t max_order = Limits{}.max_order;
};

PcPresentation parse_presentation(const std::string& text,
                                  const ParseOptions& opts = {});
CoveringSpec parse_covering(const std::string& text,
                            const ParseOptions& opts = {});

// Canonical text form; reparses to an identical structure.
std::string to_text(const PcPresentation& p);
std::string to_text(const CoveringSpec& c);
std::string word_to_text(const PcPresentation& p, const NormalWord& w);

struct ConsistencyTest {
  std::string label;
  bool passed = true;
};

struct ConsistencyReport {
  std::vector<ConsistencyTest> tests;
  bool consistent = true;
  std::uint64_t order = 0;
  std::vector<std::string> failures() const;
};

ConsistencyReport check_consistency(const PcPresentation& p);

// Throws StructureError naming the first failed overlap.
void require_consistent(const PcPresentation& p);

}  // namespace projembed
