#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "projembed/character_table.hpp"
#include "projembed/closed_forms.hpp"
#include "projembed/projective.hpp"

namespace projembed {

enum class Budget { low, standard, high };
Budget parse_budget(const std::string& s);  // "low", "default", "high"
std::string budget_name(Budget b);
// Classes-cubed limit: low 1e6, default from Limits (2e8 unless overridden), high 1e10.
std::uint64_t budget_classes_cubed(Budget b);

// Character data for a covering: the table of G* when it fits the budget,
// otherwise one table per quotient G* / ker(lambda). Throws ResourceError.
struct PreparedData {
  std::unique_ptr<CharacterTable> table;
  ProjectiveData data;
};
PreparedData prepare_projective(const Covering& c, std::uint64_t max_classes_cubed);

enum class RowStatus { match, mismatch, skipped, bound_only };
std::string status_name(RowStatus s);

struct VerifyRow {
  std::string row;
  std::string catalog;
  std::string params;
  std::string expected_tau_text, expected_tau_irr_text;
  std::optional<std::uint64_t> expected_tau, expected_tau_irr, printed_tau;
  std::optional<std::uint64_t> tau, tau_irr;
  bool computed = false;  // tau / tau_irr fields are meaningful
  bool tau_exact = false;
  std::string method;     // "table", "quotient-tables", "closed-form", "none"
  RowStatus status = RowStatus::skipped;
  std::string reason;
  std::string note;
  std::uint64_t gstar_order = 0;
  std::optional<TauReport> tau_report, tau_irr_report;
  double seconds = 0;
};

struct VerificationReport {
  TableId table = TableId::p3;
  std::uint32_t p = 0;
  std::string version;
  Budget budget = Budget::standard;
  std::vector<VerifyRow> rows;

  std::size_t count(RowStatus s) const;
  bool has_mismatch() const { return count(RowStatus::mismatch) > 0; }
  // timing = false omits runtimes so reruns are byte-identical.
  std::string to_json(bool timing = true) const;
  std::string to_text() const;
  std::string to_csv() const;
};

VerifyRow verify_row(const ExpectedRow& e, TableId table, std::uint32_t p, Budget budget);
// Rows run on up to hardware_concurrency threads; report order follows the table.
VerificationReport verify_table(TableId table, std::uint32_t p, Budget budget = Budget::standard);

}  // namespace projembed
