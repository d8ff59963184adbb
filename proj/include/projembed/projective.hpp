#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "projembed/character_table.hpp"
#include "projembed/group.hpp"
#include "projembed/presentation.hpp"

namespace projembed {

// Central extension 1 -> A -> G* -> G -> 1 with a normalized section mu.
struct Covering {
  std::string name;   // G*
  std::string label;  // G
  GroupPtr gstar;
  Subgroup A;
  GroupPtr G;
  std::vector<Elem> f;   // G* -> G
  std::vector<Elem> mu;  // G -> G*, mu(1) = 1
  AbelianDecomposition a_dec;
  bool representation_group = false;  // A is the full Schur multiplier

  // Exponent of A; 1 when A is trivial.
  std::uint64_t a_exponent() const;
  std::uint64_t a_order() const { return A.size(); }
  // x = mu(f(x)) * kernel_part(x)
  Elem kernel_part(Elem x) const;
};

// Builds G*, checks that A is central and constructs the quotient on the non-kernel chain.
Covering load_covering(const CoveringSpec& spec, const Limits& limits = Limits::from_env());
// General form: A any central subgroup of G*; mu(g) is the least element of its coset.
Covering make_covering(const GroupPtr& gstar, const Subgroup& a, const std::string& label = "");
// G over itself with A = 1, representation_group false.
Covering trivial_covering(const GroupPtr& g);
// mu'(g) = mu(g) * a(g) with pseudo-random a(g) in A, a(1) = 1.
Covering perturb_section(const Covering& c, std::uint64_t seed);
// Covering of G by G* / k for k <= A; G is shared with c.
// map, if given, receives the projection G* -> G* / k.
Covering quotient_covering(const Covering& c, const Subgroup& k, std::vector<Elem>* map = nullptr);

// lambda(a_i) = zeta_{d_i}^{exponents[i]} on the cyclic generators a_i of A.
struct CentralCharacter {
  std::vector<std::uint32_t> exponents;
  bool operator==(const CentralCharacter&) const = default;
  std::string to_string() const;
};

// All of Hom(A, C^x), lexicographic on exponent tuples, trivial first.
std::vector<CentralCharacter> central_characters(const Covering& c);
std::size_t central_character_index(const Covering& c, const CentralCharacter& l);
// lambda(a) = zeta_N^e with N = a_exponent(); returns e.
std::uint64_t lambda_exponent(const Covering& c, const CentralCharacter& l, Elem a);
Subgroup lambda_kernel(const Covering& c, const CentralCharacter& l);

// lambda(mu(g) mu(h) mu(gh)^-1) as an exponent of zeta_N, N = a_exponent().
std::uint64_t cocycle_value(const Covering& c, const CentralCharacter& l, Elem g, Elem h);
Subgroup alpha_regular_central(const Covering& c, const CentralCharacter& l);
// Throws InputError unless G is nilpotent.
bool exists_faithful_irrep_by_regularity(const Covering& c, const CentralCharacter& l);

// Central character of each irreducible of t, as an index into central_characters(c).
std::vector<std::size_t> lambda_of_characters(const Covering& c, const CharacterTable& t);
std::vector<std::size_t> irr_over(const Covering& c, const CharacterTable& t, const CentralCharacter& l);

// scalar[i] = -1 if chi(mu(probe_i)) is not scalar, else j with chi(mu(probe_i)) = chi(1) zeta_m^j.
struct ScalarSignature {
  std::vector<std::int32_t> scalar;
  bool operator==(const ScalarSignature&) const = default;
};
inline constexpr std::int32_t kNonScalar = -1;

ScalarSignature scalar_signature(const Covering& c, const CharacterTable& t, std::size_t chi,
                                 const std::vector<Elem>& probes);
// Probes at which every member is scalar with a common scalar.
// Throws InputError if the members lie over different central characters.
std::vector<Elem> joint_projective_kernel(const Covering& c, const CharacterTable& t,
                                          const std::vector<std::size_t>& members,
                                          const std::vector<Elem>& probes);
// Z(G) \ {1} for nilpotent G, else G \ {1}.
std::vector<Elem> default_probes(const Covering& c);

// Characters above one central character, possibly taken from a table of G* / ker(lambda).
struct LambdaBlock {
  CentralCharacter lambda;
  const Covering* cover = nullptr;
  const CharacterTable* table = nullptr;
  std::vector<std::size_t> members;
};

struct ProjectiveData {
  const Covering* covering = nullptr;
  std::vector<LambdaBlock> blocks;  // central_characters order
  bool decomposed = false;
  std::vector<std::unique_ptr<Covering>> owned_covers;
  std::vector<std::unique_ptr<CharacterTable>> owned_tables;

  const LambdaBlock& block(const CentralCharacter& l) const;
};

ProjectiveData projective_data(const Covering& c, const CharacterTable& t);
// One table per distinct kernel of lambda, each of G* / ker(lambda).
ProjectiveData projective_data_by_quotients(const Covering& c, const TableOptions& opts = {});

struct Constituent {
  std::size_t index;
  std::uint64_t degree;
};

enum class TauKind { tau, tau_irr, delta, delta_irr };
std::string kind_name(TauKind k);

struct TauReport {
  std::string group;
  std::string covering;
  TauKind kind = TauKind::tau;
  std::optional<std::uint64_t> value;
  bool exact = false;
  bool decomposed = false;
  CentralCharacter lambda;
  std::vector<Constituent> constituents;
  std::vector<Elem> kernel;  // probes surviving the witness; empty when certified
  std::vector<std::string> kernel_words;
  std::size_t probes_checked = 0;
  std::uint64_t nodes_expanded = 0;

  std::string to_json() const;
  std::string to_text() const;
};

struct SearchOptions {
  std::uint64_t node_limit = 20000000;
};

TauReport tau(const ProjectiveData& d, const SearchOptions& opts = {});
TauReport tau_irr(const ProjectiveData& d);
TauReport tau(const Covering& c, const CharacterTable& t, const SearchOptions& opts = {});
TauReport tau_irr(const Covering& c, const CharacterTable& t);

// Ordinary analogues on the group of t: kernels {g : chi(g) = chi(1)}.
TauReport delta(const CharacterTable& t, const SearchOptions& opts = {});
TauReport delta_irr(const CharacterTable& t);

// Recomputes the witness kernel on all of G \ {1} from the table values. For an
// absent value, rechecks that no candidate has a trivial kernel.
bool verify_witness(const ProjectiveData& d, const TauReport& r);
bool verify_delta_witness(const CharacterTable& t, const TauReport& r);

}  // namespace projembed
