#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "projembed/config.hpp"
#include "projembed/forms.hpp"
#include "projembed/presentation.hpp"

namespace projembed {

using Elem = std::uint32_t;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

struct Subgroup {
  GroupPtr parent;
  std::vector<Elem> elements;  // sorted
  std::vector<Elem> gens;

  std::size_t size() const { return elements.size(); }
  bool contains(Elem x) const;
  bool is_trivial() const { return elements.size() == 1; }
};

struct ClassPartition {
  std::vector<Elem> reps;                   // minimal element of each class, increasing
  std::vector<std::uint32_t> sizes;
  std::vector<std::uint32_t> class_of;      // element -> class index
  std::vector<std::vector<Elem>> members;   // sorted

  std::size_t count() const { return reps.size(); }
};

class Group {
 public:
  // Presentation must be consistent; throws ResourceError above the order bound.
  static GroupPtr build(const PcPresentation& p, const Limits& limits = Limits::from_env());

  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;

  const PcPresentation& presentation() const { return pres_; }
  std::uint64_t order() const { return order_; }
  std::size_t ngens() const { return pres_.size(); }

  Elem identity() const { return 0; }
  Elem generator(std::size_t i) const { return static_cast<Elem>(strides_[i]); }
  Elem encode(const NormalWord& w) const;
  NormalWord decode(Elem x) const;
  std::uint32_t exponent_at(Elem x, std::size_t i) const {
    return static_cast<std::uint32_t>((x / strides_[i]) % pres_.rel_orders[i]);
  }

  Elem mul_gen(Elem x, std::size_t i) const { return rmul_[i][x]; }
  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const;
  Elem pow(Elem x, std::int64_t m) const;
  Elem conj(Elem x, Elem g) const;  // g^-1 x g
  Elem comm(Elem x, Elem y) const;  // x^-1 y^-1 x y
  std::uint64_t element_order(Elem x) const;
  Elem eval(const NormalWord& w) const { return encode(w); }

  const ClassPartition& classes() const;
  const Subgroup& center() const;
  const Subgroup& derived_subgroup() const;
  const std::vector<std::uint32_t>& element_orders() const;
  std::uint64_t exponent() const;
  bool is_abelian() const;
  bool is_nilpotent() const;

  Subgroup subgroup(const std::vector<Elem>& gens) const;
  Subgroup normal_closure(const std::vector<Elem>& gens) const;
  Subgroup centralizer(Elem x) const;
  Subgroup whole() const;
  Subgroup trivial_subgroup() const;
  bool is_normal(const Subgroup& s) const;

  GroupPtr self() const { return self_.lock(); }

 private:
  explicit Group(PcPresentation p);

  PcPresentation pres_;
  std::uint64_t order_ = 1;
  std::vector<std::uint64_t> strides_;
  std::vector<std::vector<Elem>> rmul_;  // x * g_i
  std::vector<std::vector<Elem>> rinv_;  // x * g_i^-1
  std::weak_ptr<const Group> self_;

  mutable std::once_flag classes_once_, center_once_, derived_once_, orders_once_;
  mutable ClassPartition classes_;
  mutable Subgroup center_, derived_;
  mutable std::vector<std::uint32_t> orders_;
};

struct Quotient {
  GroupPtr group;
  std::vector<Elem> map;  // element of the parent -> element of the quotient
};

// Throws StructureError when n is not normal.
Quotient quotient(const Group& g, const Subgroup& n, const std::string& name = "");
GroupPtr direct_product(const Group& g, const Group& h, const std::string& name = "");
PcPresentation direct_product(const PcPresentation& g, const PcPresentation& h,
                              const std::string& name = "");
// (G x H) / <(z1, z2^-1)> for central z1, z2 of equal order.
GroupPtr central_product(const Group& g, Elem z1, const Group& h, Elem z2,
                         const std::string& name = "");

// Central extension of the abelian group by <z> of order p^k (k from the form),
// realizing [x_i, x_j] = z^{c(i,j)}. Entries pairing factors of orders p^a, p^b
// must be divisible by p^{k - min(a, b)}.
PcPresentation extension_from_form(const AbelianInvariants& inv, const AlternatingForm& c,
                                   const std::string& name = "E");
PcPresentation abelian_presentation(const AbelianInvariants& inv, const std::string& name = "A");

// Induced pc sequence of a subgroup: every h in H is uniquely
// gens[0]^{a_0} ... gens[r-1]^{a_{r-1}} with 0 <= a_s < rel_orders[s].
struct InducedPcgs {
  std::vector<Elem> gens;
  std::vector<std::uint32_t> rel_orders;
  std::vector<std::size_t> depth;
  std::vector<std::uint32_t> lead;

  // Exponent vector of h; nullopt if h is not in the subgroup.
  std::optional<std::vector<std::uint32_t>> sift(const Group& g, Elem h) const;
};

InducedPcgs induced_pcgs(const Group& g, const Subgroup& h);

// Cyclic decomposition of an abelian subgroup.
struct AbelianDecomposition {
  InducedPcgs pcgs;
  std::vector<std::uint64_t> orders;  // d_1 | d_2 | ..., all > 1
  std::vector<Elem> generators;       // generator of each cyclic factor
  // coords_i(h) = sum_s a_s(h) * coord_map[s][i] mod orders[i]
  std::vector<std::vector<std::uint64_t>> coord_map;

  std::vector<std::uint64_t> coordinates(const Group& g, Elem h) const;
  std::uint64_t size() const;
};

// Throws StructureError if h is not abelian.
AbelianDecomposition decompose_abelian(const Group& g, const Subgroup& h);

// True iff sending generator i of p to images[i] defines a homomorphism into g.
bool satisfies_relations(const Group& g, const PcPresentation& p, const std::vector<Elem>& images);

}  // namespace projembed
