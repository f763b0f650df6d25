#ifndef GJ_GROUP_HPP
#define GJ_GROUP_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gj/bitset.hpp"
#include "gj/error.hpp"

namespace gj {

using Elt = std::uint16_t;

// Finite group as a dense multiplication table over indices 0..n-1 with the
// identity at index 0.  Immutable after construction.
class GroupTable {
 public:
  static constexpr Elt kId = 0;

  // Validates the Latin-square, identity and inverse laws exactly and
  // derives inverses and element orders.  Associativity is the caller's
  // contract (construction-specific); check_associativity is available.
  static GroupTable from_mul(std::size_t order, std::vector<Elt> mul, std::string label);

  std::size_t order() const { return order_; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  Elt mul(Elt a, Elt b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  Elt inv(Elt a) const { return inv_[a]; }
  unsigned elt_order(Elt a) const { return elt_order_[a]; }
  Elt conj(Elt g, Elt x) const { return mul(mul(g, x), inv(g)); }
  Elt comm(Elt a, Elt b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Elt pow(Elt a, long long e) const;

  const std::vector<Elt>& mul_table() const { return mul_; }

  // Exhaustive associativity check, O(n^3); intended for small orders.
  bool check_associativity_full() const;
  // Checks the given number of uniformly drawn triples (fixed seed).
  bool check_associativity_sampled(std::size_t triples, std::uint64_t seed = 0x5eed) const;

 private:
  std::size_t order_ = 0;
  std::vector<Elt> mul_;
  std::vector<Elt> inv_;
  std::vector<unsigned> elt_order_;
  std::string label_;
};

// Subset of a group's elements, tied to its parent table.
struct SubSet {
  const GroupTable* parent = nullptr;
  Bitvec members;
  std::size_t size = 0;

  SubSet() = default;
  SubSet(const GroupTable& g, Bitvec m) : parent(&g), members(std::move(m)) {
    size = members.count();
  }

  bool contains(Elt x) const { return members.test(x); }
  std::vector<Elt> elements() const;
};

// Map between groups given by its full image vector.
struct GroupMap {
  const GroupTable* domain = nullptr;
  const GroupTable* codomain = nullptr;
  std::vector<Elt> image;

  Elt operator()(Elt x) const { return image[x]; }
  bool is_homomorphism() const;
  bool is_bijective() const;
  SubSet kernel() const;
  SubSet image_set() const;
  GroupMap then(const GroupMap& next) const;  // x -> next(this(x))
};

struct ConjClassPartition {
  std::vector<std::uint32_t> class_of;      // element -> class index
  std::vector<Elt> representatives;         // least element per class
  std::vector<std::size_t> sizes;
  std::size_t count() const { return representatives.size(); }
};

// ---- kernel operations ----

SubSet full_subset(const GroupTable& g);
SubSet trivial_subset(const GroupTable& g);

// Closure of the given elements (plus identity) under multiplication.
SubSet subgroup_closure(const GroupTable& g, std::span<const Elt> seed);
// Closure of an already-closed base extended by extra elements; the base
// must be a subgroup.
SubSet subgroup_closure_extend(const GroupTable& g, const SubSet& base,
                               std::span<const Elt> extra);

SubSet center(const GroupTable& g);
SubSet centralizer(const GroupTable& g, const SubSet& s);
SubSet normalizer(const GroupTable& g, const SubSet& s);
bool is_normal(const GroupTable& g, const SubSet& s);
bool is_abelian_subset(const GroupTable& g, const SubSet& s);
bool is_abelian(const GroupTable& g);

ConjClassPartition conjugacy_classes(const GroupTable& g);

// Deterministic small generating sequence (greedy over element indices).
std::vector<Elt> small_generating_set(const GroupTable& g);
// Same, for a subgroup given as a subset.
std::vector<Elt> small_generating_set(const GroupTable& g, const SubSet& sub);

struct QuotientResult {
  std::shared_ptr<const GroupTable> table;
  GroupMap projection;  // parent -> quotient
};
// Quotient by a normal subgroup; coset representatives are the least
// element indices, the coset of the identity maps to index 0.
QuotientResult quotient(const GroupTable& g, const SubSet& n);

// Commutator subgroup [A, B] inside g (subgroup generated by commutators).
SubSet commutator_subgroup(const GroupTable& g, const SubSet& a, const SubSet& b);
// Derived series [G, G', G'', ...] until stabilization; the last entry
// repeats no earlier one.  Abelian groups yield [G, 1].
std::vector<SubSet> derived_series(const GroupTable& g);
// Last term of the derived series.
SubSet perfect_core(const GroupTable& g);

// Invariant factors (each divides the next, ascending) of an abelian
// subgroup; throws NotAbelian otherwise.  The trivial group yields {}.
std::vector<unsigned> abelian_invariants(const GroupTable& g, const SubSet& s);
std::vector<unsigned> abelian_invariants(const GroupTable& g);

// Multiset of element orders.
std::map<unsigned, std::size_t> element_order_census(const GroupTable& g);
std::size_t involution_count(const GroupTable& g);

// Re-index a subgroup as a standalone table (identity stays at 0).
struct Materialized {
  std::shared_ptr<const GroupTable> table;
  std::vector<Elt> to_parent;  // new index -> parent index
};
Materialized materialize(const GroupTable& g, const SubSet& s);

// Image of a subset under a map.
SubSet map_image(const GroupMap& f, const SubSet& s);

}  // namespace gj

#endif
