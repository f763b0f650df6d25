#ifndef GJ_JORDAN_HPP
#define GJ_JORDAN_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gj/group.hpp"

namespace gj {

struct SubgroupClass {
  Bitvec members;  // canonical representative: lex-least conjugate bit-vector
  std::size_t order = 0;
  std::size_t class_size = 0;
  std::size_t normalizer_order = 0;
};

// All subgroups up to conjugacy, canonicalized; sorted by (order, members).
struct SubgroupClassInventory {
  const GroupTable* parent = nullptr;
  std::vector<SubgroupClass> classes;
  std::size_t total_subgroups = 0;
};

// Cyclic seeds extended to a fixpoint by single-element closure steps, with
// one representative element per right coset; every subgroup class is
// reached.  Deterministic for any thread count.
SubgroupClassInventory subgroup_classes(const GroupTable& g, int threads = 1,
                                        std::size_t cap = 1920);

// All normal subgroups of the subgroup h (normality inside h), as subsets of
// the parent: joins of normal closures of cyclic subgroups.
std::vector<SubSet> normal_subgroups_within(const GroupTable& g, const SubSet& h);
std::vector<SubSet> normal_subgroups(const GroupTable& g);

// Largest order of a subgroup of h that is normal in h and abelian.
std::size_t max_normal_abelian_order_within(const GroupTable& g, const SubSet& h);

// i(G) = |G| / (largest normal abelian subgroup order).
std::size_t min_index_normal_abelian(const GroupTable& g);

struct NormalAbelianEntry {
  SubSet sub;
  std::vector<unsigned> invariants;  // ascending divisibility
};

// Every normal abelian subgroup with its invariant factors, sorted by
// (order, invariants, members).
struct NormalAbelianProfile {
  std::vector<NormalAbelianEntry> entries;
};
NormalAbelianProfile normal_abelian_profile(const GroupTable& g);

struct JordanWitness {
  Bitvec subgroup;  // H*: subgroup class rep attaining J
  Bitvec abelian;   // A*: largest normal abelian subgroup of H*
};

struct JordanReport {
  std::string label;
  std::size_t order = 0;
  std::size_t whole_group_index = 0;  // i(G)
  std::size_t jordan = 0;             // J(G)
  JordanWitness witness;
  std::size_t class_count = 0;
  std::uint64_t millis = 0;
};

// J(G) = max over subgroup classes H of i(H); witness pair is the
// lex-least maximizer.
JordanReport jordan_constant(const GroupTable& g, int threads = 1);

// Largest Jordan constant over a nonempty list of groups.
std::size_t jordan_sup(const std::vector<std::shared_ptr<const GroupTable>>& groups,
                       int threads = 1);

// Runs the given function over [0, n) on the requested number of threads.
// The work per index must be independent; exceptions are rethrown.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace gj

#endif
