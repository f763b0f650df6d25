#ifndef GJ_AUTOMORPHISMS_HPP
#define GJ_AUTOMORPHISMS_HPP

#include <optional>
#include <vector>

#include "gj/group.hpp"

namespace gj {

// All automorphisms of g, sorted by image vector; backtracking over
// generator images with invariant filtering.  Throws CapExceeded when the
// order exceeds the cap.
std::vector<GroupMap> automorphisms(const GroupTable& g, std::size_t cap = 512);

// Conjugation map x -> g x g^-1.
GroupMap inner_automorphism(const GroupTable& g, Elt by);

// True when f equals conjugation by some element.
bool is_inner(const GroupTable& g, const GroupMap& f);

struct IsoOutcome {
  enum class Kind { Isomorphic, NotIsomorphic, Indeterminate };
  Kind kind;
  std::optional<GroupMap> witness;
  bool isomorphic() const { return kind == Kind::Isomorphic; }
};

// Decides isomorphism between two tables with an invariant prefilter and a
// generator-image search; Indeterminate above the cap only when the
// prefilter cannot refute.
IsoOutcome is_isomorphic(const GroupTable& g, const GroupTable& h, std::size_t cap = 512);

}  // namespace gj

#endif
