#include "gj/automorphisms.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace gj {
namespace {

// Per-element invariant: (order, conjugacy class size, order of the class
// of the square).  Preserved by every isomorphism.
struct Signature {
  unsigned order;
  std::size_t class_size;
  unsigned square_order;
  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const GroupTable& g) {
  ConjClassPartition part = conjugacy_classes(g);
  std::vector<Signature> sig(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    Elt sq = g.mul(static_cast<Elt>(x), static_cast<Elt>(x));
    sig[x] = {g.elt_order(static_cast<Elt>(x)), part.sizes[part.class_of[x]],
              g.elt_order(sq)};
  }
  return sig;
}

// Breadth-first spanning structure of g over its generating sequence:
// every non-seed element is parent * gens[via].
struct BfsTree {
  std::vector<Elt> order;           // discovery order, order[0] = id
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> via;   // UINT32_MAX marks id / seed generators
  std::vector<std::uint32_t> seed;  // element -> generator slot (or MAX)
};

BfsTree bfs_tree(const GroupTable& g, const std::vector<Elt>& gens) {
  const std::size_t n = g.order();
  BfsTree t;
  t.parent.assign(n, 0);
  t.via.assign(n, UINT32_MAX);
  t.seed.assign(n, UINT32_MAX);
  std::vector<bool> seen(n, false);
  t.order.push_back(GroupTable::kId);
  seen[GroupTable::kId] = true;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (!seen[gens[j]]) {
      seen[gens[j]] = true;
      t.seed[gens[j]] = static_cast<std::uint32_t>(j);
      t.order.push_back(gens[j]);
    }
  }
  for (std::size_t i = 0; i < t.order.size(); ++i) {
    Elt x = t.order[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Elt y = g.mul(x, gens[j]);
      if (!seen[y]) {
        seen[y] = true;
        t.parent[y] = x;
        t.via[y] = static_cast<std::uint32_t>(j);
        t.order.push_back(y);
      }
    }
  }
  return t;
}

// Attempts to extend generator images to a full homomorphism; returns the
// image vector when it is a bijective homomorphism.
std::optional<std::vector<Elt>> try_map(const GroupTable& g, const GroupTable& h,
                                        const std::vector<Elt>& gens,
                                        const BfsTree& tree,
                                        const std::vector<Elt>& images) {
  const std::size_t n = g.order();
  std::vector<Elt> phi(n, 0);
  for (Elt x : tree.order) {
    if (x == GroupTable::kId) {
      phi[x] = GroupTable::kId;
    } else if (tree.seed[x] != UINT32_MAX) {
      phi[x] = images[tree.seed[x]];
    } else {
      phi[x] = h.mul(phi[tree.parent[x]], images[tree.via[x]]);
    }
  }
  // Verify every generator column; homomorphy on all products follows by
  // induction over word length.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (phi[g.mul(static_cast<Elt>(x), gens[j])] != h.mul(phi[x], images[j]))
        return std::nullopt;
  Bitvec seen(h.order());
  for (Elt y : phi) {
    if (seen.test(y)) return std::nullopt;
    seen.set(y);
  }
  return phi;
}

// Enumerates image vectors of bijective homomorphisms g -> h.
// stop_after limits the number of results (0 = unlimited).
std::vector<std::vector<Elt>> iso_search(const GroupTable& g, const GroupTable& h,
                                         std::size_t stop_after) {
  std::vector<Elt> gens = small_generating_set(g);
  if (gens.empty()) {
    // Trivial group: the empty map extends to id when h is trivial too.
    if (g.order() == 1 && h.order() == 1)
      return {std::vector<Elt>{GroupTable::kId}};
    return {};
  }
  BfsTree tree = bfs_tree(g, gens);
  std::vector<Signature> sg = signatures(g);
  std::vector<Signature> sh = signatures(h);
  // Candidate images per generator slot.
  std::vector<std::vector<Elt>> cands(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t y = 0; y < h.order(); ++y)
      if (sh[y] == sg[gens[j]]) cands[j].push_back(static_cast<Elt>(y));

  std::vector<std::vector<Elt>> results;
  std::vector<Elt> images(gens.size());
  std::vector<std::size_t> pos(gens.size(), 0);
  // Depth-first product over candidate lists with full verification at the
  // leaves; the candidate lists are small after signature filtering.
  std::size_t depth = 0;
  while (true) {
    if (pos[depth] == cands[depth].size()) {
      if (depth == 0) break;
      pos[depth] = 0;
      --depth;
      ++pos[depth];
      continue;
    }
    images[depth] = cands[depth][pos[depth]];
    if (depth + 1 < gens.size()) {
      ++depth;
      continue;
    }
    if (auto phi = try_map(g, h, gens, tree, images)) {
      results.push_back(std::move(*phi));
      if (stop_after && results.size() >= stop_after) return results;
    }
    ++pos[depth];
  }
  return results;
}

bool prefilter_match(const GroupTable& g, const GroupTable& h) {
  if (g.order() != h.order()) return false;
  if (element_order_census(g) != element_order_census(h)) return false;
  ConjClassPartition pg = conjugacy_classes(g);
  ConjClassPartition ph = conjugacy_classes(h);
  std::vector<std::size_t> sg = pg.sizes, sh = ph.sizes;
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return false;
  if (center(g).size != center(h).size) return false;
  std::vector<SubSet> dg = derived_series(g);
  std::vector<SubSet> dh = derived_series(h);
  if (dg.size() != dh.size()) return false;
  for (std::size_t i = 0; i < dg.size(); ++i)
    if (dg[i].size != dh[i].size) return false;
  QuotientResult ag = quotient(g, dg.size() > 1 ? dg[1] : full_subset(g));
  QuotientResult ah = quotient(h, dh.size() > 1 ? dh[1] : full_subset(h));
  if (abelian_invariants(*ag.table) != abelian_invariants(*ah.table)) return false;
  return true;
}

}  // namespace

std::vector<GroupMap> automorphisms(const GroupTable& g, std::size_t cap) {
  if (g.order() > cap)
    throw CapExceeded("automorphisms: order " + std::to_string(g.order()) +
                      " exceeds cap " + std::to_string(cap));
  std::vector<std::vector<Elt>> images = iso_search(g, g, 0);
  std::sort(images.begin(), images.end());
  std::vector<GroupMap> out;
  out.reserve(images.size());
  for (auto& v : images) out.push_back(GroupMap{&g, &g, std::move(v)});
  return out;
}

GroupMap inner_automorphism(const GroupTable& g, Elt by) {
  GroupMap f;
  f.domain = &g;
  f.codomain = &g;
  f.image.resize(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    f.image[x] = g.conj(by, static_cast<Elt>(x));
  return f;
}

bool is_inner(const GroupTable& g, const GroupMap& f) {
  for (std::size_t b = 0; b < g.order(); ++b) {
    bool same = true;
    for (std::size_t x = 0; x < g.order() && same; ++x)
      same = f.image[x] == g.conj(static_cast<Elt>(b), static_cast<Elt>(x));
    if (same) return true;
  }
  return false;
}

IsoOutcome is_isomorphic(const GroupTable& g, const GroupTable& h, std::size_t cap) {
  IsoOutcome out{IsoOutcome::Kind::NotIsomorphic, std::nullopt};
  if (!prefilter_match(g, h)) return out;
  if (g.order() > cap) {
    out.kind = IsoOutcome::Kind::Indeterminate;
    return out;
  }
  std::vector<std::vector<Elt>> found = iso_search(g, h, 1);
  if (found.empty()) return out;
  out.kind = IsoOutcome::Kind::Isomorphic;
  out.witness = GroupMap{&g, &h, std::move(found[0])};
  return out;
}

}  // namespace gj
