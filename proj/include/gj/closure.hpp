#ifndef GJ_CLOSURE_HPP
#define GJ_CLOSURE_HPP

#include <concepts>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gj/error.hpp"
#include "gj/group.hpp"

namespace gj {

// A concrete element supports multiplication, inversion and a canonical
// byte-serialization key.
template <typename E>
concept ConcreteElement = requires(const E& a, const E& b) {
  { a * b } -> std::convertible_to<E>;
  { a.inverse() } -> std::convertible_to<E>;
  { a.key() } -> std::convertible_to<std::string>;
};

template <ConcreteElement E>
struct ConcreteClosure {
  std::shared_ptr<const GroupTable> table;
  std::vector<E> elements;                          // index -> element
  std::unordered_map<std::string, Elt> index;       // key -> index
};

// Enumerates the group generated by the given elements and produces its
// multiplication table; the identity gets index 0 and the remaining indices
// follow breadth-first discovery order.
template <ConcreteElement E>
ConcreteClosure<E> build_from_concrete(std::span<const E> gens, std::size_t cap = 10000,
                                       std::string label = "closure") {
  if (gens.empty()) throw Error("build_from_concrete: no generators");
  ConcreteClosure<E> out;
  std::vector<E>& elems = out.elements;
  auto& index = out.index;

  E id = [&] {
    try {
      return gens[0] * gens[0].inverse();
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw InconsistentElement(std::string("element operation failed: ") + e.what());
    }
  }();
  elems.push_back(id);
  index.emplace(id.key(), 0);

  std::vector<E> gen_list;
  for (const E& g : gens) {
    if (!index.count(g.key())) {
      index.emplace(g.key(), static_cast<Elt>(elems.size()));
      elems.push_back(g);
    }
    gen_list.push_back(g);
  }
  // During BFS every still-unfilled element records how it was first
  // reached: elems[i] = elems[parent[i]] * gen_list[via[i]].
  std::vector<std::uint32_t> parent(elems.size(), 0);
  std::vector<std::uint32_t> via(elems.size(), UINT32_MAX);

  try {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = 0; j < gen_list.size(); ++j) {
        E prod = elems[i] * gen_list[j];
        std::string k = prod.key();
        auto it = index.find(k);
        if (it == index.end()) {
          if (elems.size() >= cap)
            throw CapExceeded("closure exceeded cap of " + std::to_string(cap));
          index.emplace(std::move(k), static_cast<Elt>(elems.size()));
          elems.push_back(std::move(prod));
          parent.push_back(static_cast<std::uint32_t>(i));
          via.push_back(static_cast<std::uint32_t>(j));
        }
      }
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw InconsistentElement(std::string("element operation failed: ") + e.what());
  }

  const std::size_t n = elems.size();
  if (n > 0xFFFF) throw CapExceeded("closure order exceeds index range");

  // Columns for right-multiplication by each generator, computed concretely.
  std::vector<std::vector<Elt>> gen_col(gen_list.size(), std::vector<Elt>(n));
  for (std::size_t j = 0; j < gen_list.size(); ++j)
    for (std::size_t x = 0; x < n; ++x) {
      auto it = index.find((elems[x] * gen_list[j]).key());
      if (it == index.end()) throw InconsistentElement("closure is not closed");
      gen_col[j][x] = it->second;
    }

  // Fill the table by factoring each column through its discovery chain:
  // mul(x, id) = x and mul(x, p*g) = mul(mul(x, p), g).
  std::vector<Elt> mul(n * n);
  for (std::size_t x = 0; x < n; ++x) mul[x * n + 0] = static_cast<Elt>(x);
  for (std::size_t y = 1; y < n; ++y) {
    if (via[y] == UINT32_MAX) {
      // y is one of the seed generators; use its concrete column.
      std::size_t j = SIZE_MAX;
      for (std::size_t t = 0; t < gen_list.size(); ++t)
        if (index.at(gen_list[t].key()) == y) {
          j = t;
          break;
        }
      for (std::size_t x = 0; x < n; ++x) mul[x * n + y] = gen_col[j][x];
    } else {
      std::uint32_t p = parent[y], j = via[y];
      for (std::size_t x = 0; x < n; ++x)
        mul[x * n + y] = gen_col[j][mul[x * n + p]];
    }
  }

  out.table = std::make_shared<GroupTable>(
      GroupTable::from_mul(n, std::move(mul), std::move(label)));
  return out;
}

}  // namespace gj

#endif
