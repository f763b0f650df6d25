#include "gj/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

namespace gj {

GroupTable GroupTable::from_mul(std::size_t order, std::vector<Elt> mul, std::string label) {
  if (order == 0 || mul.size() != order * order)
    throw InvalidTable("multiplication table has wrong size");
  GroupTable g;
  g.order_ = order;
  g.mul_ = std::move(mul);
  g.label_ = std::move(label);

  // Identity at 0 and the Latin-square property, exactly.
  std::vector<bool> seen(order);
  for (std::size_t a = 0; a < order; ++a) {
    if (g.mul_[a] != a || g.mul_[a * order] != a)
      throw InvalidTable("index 0 is not a two-sided identity");
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t b = 0; b < order; ++b) {
      Elt p = g.mul_[a * order + b];
      if (p >= order || seen[p]) throw InvalidTable("row is not a permutation");
      seen[p] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t b = 0; b < order; ++b) {
      Elt p = g.mul_[b * order + a];
      if (p >= order || seen[p]) throw InvalidTable("column is not a permutation");
      seen[p] = true;
    }
  }

  g.inv_.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < order; ++b) {
      if (g.mul_[a * order + b] == kId) {
        if (g.mul_[b * order + a] != kId)
          throw InvalidTable("left and right inverses disagree");
        g.inv_[a] = static_cast<Elt>(b);
        found = true;
        break;
      }
    }
    if (!found) throw InvalidTable("element without inverse");
  }

  g.elt_order_.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    unsigned k = 1;
    Elt x = static_cast<Elt>(a);
    while (x != kId) {
      x = g.mul_[x * order + a];
      ++k;
      if (k > order) throw InvalidTable("element order exceeds group order");
    }
    g.elt_order_[a] = k;
  }
  return g;
}

Elt GroupTable::pow(Elt a, long long e) const {
  unsigned n = elt_order(a);
  long long r = e % n;
  if (r < 0) r += n;
  Elt acc = kId;
  for (long long i = 0; i < r; ++i) acc = mul(acc, a);
  return acc;
}

bool GroupTable::check_associativity_full() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      for (std::size_t c = 0; c < order_; ++c)
        if (mul(mul(static_cast<Elt>(a), static_cast<Elt>(b)), static_cast<Elt>(c)) !=
            mul(static_cast<Elt>(a), mul(static_cast<Elt>(b), static_cast<Elt>(c))))
          return false;
  return true;
}

bool GroupTable::check_associativity_sampled(std::size_t triples, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dist(0, order_ - 1);
  for (std::size_t i = 0; i < triples; ++i) {
    Elt a = static_cast<Elt>(dist(rng));
    Elt b = static_cast<Elt>(dist(rng));
    Elt c = static_cast<Elt>(dist(rng));
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  return true;
}

std::vector<Elt> SubSet::elements() const {
  std::vector<Elt> out;
  out.reserve(size);
  members.for_each([&](std::size_t i) { out.push_back(static_cast<Elt>(i)); });
  return out;
}

bool GroupMap::is_homomorphism() const {
  const GroupTable& g = *domain;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (image[g.mul(static_cast<Elt>(a), static_cast<Elt>(b))] !=
          codomain->mul(image[a], image[b]))
        return false;
  return true;
}

bool GroupMap::is_bijective() const {
  if (domain->order() != codomain->order()) return false;
  Bitvec seen(codomain->order());
  for (Elt y : image) {
    if (seen.test(y)) return false;
    seen.set(y);
  }
  return true;
}

SubSet GroupMap::kernel() const {
  Bitvec b(domain->order());
  for (std::size_t x = 0; x < domain->order(); ++x)
    if (image[x] == GroupTable::kId) b.set(x);
  return SubSet(*domain, std::move(b));
}

SubSet GroupMap::image_set() const {
  Bitvec b(codomain->order());
  for (Elt y : image) b.set(y);
  return SubSet(*codomain, std::move(b));
}

GroupMap GroupMap::then(const GroupMap& next) const {
  GroupMap r;
  r.domain = domain;
  r.codomain = next.codomain;
  r.image.resize(image.size());
  for (std::size_t x = 0; x < image.size(); ++x) r.image[x] = next.image[image[x]];
  return r;
}

SubSet full_subset(const GroupTable& g) {
  Bitvec b(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) b.set(i);
  return SubSet(g, std::move(b));
}

SubSet trivial_subset(const GroupTable& g) {
  Bitvec b(g.order());
  b.set(GroupTable::kId);
  return SubSet(g, std::move(b));
}

namespace {

// Multiplicative closure: elems[0..closed) are pairwise closed already.
SubSet closure_impl(const GroupTable& g, Bitvec bits, std::vector<Elt> elems,
                    std::size_t closed) {
  const std::size_t n = g.order();
  for (std::size_t i = closed; i < elems.size(); ++i) {
    if (elems.size() == n) break;
    for (std::size_t j = 0; j <= i; ++j) {
      Elt p = g.mul(elems[i], elems[j]);
      if (!bits.test(p)) {
        bits.set(p);
        elems.push_back(p);
      }
      p = g.mul(elems[j], elems[i]);
      if (!bits.test(p)) {
        bits.set(p);
        elems.push_back(p);
      }
    }
  }
  SubSet s(g, std::move(bits));
  return s;
}

}  // namespace

SubSet subgroup_closure(const GroupTable& g, std::span<const Elt> seed) {
  Bitvec bits(g.order());
  std::vector<Elt> elems;
  bits.set(GroupTable::kId);
  elems.push_back(GroupTable::kId);
  for (Elt x : seed)
    if (!bits.test(x)) {
      bits.set(x);
      elems.push_back(x);
    }
  return closure_impl(g, std::move(bits), std::move(elems), 0);
}

SubSet subgroup_closure_extend(const GroupTable& g, const SubSet& base,
                               std::span<const Elt> extra) {
  Bitvec bits = base.members;
  std::vector<Elt> elems = base.elements();
  std::size_t closed = elems.size();
  for (Elt x : extra)
    if (!bits.test(x)) {
      bits.set(x);
      elems.push_back(x);
    }
  return closure_impl(g, std::move(bits), std::move(elems), closed);
}

SubSet center(const GroupTable& g) {
  Bitvec b(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (std::size_t y = 0; y < g.order() && central; ++y)
      central = g.mul(static_cast<Elt>(x), static_cast<Elt>(y)) ==
                g.mul(static_cast<Elt>(y), static_cast<Elt>(x));
    if (central) b.set(x);
  }
  return SubSet(g, std::move(b));
}

SubSet centralizer(const GroupTable& g, const SubSet& s) {
  std::vector<Elt> elems = s.elements();
  Bitvec b(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elt y : elems) {
      if (g.mul(static_cast<Elt>(x), y) != g.mul(y, static_cast<Elt>(x))) {
        ok = false;
        break;
      }
    }
    if (ok) b.set(x);
  }
  return SubSet(g, std::move(b));
}

SubSet normalizer(const GroupTable& g, const SubSet& s) {
  std::vector<Elt> elems = s.elements();
  Bitvec b(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elt y : elems) {
      if (!s.members.test(g.conj(static_cast<Elt>(x), y))) {
        ok = false;
        break;
      }
    }
    if (ok) b.set(x);
  }
  return SubSet(g, std::move(b));
}

bool is_normal(const GroupTable& g, const SubSet& s) {
  std::vector<Elt> elems = s.elements();
  for (std::size_t x = 0; x < g.order(); ++x)
    for (Elt y : elems)
      if (!s.members.test(g.conj(static_cast<Elt>(x), y))) return false;
  return true;
}

bool is_abelian_subset(const GroupTable& g, const SubSet& s) {
  std::vector<Elt> elems = s.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (g.mul(elems[i], elems[j]) != g.mul(elems[j], elems[i])) return false;
  return true;
}

bool is_abelian(const GroupTable& g) { return is_abelian_subset(g, full_subset(g)); }

ConjClassPartition conjugacy_classes(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<Elt> gens = small_generating_set(g);
  ConjClassPartition part;
  part.class_of.assign(n, UINT32_MAX);
  for (std::size_t x = 0; x < n; ++x) {
    if (part.class_of[x] != UINT32_MAX) continue;
    std::uint32_t cls = static_cast<std::uint32_t>(part.representatives.size());
    part.representatives.push_back(static_cast<Elt>(x));
    std::vector<Elt> queue{static_cast<Elt>(x)};
    part.class_of[x] = cls;
    std::size_t sz = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Elt y = queue[qi];
      for (Elt gen : gens) {
        Elt z = g.conj(gen, y);
        if (part.class_of[z] == UINT32_MAX) {
          part.class_of[z] = cls;
          queue.push_back(z);
          ++sz;
        }
      }
    }
    part.sizes.push_back(sz);
  }
  return part;
}

std::vector<Elt> small_generating_set(const GroupTable& g) {
  return small_generating_set(g, full_subset(g));
}

std::vector<Elt> small_generating_set(const GroupTable& g, const SubSet& sub) {
  std::vector<Elt> gens;
  SubSet cur = trivial_subset(g);
  if (cur.size == sub.size) return gens;
  std::vector<Elt> elems = sub.elements();
  for (Elt x : elems) {
    if (cur.members.test(x)) continue;
    gens.push_back(x);
    Elt one[1] = {x};
    cur = subgroup_closure_extend(g, cur, one);
    if (cur.size == sub.size) break;
  }
  return gens;
}

QuotientResult quotient(const GroupTable& g, const SubSet& n) {
  if (!is_normal(g, n)) throw NotNormal("quotient: subgroup is not normal");
  const std::size_t order = g.order();
  std::vector<Elt> nelems = n.elements();
  std::vector<std::uint32_t> coset_of(order, UINT32_MAX);
  std::vector<Elt> reps;
  for (std::size_t x = 0; x < order; ++x) {
    if (coset_of[x] != UINT32_MAX) continue;
    std::uint32_t c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(static_cast<Elt>(x));
    for (Elt y : nelems) coset_of[g.mul(static_cast<Elt>(x), y)] = c;
  }
  const std::size_t m = reps.size();
  std::vector<Elt> mul(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      mul[a * m + b] = static_cast<Elt>(coset_of[g.mul(reps[a], reps[b])]);
  QuotientResult r;
  r.table = std::make_shared<GroupTable>(
      GroupTable::from_mul(m, std::move(mul), g.label() + "/N" + std::to_string(n.size)));
  r.projection.domain = &g;
  r.projection.codomain = r.table.get();
  r.projection.image.resize(order);
  for (std::size_t x = 0; x < order; ++x)
    r.projection.image[x] = static_cast<Elt>(coset_of[x]);
  return r;
}

SubSet commutator_subgroup(const GroupTable& g, const SubSet& a, const SubSet& b) {
  std::vector<Elt> ae = a.elements(), be = b.elements();
  Bitvec seed_bits(g.order());
  std::vector<Elt> seed;
  for (Elt x : ae)
    for (Elt y : be) {
      Elt c = g.comm(x, y);
      if (!seed_bits.test(c)) {
        seed_bits.set(c);
        seed.push_back(c);
      }
    }
  return subgroup_closure(g, seed);
}

std::vector<SubSet> derived_series(const GroupTable& g) {
  std::vector<SubSet> series;
  series.push_back(full_subset(g));
  while (true) {
    const SubSet& last = series.back();
    SubSet next = commutator_subgroup(g, last, last);
    if (next.members == last.members) break;
    series.push_back(std::move(next));
    if (series.back().size == 1) break;
  }
  return series;
}

SubSet perfect_core(const GroupTable& g) { return derived_series(g).back(); }

std::vector<unsigned> abelian_invariants(const GroupTable& g, const SubSet& s) {
  if (!is_abelian_subset(g, s)) throw NotAbelian("abelian_invariants: subset is not abelian");
  std::size_t n = s.size;
  if (n <= 1) return {};
  std::vector<Elt> elems = s.elements();
  // Primary decomposition from order statistics: for each prime p, the
  // count of elements of order dividing p^j determines the partition.
  std::vector<unsigned> primes;
  {
    std::size_t m = n;
    for (unsigned p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        primes.push_back(p);
        while (m % p == 0) m /= p;
      }
    if (m > 1) primes.push_back(static_cast<unsigned>(m));
  }
  // exponents[p] = partition e_1 >= e_2 >= ... of the p-part.
  std::vector<std::vector<unsigned>> parts;
  for (unsigned p : primes) {
    std::vector<std::size_t> cnt;  // cnt[j] = #{x : ord(x) | p^j}
    cnt.push_back(1);
    while (true) {
      unsigned long long pj = 1;
      for (std::size_t t = 0; t < cnt.size(); ++t) pj *= p;
      std::size_t c = 0;
      for (Elt x : elems) {
        unsigned o = g.elt_order(x);
        // ord divides p^j iff ord is a power of p and <= p^j
        bool ppow = true;
        unsigned oo = o;
        while (oo % p == 0) oo /= p;
        ppow = (oo == 1);
        if (ppow && o <= pj) ++c;
      }
      if (c == cnt.back()) break;
      cnt.push_back(c);
    }
    // #{i : e_i >= j} = log_p(cnt[j] / cnt[j-1])
    std::vector<unsigned> conj_part;
    for (std::size_t j = 1; j < cnt.size(); ++j) {
      std::size_t ratio = cnt[j] / cnt[j - 1];
      unsigned k = 0;
      while (ratio > 1) {
        ratio /= p;
        ++k;
      }
      conj_part.push_back(k);
    }
    // Transpose the conjugate partition into e_1 >= e_2 >= ...
    std::vector<unsigned> es;
    if (!conj_part.empty()) {
      for (unsigned i = 0; i < conj_part[0]; ++i) {
        unsigned e = 0;
        for (unsigned j = 0; j < conj_part.size(); ++j)
          if (conj_part[j] > i) e = j + 1;
        es.push_back(e);
      }
    }
    parts.push_back(std::move(es));
  }
  std::size_t k = 0;
  for (const auto& es : parts) k = std::max(k, es.size());
  std::vector<unsigned> factors;  // descending: d_k | ... | d_1
  for (std::size_t i = 0; i < k; ++i) {
    unsigned long long d = 1;
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
      if (i < parts[pi].size()) {
        for (unsigned t = 0; t < parts[pi][i]; ++t) d *= primes[pi];
      }
    }
    factors.push_back(static_cast<unsigned>(d));
  }
  std::reverse(factors.begin(), factors.end());  // ascending divisibility
  return factors;
}

std::vector<unsigned> abelian_invariants(const GroupTable& g) {
  return abelian_invariants(g, full_subset(g));
}

std::map<unsigned, std::size_t> element_order_census(const GroupTable& g) {
  std::map<unsigned, std::size_t> census;
  for (std::size_t x = 0; x < g.order(); ++x) ++census[g.elt_order(static_cast<Elt>(x))];
  return census;
}

std::size_t involution_count(const GroupTable& g) {
  std::size_t c = 0;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.elt_order(static_cast<Elt>(x)) == 2) ++c;
  return c;
}

Materialized materialize(const GroupTable& g, const SubSet& s) {
  std::vector<Elt> elems = s.elements();  // ascending; identity first
  const std::size_t m = elems.size();
  std::vector<std::uint32_t> to_sub(g.order(), UINT32_MAX);
  for (std::size_t i = 0; i < m; ++i) to_sub[elems[i]] = static_cast<std::uint32_t>(i);
  std::vector<Elt> mul(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Elt p = g.mul(elems[a], elems[b]);
      std::uint32_t idx = to_sub[p];
      if (idx == UINT32_MAX) throw Error("materialize: subset is not closed");
      mul[a * m + b] = static_cast<Elt>(idx);
    }
  Materialized out;
  out.table = std::make_shared<GroupTable>(GroupTable::from_mul(
      m, std::move(mul), g.label() + "|sub" + std::to_string(m)));
  out.to_parent = std::move(elems);
  return out;
}

SubSet map_image(const GroupMap& f, const SubSet& s) {
  Bitvec b(f.codomain->order());
  s.members.for_each([&](std::size_t x) { b.set(f.image[x]); });
  return SubSet(*f.codomain, std::move(b));
}

}  // namespace gj
