#include "gj/build.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "gj/automorphisms.hpp"
#include "gj/closure.hpp"
#include "gj/field.hpp"
#include "gj/jordan.hpp"
#include "gj/matrix.hpp"
#include "gj/perm.hpp"

namespace gj {
namespace {

using TablePtr = std::shared_ptr<const GroupTable>;

TablePtr share(GroupTable t) { return std::make_shared<const GroupTable>(std::move(t)); }

TablePtr relabel(const GroupTable& t, std::string label) {
  GroupTable copy = t;
  copy.set_label(std::move(label));
  return share(std::move(copy));
}

GroupTable cyclic_table(std::size_t n, std::string label) {
  std::vector<Elt> mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = static_cast<Elt>((i + j) % n);
  return GroupTable::from_mul(n, std::move(mul), std::move(label));
}

TablePtr trivial_table(std::string label) {
  return share(GroupTable::from_mul(1, std::vector<Elt>{0}, std::move(label)));
}

GroupMap identity_map(const GroupTable& g) {
  GroupMap f;
  f.domain = &g;
  f.codomain = &g;
  f.image.resize(g.order());
  std::iota(f.image.begin(), f.image.end(), Elt{0});
  return f;
}

GroupMap inversion_map(const GroupTable& g) {
  GroupMap f;
  f.domain = &g;
  f.codomain = &g;
  f.image.resize(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) f.image[x] = g.inv(static_cast<Elt>(x));
  return f;
}

TablePtr perm_group(const std::vector<Perm>& gens, std::size_t expect, std::string label) {
  auto c = build_from_concrete<Perm>(std::span<const Perm>(gens.data(), gens.size()),
                                     expect, std::move(label));
  return c.table;
}

TablePtr mat_group(const std::vector<Mat>& gens, std::size_t expect, std::string label) {
  auto c = build_from_concrete<Mat>(std::span<const Mat>(gens.data(), gens.size()),
                                    expect, std::move(label));
  return c.table;
}

// Cycle (c0 c1 ... ck) assembled from adjacent transpositions.
Perm chain_cycle(int n, const std::vector<int>& pts) {
  Perm acc = Perm::identity(n);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    acc = acc * Perm::cycle(n, {pts[i], pts[i + 1]});
  return acc;
}

std::size_t factorial(int n) {
  std::size_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::size_t>(i);
  return r;
}

TablePtr make_q8() {
  const FieldDesc& f = gf(3, 2);
  Mat mi(f, 2);
  mi.set(0, 0, f.gen_x());
  mi.set(1, 1, f.neg(f.gen_x()));
  Mat mj = Mat::from_ints(f, 2, {0, 1, 2, 0});
  return mat_group({mi, mj}, 8, "Q8");
}

TablePtr make_tstar() {
  const FieldDesc& f = gf(3, 1);
  Mat mi = Mat::from_ints(f, 2, {0, 1, 2, 0});
  Mat mj = Mat::from_ints(f, 2, {1, 1, 1, 2});
  Mat mw = Mat::from_ints(f, 2, {2, 2, 1, 0});
  return mat_group({mi, mj, mw}, 24, "Tstar");
}

TablePtr make_istar() {
  const FieldDesc& f = gf(5, 1);
  Mat mi = Mat::from_ints(f, 2, {0, 1, 4, 0});
  Mat mj = Mat::from_ints(f, 2, {2, 0, 0, 3});
  Mat mu = Mat::from_ints(f, 2, {0, 1, 4, 3});
  return mat_group({mi, mj, mu}, 120, "Istar");
}

std::vector<Elt> central_involutions(const GroupTable& g) {
  SubSet z = center(g);
  std::vector<Elt> out;
  z.members.for_each([&](std::size_t i) {
    if (g.elt_order(static_cast<Elt>(i)) == 2) out.push_back(static_cast<Elt>(i));
  });
  return out;
}

std::vector<Elt> compose_images(const std::vector<Elt>& outer, const std::vector<Elt>& inner) {
  std::vector<Elt> r(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x) r[x] = outer[inner[x]];
  return r;
}

// Non-inner automorphisms of n whose m-th power is the identity, in the
// canonical (image-vector sorted) order.
std::vector<GroupMap> outer_candidates(const GroupTable& n, std::size_t m) {
  std::vector<GroupMap> auts = automorphisms(n);
  std::vector<Elt> id(n.order());
  std::iota(id.begin(), id.end(), Elt{0});
  std::vector<GroupMap> out;
  for (GroupMap& f : auts) {
    if (is_inner(n, f)) continue;
    std::vector<Elt> acc = id;
    for (std::size_t k = 0; k < m; ++k) acc = compose_images(f.image, acc);
    if (acc == id) out.push_back(std::move(f));
  }
  return out;
}

// Group-level checks an action search uses to pick among candidates, keyed
// by the canonical expression being built.
const Certificate* action_certificate(const std::string& key) {
  static const std::map<std::string, Certificate>* reg = [] {
    auto* r = new std::map<std::string, Certificate>;
    {
      Certificate c;
      c.normal_abelian_invariants = std::vector<std::vector<unsigned>>{{}, {2}, {4}};
      (*r)["semi(Tstar, C(4), outer2)"] = c;
    }
    {
      Certificate c;
      c.iso_reference = "C(4) x S(3)";
      (*r)["semi(C(12), C(2), outer2)"] = c;
    }
    {
      Certificate c;
      c.iso_reference = "semi(C(6) x C(6), C(2), swap)";
      (*r)["semi(Dic(12), C(6), outer2)"] = c;
    }
    {
      Certificate c;
      c.involutions = 1;
      (*r)["cext(Tstar, outer2, 2, zcenter)"] = c;
      (*r)["cext(SL(2,5), outer2, 2, zcenter)"] = c;
    }
    {
      Certificate c;
      c.involution_beyond = 120;
      (*r)["cext(SL(2,5), outer2, 2, id)"] = c;
    }
    return r;
  }();
  auto it = reg->find(key);
  return it == reg->end() ? nullptr : &it->second;
}

std::string invariants_str(const std::vector<unsigned>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s.empty() ? std::string("1") : s;
}

}  // namespace

DirectProduct direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t na = a.order(), nb = b.order();
  const std::size_t total = na * nb;
  if (total > kBuildOrderCap)
    throw CapExceeded("direct product order " + std::to_string(total) + " exceeds cap " +
                      std::to_string(kBuildOrderCap));
  std::vector<Elt> mul(total * total);
  for (std::size_t a1 = 0; a1 < na; ++a1)
    for (std::size_t b1 = 0; b1 < nb; ++b1) {
      const std::size_t i1 = a1 * nb + b1;
      for (std::size_t a2 = 0; a2 < na; ++a2) {
        Elt pa = a.mul(static_cast<Elt>(a1), static_cast<Elt>(a2));
        const std::size_t row = i1 * total + a2 * nb;
        for (std::size_t b2 = 0; b2 < nb; ++b2)
          mul[row + b2] = static_cast<Elt>(
              static_cast<std::size_t>(pa) * nb +
              b.mul(static_cast<Elt>(b1), static_cast<Elt>(b2)));
      }
    }
  DirectProduct d;
  d.table = share(GroupTable::from_mul(total, std::move(mul), a.label() + " x " + b.label()));
  const GroupTable* prod = d.table.get();
  d.proj1 = GroupMap{prod, &a, std::vector<Elt>(total)};
  d.proj2 = GroupMap{prod, &b, std::vector<Elt>(total)};
  for (std::size_t a1 = 0; a1 < na; ++a1)
    for (std::size_t b1 = 0; b1 < nb; ++b1) {
      d.proj1.image[a1 * nb + b1] = static_cast<Elt>(a1);
      d.proj2.image[a1 * nb + b1] = static_cast<Elt>(b1);
    }
  d.inj1 = GroupMap{&a, prod, std::vector<Elt>(na)};
  d.inj2 = GroupMap{&b, prod, std::vector<Elt>(nb)};
  for (std::size_t a1 = 0; a1 < na; ++a1) d.inj1.image[a1] = static_cast<Elt>(a1 * nb);
  for (std::size_t b1 = 0; b1 < nb; ++b1) d.inj2.image[b1] = static_cast<Elt>(b1);
  return d;
}

std::shared_ptr<const GroupTable> semidirect_product(const GroupTable& n,
                                                     const GroupTable& h,
                                                     const std::vector<GroupMap>& action,
                                                     std::string label) {
  const std::size_t nn = n.order(), nh = h.order();
  if (action.size() != nh)
    throw Error("semidirect product: need one action map per acting element");
  const std::size_t total = nn * nh;
  if (total > kBuildOrderCap)
    throw CapExceeded("semidirect product order " + std::to_string(total) + " exceeds cap " +
                      std::to_string(kBuildOrderCap));
  for (std::size_t a = 0; a < nh; ++a) {
    const GroupMap& f = action[a];
    if (f.domain != &n || f.codomain != &n || f.image.size() != nn)
      throw Error("semidirect product: action map " + std::to_string(a) +
                  " is not an endomap of the kernel");
    if (!f.is_homomorphism() || !f.is_bijective())
      throw NotAHomomorphism("semidirect product: action map " + std::to_string(a) +
                             " is not an automorphism of the kernel");
  }
  for (std::size_t x = 0; x < nn; ++x)
    if (action[GroupTable::kId].image[x] != x)
      throw NotAHomomorphism("semidirect product: the identity must act trivially");
  for (std::size_t a = 0; a < nh; ++a)
    for (std::size_t b = 0; b < nh; ++b) {
      Elt ab = h.mul(static_cast<Elt>(a), static_cast<Elt>(b));
      for (std::size_t x = 0; x < nn; ++x)
        if (action[a].image[action[b].image[x]] != action[ab].image[x])
          throw NotAHomomorphism("semidirect product: the action is not a homomorphism");
    }
  std::vector<Elt> mul(total * total);
  for (std::size_t h1 = 0; h1 < nh; ++h1)
    for (std::size_t n1 = 0; n1 < nn; ++n1) {
      const std::size_t i1 = h1 * nn + n1;
      for (std::size_t h2 = 0; h2 < nh; ++h2) {
        const std::size_t hr = static_cast<std::size_t>(
            h.mul(static_cast<Elt>(h1), static_cast<Elt>(h2)));
        const std::size_t row = i1 * total + h2 * nn;
        const std::vector<Elt>& act = action[h1].image;
        for (std::size_t n2 = 0; n2 < nn; ++n2)
          mul[row + n2] = static_cast<Elt>(
              hr * nn + n.mul(static_cast<Elt>(n1), act[n2]));
      }
    }
  return share(GroupTable::from_mul(total, std::move(mul), std::move(label)));
}

std::shared_ptr<const GroupTable> cyclic_extension(const GroupTable& n,
                                                   const GroupMap& phi,
                                                   std::size_t m, Elt z,
                                                   std::string label) {
  const std::size_t nn = n.order();
  if (m == 0) throw Error("cyclic extension: exponent must be positive");
  const std::size_t total = nn * m;
  if (total > kBuildOrderCap)
    throw CapExceeded("cyclic extension order " + std::to_string(total) + " exceeds cap " +
                      std::to_string(kBuildOrderCap));
  if (phi.domain != &n || phi.codomain != &n || phi.image.size() != nn)
    throw InconsistentExtension("cyclic extension: twist is not an endomap of the kernel");
  if (!phi.is_homomorphism() || !phi.is_bijective())
    throw InconsistentExtension("cyclic extension: twist is not an automorphism");
  if (static_cast<std::size_t>(z) >= nn)
    throw InconsistentExtension("cyclic extension: relator value lies outside the kernel");
  for (std::size_t x = 0; x < nn; ++x)
    if (n.mul(z, static_cast<Elt>(x)) != n.mul(static_cast<Elt>(x), z))
      throw InconsistentExtension("cyclic extension: relator value is not central");
  if (phi.image[z] != z)
    throw InconsistentExtension("cyclic extension: twist moves the relator value");
  std::vector<std::vector<Elt>> pw(m);
  pw[0].resize(nn);
  std::iota(pw[0].begin(), pw[0].end(), Elt{0});
  for (std::size_t k = 1; k < m; ++k) pw[k] = compose_images(phi.image, pw[k - 1]);
  for (std::size_t x = 0; x < nn; ++x)
    if (phi.image[pw[m - 1][x]] != x)
      throw InconsistentExtension("cyclic extension: twist order does not divide the exponent");
  std::vector<Elt> mul(total * total);
  for (std::size_t k1 = 0; k1 < m; ++k1)
    for (std::size_t a1 = 0; a1 < nn; ++a1) {
      const std::size_t i1 = k1 * nn + a1;
      for (std::size_t k2 = 0; k2 < m; ++k2) {
        std::size_t k = k1 + k2;
        bool wrap = k >= m;
        if (wrap) k -= m;
        const std::size_t row = i1 * total + k2 * nn;
        const std::vector<Elt>& tw = pw[k1];
        for (std::size_t a2 = 0; a2 < nn; ++a2) {
          Elt v = n.mul(static_cast<Elt>(a1), tw[a2]);
          if (wrap) v = n.mul(v, z);
          mul[row + a2] = static_cast<Elt>(k * nn + v);
        }
      }
    }
  return share(GroupTable::from_mul(total, std::move(mul), std::move(label)));
}

std::shared_ptr<const GroupTable> central_product2(const GroupTable& a,
                                                   const GroupTable& b,
                                                   std::string label) {
  std::vector<Elt> za = central_involutions(a);
  std::vector<Elt> zb = central_involutions(b);
  if (za.empty())
    throw NotIsomorphicCenters("central product: " + a.label() + " has no central involution");
  if (zb.empty())
    throw NotIsomorphicCenters("central product: " + b.label() + " has no central involution");
  if (za.size() > 1)
    throw NotCentral("central product: central involution of " + a.label() + " is not unique");
  if (zb.size() > 1)
    throw NotCentral("central product: central involution of " + b.label() + " is not unique");
  DirectProduct d = direct_product(a, b);
  Elt zz = static_cast<Elt>(static_cast<std::size_t>(za[0]) * b.order() + zb[0]);
  Elt seed[1] = {zz};
  SubSet glued = subgroup_closure(*d.table, seed);
  QuotientResult q = quotient(*d.table, glued);
  return relabel(*q.table, std::move(label));
}

std::shared_ptr<const GroupTable> Builder::build(const std::string& text) {
  return build(parse_expr(text));
}

std::shared_ptr<const GroupTable> Builder::build(const ExprPtr& expr) {
  if (!expr) throw Error("build: empty expression");
  std::string key = render(*expr);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  TablePtr t = build_node(*expr);
  std::lock_guard<std::mutex> lk(mu_);
  auto [it, inserted] = cache_.emplace(std::move(key), std::move(t));
  return it->second;
}

std::vector<std::string> Builder::notes() const {
  std::lock_guard<std::mutex> lk(mu_);
  return notes_;
}

void Builder::note(std::string msg) {
  std::lock_guard<std::mutex> lk(mu_);
  notes_.push_back(std::move(msg));
}

std::shared_ptr<const GroupTable> Builder::build_node(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::Named:
      return build_named(e);
    case GroupExpr::Kind::Direct: {
      TablePtr a = build(e.left);
      TablePtr b = build(e.right);
      return direct_product(*a, *b).table;
    }
    case GroupExpr::Kind::Swap2: {
      auto dd = std::make_shared<GroupExpr>();
      dd->kind = GroupExpr::Kind::Direct;
      dd->left = e.left;
      dd->right = e.left;
      TablePtr nsq = build(ExprPtr(dd));
      TablePtr c2 = build("C(2)");
      const std::size_t w = build(e.left)->order();
      GroupMap sw{nsq.get(), nsq.get(), std::vector<Elt>(nsq->order())};
      for (std::size_t a = 0; a < w; ++a)
        for (std::size_t b = 0; b < w; ++b)
          sw.image[a * w + b] = static_cast<Elt>(b * w + a);
      std::vector<GroupMap> act{identity_map(*nsq), std::move(sw)};
      return semidirect_product(*nsq, *c2, act, render(e));
    }
    case GroupExpr::Kind::CentralProduct: {
      TablePtr a = build(e.left);
      TablePtr b = build(e.right);
      return central_product2(*a, *b, render(e));
    }
    case GroupExpr::Kind::Semidirect:
      return build_semidirect(e);
    case GroupExpr::Kind::CyclicExt:
      return build_cyclic_ext(e);
  }
  throw Error("build: unknown expression kind");
}

std::shared_ptr<const GroupTable> Builder::build_semidirect(const GroupExpr& e) {
  TablePtr np = build(e.left);
  TablePtr hp = build(e.right);
  const GroupTable& n = *np;
  const GroupTable& h = *hp;
  const std::string lab = render(e);

  if (e.action == "invert") {
    if (!is_abelian(n)) throw NotAbelian("invert action needs an abelian kernel: " + lab);
    // The acting group splits over the subgroup generated by all squares
    // and commutators; the nontrivial coset inverts the kernel.
    Bitvec seen(h.order());
    std::vector<Elt> seed;
    for (std::size_t x = 0; x < h.order(); ++x) {
      Elt s = h.mul(static_cast<Elt>(x), static_cast<Elt>(x));
      if (!seen.test(s)) {
        seen.set(s);
        seed.push_back(s);
      }
    }
    for (std::size_t x = 0; x < h.order(); ++x)
      for (std::size_t y = 0; y < h.order(); ++y) {
        Elt c = h.comm(static_cast<Elt>(x), static_cast<Elt>(y));
        if (!seen.test(c)) {
          seen.set(c);
          seed.push_back(c);
        }
      }
    SubSet v = subgroup_closure(h, seed);
    if (v.size * 2 != h.order())
      throw Error("invert action needs an index-2 coset to act by: " + lab);
    GroupMap id = identity_map(n);
    GroupMap inv = inversion_map(n);
    std::vector<GroupMap> act;
    act.reserve(h.order());
    for (std::size_t x = 0; x < h.order(); ++x)
      act.push_back(v.members.test(x) ? id : inv);
    return semidirect_product(n, h, act, lab);
  }

  if (e.action == "swap") {
    if (e.left->kind != GroupExpr::Kind::Direct ||
        render(*e.left->left) != render(*e.left->right))
      throw Error("swap action needs a square direct-product kernel: " + lab);
    if (h.order() != 2) throw Error("swap action needs an order-2 acting group: " + lab);
    const std::size_t w = build(e.left->left)->order();
    GroupMap sw{&n, &n, std::vector<Elt>(n.order())};
    for (std::size_t a = 0; a < w; ++a)
      for (std::size_t b = 0; b < w; ++b) sw.image[a * w + b] = static_cast<Elt>(b * w + a);
    std::vector<GroupMap> act{identity_map(n), std::move(sw)};
    return semidirect_product(n, h, act, lab);
  }

  if (e.action == "outer2") {
    const std::size_t m = h.order();
    Elt t = 0;
    bool cyclic = false;
    for (std::size_t x = 0; x < m; ++x)
      if (h.elt_order(static_cast<Elt>(x)) == m) {
        t = static_cast<Elt>(x);
        cyclic = true;
        break;
      }
    if (!cyclic) throw Error("outer2 action needs a cyclic acting group: " + lab);
    std::vector<GroupMap> cands = outer_candidates(n, m);
    if (cands.empty())
      throw Error("outer2 action: no outer automorphism of order dividing " +
                  std::to_string(m) + ": " + lab);
    auto assemble = [&](const GroupMap& phi) {
      std::vector<std::vector<Elt>> pw(m);
      pw[0].resize(n.order());
      std::iota(pw[0].begin(), pw[0].end(), Elt{0});
      for (std::size_t k = 1; k < m; ++k) pw[k] = compose_images(phi.image, pw[k - 1]);
      std::vector<GroupMap> act(m);
      for (std::size_t k = 0; k < m; ++k)
        act[h.pow(t, static_cast<long long>(k))] = GroupMap{&n, &n, pw[k]};
      return semidirect_product(n, h, act, lab);
    };
    const Certificate* cert = action_certificate(lab);
    if (!cert) return assemble(cands[0]);
    std::vector<TablePtr> passers;
    for (const GroupMap& phi : cands) {
      TablePtr cand = assemble(phi);
      try {
        check_certificate(*cand, *cert);
        passers.push_back(std::move(cand));
      } catch (const CertificateFailed&) {
      }
    }
    if (passers.empty())
      throw CertificateFailed("no action candidate passes the registered checks: " + lab);
    for (std::size_t i = 1; i < passers.size(); ++i)
      if (!is_isomorphic(*passers[0], *passers[i]).isomorphic())
        note(lab + ": action candidates " + std::to_string(i) +
             " and 0 both pass the checks but are not isomorphic; keeping the first");
    return passers[0];
  }

  throw Error("unknown action: " + e.action);
}

std::shared_ptr<const GroupTable> Builder::build_cyclic_ext(const GroupExpr& e) {
  TablePtr np = build(e.left);
  const GroupTable& n = *np;
  const std::string lab = render(e);
  if (e.ext_m < 1) throw Error("cyclic extension exponent must be positive: " + lab);
  const std::size_t m = static_cast<std::size_t>(e.ext_m);
  Elt z = GroupTable::kId;
  if (e.zsel == "zcenter") {
    std::vector<Elt> zs = central_involutions(n);
    if (zs.size() != 1)
      throw InconsistentExtension("zcenter needs a unique central involution: " + lab);
    z = zs[0];
  }
  if (e.autsel == "id") return cyclic_extension(n, identity_map(n), m, z, lab);

  std::vector<GroupMap> cands;
  for (GroupMap& f : outer_candidates(n, m))
    if (f.image[z] == z) cands.push_back(std::move(f));
  if (cands.empty())
    throw Error("outer2 twist: no outer automorphism of order dividing " + std::to_string(m) +
                ": " + lab);
  const Certificate* cert = action_certificate(lab);
  if (!cert) return cyclic_extension(n, cands[0], m, z, lab);
  std::vector<TablePtr> passers;
  for (const GroupMap& phi : cands) {
    TablePtr cand = cyclic_extension(n, phi, m, z, lab);
    try {
      check_certificate(*cand, *cert);
      passers.push_back(std::move(cand));
    } catch (const CertificateFailed&) {
    }
  }
  if (passers.empty())
    throw CertificateFailed("no twist candidate passes the registered checks: " + lab);
  for (std::size_t i = 1; i < passers.size(); ++i)
    if (!is_isomorphic(*passers[0], *passers[i]).isomorphic())
      note(lab + ": twist candidates " + std::to_string(i) +
           " and 0 both pass the checks but are not isomorphic; keeping the first");
  return passers[0];
}

std::shared_ptr<const GroupTable> Builder::build_named(const GroupExpr& e) {
  const std::string& nm = e.name;
  const std::vector<int>& ps = e.params;
  const std::string lab = render(e);
  auto want = [&](std::size_t k) {
    if (ps.size() != k)
      throw Error(nm + " takes " + std::to_string(k) + " parameter(s): " + lab);
  };

  if (nm == "C") {
    want(1);
    if (ps[0] < 1 || static_cast<std::size_t>(ps[0]) > kBuildOrderCap)
      throw Error("cyclic order out of range: " + lab);
    return share(cyclic_table(static_cast<std::size_t>(ps[0]), lab));
  }
  if (nm == "D") {
    want(1);
    if (ps[0] < 1 || 2 * static_cast<std::size_t>(ps[0]) > kBuildOrderCap)
      throw Error("dihedral parameter out of range: " + lab);
    TablePtr cn = build("C(" + std::to_string(ps[0]) + ")");
    TablePtr c2 = build("C(2)");
    std::vector<GroupMap> act{identity_map(*cn), inversion_map(*cn)};
    TablePtr t = semidirect_product(*cn, *c2, act, lab);
    Certificate c;
    c.order = 2 * static_cast<std::size_t>(ps[0]);
    check_certificate(*t, c);
    return t;
  }
  if (nm == "Dic") {
    want(1);
    if (ps[0] < 8 || ps[0] % 4 != 0 || static_cast<std::size_t>(ps[0]) > kBuildOrderCap)
      throw Error("dicyclic parameter must be a multiple of 4, at least 8: " + lab);
    TablePtr cn = build("C(" + std::to_string(ps[0] / 2) + ")");
    TablePtr t = cyclic_extension(*cn, inversion_map(*cn), 2,
                                  static_cast<Elt>(ps[0] / 4), lab);
    Certificate c;
    c.order = static_cast<std::size_t>(ps[0]);
    c.involutions = 1;
    check_certificate(*t, c);
    return t;
  }
  if (nm == "S") {
    want(1);
    if (ps[0] < 1 || ps[0] > 6) throw Error("symmetric degree must be in [1,6]: " + lab);
    int d = ps[0];
    if (d == 1) return trivial_table(lab);
    std::vector<Perm> gens{Perm::cycle(d, {0, 1})};
    if (d >= 3) {
      std::vector<int> pts(static_cast<std::size_t>(d));
      std::iota(pts.begin(), pts.end(), 0);
      gens.push_back(chain_cycle(d, pts));
    }
    TablePtr t = perm_group(gens, factorial(d), lab);
    Certificate c;
    c.order = factorial(d);
    check_certificate(*t, c);
    return t;
  }
  if (nm == "A") {
    want(1);
    if (ps[0] < 1 || ps[0] > 7) throw Error("alternating degree must be in [1,7]: " + lab);
    int d = ps[0];
    if (d <= 2) return trivial_table(lab);
    std::vector<Perm> gens{Perm::cycle(d, {0, 1, 2})};
    if (d >= 4) {
      std::vector<int> pts;
      for (int i = (d % 2 == 1) ? 0 : 1; i < d; ++i) pts.push_back(i);
      gens.push_back(chain_cycle(d, pts));
    }
    TablePtr t = perm_group(gens, factorial(d) / 2, lab);
    Certificate c;
    c.order = factorial(d) / 2;
    check_certificate(*t, c);
    return t;
  }
  if (nm == "Q8") {
    want(0);
    TablePtr t = make_q8();
    Certificate c;
    c.order = 8;
    c.involutions = 1;
    c.center_invariants = std::vector<unsigned>{2};
    c.abelianization = std::vector<unsigned>{2, 2};
    check_certificate(*t, c);
    return t;
  }
  if (nm == "Tstar") {
    want(0);
    TablePtr t = make_tstar();
    Certificate c;
    c.order = 24;
    c.involutions = 1;
    c.center_invariants = std::vector<unsigned>{2};
    c.abelianization = std::vector<unsigned>{3};
    check_certificate(*t, c);
    return t;
  }
  if (nm == "Istar") {
    want(0);
    TablePtr t = make_istar();
    Certificate c;
    c.order = 120;
    c.involutions = 1;
    c.center_invariants = std::vector<unsigned>{2};
    c.abelianization = std::vector<unsigned>{};
    check_certificate(*t, c);
    return t;
  }
  if (nm == "Ostar") {
    want(0);
    TablePtr t = relabel(*build("cext(Tstar, outer2, 2, zcenter)"), lab);
    Certificate c;
    c.order = 48;
    c.involutions = 1;
    c.center_invariants = std::vector<unsigned>{2};
    c.abelianization = std::vector<unsigned>{2};
    check_certificate(*t, c);
    return t;
  }
  if (nm == "SL" || nm == "GL") {
    want(2);
    const bool gl = nm == "GL";
    if (ps[0] != 2 || (ps[1] != 3 && ps[1] != 5 && ps[1] != 9))
      throw Error(nm + " supports parameters (2,3), (2,5), (2,9): " + lab);
    const std::size_t q = static_cast<std::size_t>(ps[1]);
    const std::size_t expect = gl ? (q * q - 1) * (q * q - q) : (q * q - 1) * q;
    if (expect > kBuildOrderCap)
      throw CapExceeded(lab + " has order " + std::to_string(expect) + ", above cap " +
                        std::to_string(kBuildOrderCap));
    std::vector<Mat> gens =
        classical_generators(gl ? ClassicalKind::GL : ClassicalKind::SL, ps[1]);
    TablePtr t = mat_group(gens, expect, lab);
    Certificate c;
    c.order = expect;
    c.center_invariants = std::vector<unsigned>{static_cast<unsigned>(gl ? q - 1 : 2)};
    if (!gl) {
      c.involutions = 1;
      c.abelianization =
          q == 3 ? std::vector<unsigned>{3} : std::vector<unsigned>{};
    } else {
      c.abelianization = std::vector<unsigned>{static_cast<unsigned>(q - 1)};
    }
    check_certificate(*t, c);
    return t;
  }
  if (nm == "SL25dot2") {
    want(0);
    TablePtr t = relabel(*build("cext(SL(2,5), outer2, 2, zcenter)"), lab);
    Certificate c;
    c.order = 240;
    c.involutions = 1;
    c.center_invariants = std::vector<unsigned>{2};
    check_certificate(*t, c);
    return t;
  }
  if (nm == "SL25colon2") {
    want(0);
    TablePtr t = relabel(*build("cext(SL(2,5), outer2, 2, id)"), lab);
    Certificate c;
    c.order = 240;
    c.center_invariants = std::vector<unsigned>{2};
    c.involution_beyond = 120;
    check_certificate(*t, c);
    return t;
  }
  if (nm == "ES32minus") {
    want(0);
    TablePtr t = central_product2(*build("Q8"), *build("D(4)"), lab);
    Certificate c;
    c.order = 32;
    c.involutions = 11;
    c.center_invariants = std::vector<unsigned>{2};
    c.abelianization = std::vector<unsigned>{2, 2, 2, 2};
    check_certificate(*t, c);
    return t;
  }
  if (nm == "ES1920") {
    want(0);
    std::vector<std::string> nts;
    TablePtr t = build_es1920(&nts);
    for (std::string& s : nts) note(std::move(s));
    return t;
  }
  throw Error("unknown group name: " + nm);
}

void Builder::check_certificate(const GroupTable& g, const Certificate& c) {
  const std::string& who = g.label();
  if (c.order && g.order() != *c.order)
    throw CertificateFailed(who + ": order " + std::to_string(g.order()) + ", expected " +
                            std::to_string(*c.order));
  if (c.center_invariants) {
    std::vector<unsigned> zi = abelian_invariants(g, center(g));
    if (zi != *c.center_invariants)
      throw CertificateFailed(who + ": center invariants " + invariants_str(zi) +
                              ", expected " + invariants_str(*c.center_invariants));
  }
  if (c.abelianization) {
    SubSet d = commutator_subgroup(g, full_subset(g), full_subset(g));
    QuotientResult q = quotient(g, d);
    std::vector<unsigned> ab = abelian_invariants(*q.table);
    if (ab != *c.abelianization)
      throw CertificateFailed(who + ": abelianization " + invariants_str(ab) + ", expected " +
                              invariants_str(*c.abelianization));
  }
  if (c.order_census && element_order_census(g) != *c.order_census)
    throw CertificateFailed(who + ": element order census mismatch");
  if (c.normal_abelian_invariants) {
    NormalAbelianProfile prof = normal_abelian_profile(g);
    std::vector<std::vector<unsigned>> got;
    got.reserve(prof.entries.size());
    for (const NormalAbelianEntry& en : prof.entries) got.push_back(en.invariants);
    if (got != *c.normal_abelian_invariants) {
      std::string s, w;
      for (const auto& v : got) s += "{" + invariants_str(v) + "}";
      for (const auto& v : *c.normal_abelian_invariants) w += "{" + invariants_str(v) + "}";
      throw CertificateFailed(who + ": normal abelian profile " + s + ", expected " + w);
    }
  }
  if (c.involutions && involution_count(g) != *c.involutions)
    throw CertificateFailed(who + ": involution count " +
                            std::to_string(involution_count(g)) + ", expected " +
                            std::to_string(*c.involutions));
  if (c.involution_beyond) {
    bool found = false;
    for (std::size_t x = *c.involution_beyond; x < g.order() && !found; ++x)
      found = g.elt_order(static_cast<Elt>(x)) == 2;
    if (!found)
      throw CertificateFailed(who + ": no involution at index >= " +
                              std::to_string(*c.involution_beyond));
  }
  if (c.iso_reference) {
    TablePtr ref = build(*c.iso_reference);
    IsoOutcome oc = is_isomorphic(g, *ref);
    if (oc.kind == IsoOutcome::Kind::Indeterminate)
      throw CertificateFailed(who + ": isomorphism with " + *c.iso_reference +
                              " is undecided at the search cap");
    if (oc.kind != IsoOutcome::Kind::Isomorphic)
      throw CertificateFailed(who + ": not isomorphic to " + *c.iso_reference);
  }
}

std::shared_ptr<const GroupTable> build_es1920(std::vector<std::string>* notes) {
  const FieldDesc& f = gf(5, 1);
  const Mat i2 = Mat::identity(f, 2);
  // Anticommuting pair of order-4 matrices and a reflection pair: their
  // Kronecker products generate a 32-element group with center {-I}.
  const Mat qm = Mat::from_ints(f, 2, {0, 1, 4, 0});
  const Mat qn = Mat::from_ints(f, 2, {2, 0, 0, 3});
  const Mat dr = Mat::from_ints(f, 2, {0, 1, 4, 0});
  const Mat ds = Mat::from_ints(f, 2, {1, 0, 0, 4});
  std::vector<Mat> egens{kron(qm, i2), kron(qn, i2), kron(i2, dr), kron(i2, ds)};
  auto eclo = build_from_concrete<Mat>(std::span<const Mat>(egens.data(), egens.size()),
                                       64, "es-core");
  const GroupTable& e = *eclo.table;
  if (e.order() != 32)
    throw CertificateFailed("es1920: core order " + std::to_string(e.order()) +
                            ", expected 32");

  std::vector<GroupMap> auts = automorphisms(e);
  if (auts.size() != 1920)
    throw CertificateFailed("es1920: automorphism count " + std::to_string(auts.size()) +
                            ", expected 1920");
  const std::size_t na = auts.size();
  auto key_of = [](const std::vector<Elt>& img) {
    return std::string(reinterpret_cast<const char*>(img.data()),
                       img.size() * sizeof(Elt));
  };
  std::unordered_map<std::string, Elt> aidx;
  aidx.reserve(na * 2);
  for (std::size_t i = 0; i < na; ++i) aidx.emplace(key_of(auts[i].image), static_cast<Elt>(i));
  std::vector<Elt> amul(na * na);
  std::vector<Elt> buf(e.order());
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b) {
      for (std::size_t x = 0; x < buf.size(); ++x) buf[x] = auts[a].image[auts[b].image[x]];
      auto it = aidx.find(key_of(buf));
      if (it == aidx.end()) throw Error("es1920: automorphisms not closed under composition");
      amul[a * na + b] = it->second;
    }
  TablePtr auttab = share(GroupTable::from_mul(na, std::move(amul), "es-sym"));

  Bitvec innb(na);
  for (std::size_t x = 0; x < e.order(); ++x)
    innb.set(aidx.at(key_of(inner_automorphism(e, static_cast<Elt>(x)).image)));
  SubSet inn(*auttab, std::move(innb));
  if (inn.size != 16)
    throw CertificateFailed("es1920: inner part has order " + std::to_string(inn.size) +
                            ", expected 16");
  QuotientResult outq = quotient(*auttab, inn);
  SubSet simple = perfect_core(*outq.table);
  if (simple.size != 60)
    throw CertificateFailed("es1920: outer core has order " + std::to_string(simple.size) +
                            ", expected 60");
  std::vector<Elt> qgens = small_generating_set(*outq.table, simple);

  std::vector<Mat> biggens = egens;
  for (Elt qg : qgens) {
    std::size_t a = 0;
    for (; a < na; ++a)
      if (outq.projection.image[a] == qg) break;
    if (a == na) throw Error("es1920: projection misses a chosen generator");
    const GroupMap& phi = auts[a];
    std::vector<Mat> xs, ys;
    for (const Mat& gm : egens) {
      Elt gi = eclo.index.at(gm.key());
      xs.push_back(gm);
      ys.push_back(eclo.elements[phi.image[gi]]);
    }
    ConjugationSolution sol = solve_conjugation(xs, ys);
    if (!sol.T)
      throw CertificateFailed("es1920: an automorphism lift is not a matrix conjugation");
    biggens.push_back(*sol.T);
  }
  biggens.push_back(Mat::scalar(f, 4, 2));
  auto gclo = build_from_concrete<Mat>(
      std::span<const Mat>(biggens.data(), biggens.size()), kBuildOrderCap, "es-ambient");
  if (gclo.table->order() != 3840)
    throw CertificateFailed("es1920: ambient closure order " +
                            std::to_string(gclo.table->order()) + ", expected 3840");
  SubSet core = perfect_core(*gclo.table);
  if (core.size != 1920)
    throw CertificateFailed("es1920: perfect core order " + std::to_string(core.size) +
                            ", expected 1920");
  Materialized mat = materialize(*gclo.table, core);
  TablePtr g = relabel(*mat.table, "ES1920");

  SubSet zc = center(*g);
  if (zc.size != 2)
    throw CertificateFailed("es1920: center order " + std::to_string(zc.size) +
                            ", expected 2");
  NormalAbelianProfile prof = normal_abelian_profile(*g);
  std::vector<std::vector<unsigned>> invs;
  for (const NormalAbelianEntry& en : prof.entries) invs.push_back(en.invariants);
  if (!(invs == std::vector<std::vector<unsigned>>{{}, {2}}))
    throw CertificateFailed("es1920: normal abelian profile must be exactly 1 and C2");

  std::unordered_map<Elt, Elt> to_new;
  for (std::size_t i = 0; i < mat.to_parent.size(); ++i)
    to_new.emplace(mat.to_parent[i], static_cast<Elt>(i));
  Bitvec eb(g->order());
  for (const Mat& em : eclo.elements) {
    Elt big = gclo.index.at(em.key());
    auto it = to_new.find(big);
    if (it == to_new.end())
      throw CertificateFailed("es1920: the 32-element core escapes the perfect core");
    eb.set(it->second);
  }
  SubSet esub(*g, std::move(eb));
  if (!is_normal(*g, esub))
    throw CertificateFailed("es1920: the 32-element core is not normal");
  Materialized emat = materialize(*g, esub);
  TablePtr esm = central_product2(*make_q8(), *[&] {
    TablePtr c4 = share(cyclic_table(4, "C(4)"));
    TablePtr c2 = share(cyclic_table(2, "C(2)"));
    std::vector<GroupMap> act{identity_map(*c4), inversion_map(*c4)};
    return semidirect_product(*c4, *c2, act, "D(4)");
  }(), "ES32minus");
  if (!is_isomorphic(*emat.table, *esm).isomorphic())
    throw CertificateFailed("es1920: the 32-element core is not the expected central product");
  QuotientResult topq = quotient(*g, esub);
  if (topq.table->order() != 60)
    throw CertificateFailed("es1920: quotient order " + std::to_string(topq.table->order()) +
                            ", expected 60");
  if (normal_subgroups(*topq.table).size() != 2)
    throw CertificateFailed("es1920: quotient by the core is not simple");
  std::vector<Perm> a5gens{Perm::cycle(5, {0, 1, 2}), chain_cycle(5, {0, 1, 2, 3, 4})};
  TablePtr a5 = perm_group(a5gens, 60, "A(5)");
  if (!is_isomorphic(*topq.table, *a5).isomorphic())
    throw CertificateFailed("es1920: quotient by the core is not the order-60 simple group");

  if (notes) {
    std::vector<std::size_t> norders;
    for (const SubSet& s : normal_subgroups(*g)) norders.push_back(s.size);
    std::string ns;
    for (std::size_t i = 0; i < norders.size(); ++i)
      ns += (i ? "," : "") + std::to_string(norders[i]);
    notes->push_back(
        "ES1920: realized as the perfect core (order 1920) of a 3840-element matrix "
        "closure over F5; normal subgroup orders {" + ns + "}");
  }
  return g;
}

}  // namespace gj
