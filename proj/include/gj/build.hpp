#ifndef GJ_BUILD_HPP
#define GJ_BUILD_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gj/expr.hpp"
#include "gj/group.hpp"

namespace gj {

// Largest table any constructor will produce.
inline constexpr std::size_t kBuildOrderCap = 4096;

struct DirectProduct {
  std::shared_ptr<const GroupTable> table;
  GroupMap proj1, proj2;  // product -> factor
  GroupMap inj1, inj2;    // factor -> product
};

// Index layout: (a, b) -> a*|B| + b.
DirectProduct direct_product(const GroupTable& a, const GroupTable& b);

// Semidirect product N x| H for an explicit action: action[h] is the
// automorphism of N by which h acts; must be a homomorphism H -> Aut(N)
// (verified; throws NotAHomomorphism).  Index layout: (n, h) -> h*|N| + n,
// so N occupies indices 0..|N|-1.
std::shared_ptr<const GroupTable> semidirect_product(const GroupTable& n,
                                                     const GroupTable& h,
                                                     const std::vector<GroupMap>& action,
                                                     std::string label);

// <N, t | t a t^-1 = phi(a), t^m = z>; requires phi^m = id, z central and
// fixed by phi (throws InconsistentExtension).  Index layout: (a, t^k) ->
// k*|N| + a.
std::shared_ptr<const GroupTable> cyclic_extension(const GroupTable& n,
                                                   const GroupMap& phi,
                                                   std::size_t m, Elt z,
                                                   std::string label);

// Central product identifying the unique central involutions of both
// factors: (A x B) / <(z_A, z_B)>.
std::shared_ptr<const GroupTable> central_product2(const GroupTable& a,
                                                   const GroupTable& b,
                                                   std::string label);

// Isomorphism-invariant checks a finished construction must pass.
struct Certificate {
  std::optional<std::size_t> order;
  std::optional<std::vector<unsigned>> center_invariants;
  std::optional<std::vector<unsigned>> abelianization;
  std::optional<std::map<unsigned, std::size_t>> order_census;
  // Full normal-abelian profile as a sorted list of invariant tuples.
  std::optional<std::vector<std::vector<unsigned>>> normal_abelian_invariants;
  std::optional<std::size_t> involutions;
  // Requires some involution at index >= the stored value (i.e. outside an
  // embedded base occupying the low indices of an extension).
  std::optional<std::size_t> involution_beyond;
  std::optional<std::string> iso_reference;  // expression text
};

class Builder {
 public:
  // Parses, builds, memoizes on the canonical rendering; the table label is
  // the canonical expression.
  std::shared_ptr<const GroupTable> build(const std::string& text);
  std::shared_ptr<const GroupTable> build(const ExprPtr& expr);

  // Throws CertificateFailed naming the first failing check.
  void check_certificate(const GroupTable& g, const Certificate& c);

  // Accumulated ambiguity/diagnostic notes (e.g. non-isomorphic action
  // candidates passing the same certificate).
  std::vector<std::string> notes() const;

 private:
  std::shared_ptr<const GroupTable> build_node(const GroupExpr& e);
  std::shared_ptr<const GroupTable> build_named(const GroupExpr& e);
  std::shared_ptr<const GroupTable> build_semidirect(const GroupExpr& e);
  std::shared_ptr<const GroupTable> build_cyclic_ext(const GroupExpr& e);
  void note(std::string msg);

  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<const GroupTable>> cache_;
  std::vector<std::string> notes_;
};

// Order-1920 group with an order-32 extraspecial normal subgroup and simple
// order-60 quotient, realized from 4x4 matrices over F5 (Kronecker pairs),
// automorphism lifting and perfect-core extraction; certified before return.
std::shared_ptr<const GroupTable> build_es1920(std::vector<std::string>* notes = nullptr);

}  // namespace gj

#endif
