#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gj/automorphisms.hpp"
#include "gj/build.hpp"
#include "gj/closure.hpp"
#include "gj/corpus.hpp"
#include "gj/expr.hpp"
#include "gj/field.hpp"
#include "gj/group.hpp"
#include "gj/jordan.hpp"
#include "gj/matrix.hpp"
#include "gj/perm.hpp"
#include "gj/table_io.hpp"
#include "gj/verify.hpp"

#include "oracle_support.hpp"

using namespace gj;

namespace {

using Profile = std::vector<std::vector<unsigned>>;

Profile profile_of(const GroupTable& g) {
  Profile out;
  for (const NormalAbelianEntry& e : normal_abelian_profile(g).entries)
    out.push_back(e.invariants);
  return out;
}

std::vector<std::size_t> normal_orders(const GroupTable& g) {
  std::vector<std::size_t> out;
  for (const SubSet& s : normal_subgroups(g)) out.push_back(s.size);
  std::sort(out.begin(), out.end());
  return out;
}

GroupMap identity_on(const GroupTable& g) {
  GroupMap m{&g, &g, {}};
  m.image.resize(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) m.image[i] = static_cast<Elt>(i);
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// expressions

TEST_CASE("expression grammar round-trips through render") {
  const char* exprs[] = {
      "C(6)",
      "D(4)",
      "Dic(12)",
      "S(5)",
      "A(5)",
      "Q8",
      "Tstar",
      "Ostar",
      "Istar",
      "SL(2,9)",
      "GL(2,3)",
      "SL25dot2",
      "SL25colon2",
      "ES32minus",
      "ES1920",
      "C(2) x C(4) x C(6)",
      "swap2(SL(2,3))",
      "semi(Tstar, C(4), outer2)",
      "semi(C(6) x C(6), C(2), swap)",
      "cext(Tstar, outer2, 2, zcenter)",
      "cext(C(6), id, 2, id)",
      "cprod(Q8, D(4))",
  };
  for (const char* s : exprs) {
    ExprPtr e = parse_expr(s);
    CHECK(render(*e) == s);
    CHECK(render(*parse_expr(render(*e))) == s);
  }
  CHECK(render(*parse_expr("  C( 6 )x D(4)\t")) == "C(6) x D(4)");
  CHECK(render(*parse_expr("semi(C(12),C(2),outer2)")) == "semi(C(12), C(2), outer2)");
}

TEST_CASE("expression parser rejects malformed input") {
  CHECK_THROWS_AS(parse_expr(""), ParseError);
  CHECK_THROWS_AS(parse_expr("D(3"), ParseError);
  CHECK_THROWS_AS(parse_expr("Foo(3)"), ParseError);
  CHECK_THROWS_AS(parse_expr("C(3) y C(2)"), ParseError);
  CHECK_THROWS_AS(parse_expr("semi(C(3), C(2), twist)"), ParseError);
  CHECK_THROWS_AS(parse_expr("cext(Tstar, outer2, 2, nowhere)"), ParseError);
  CHECK_THROWS_AS(parse_expr("C(x)"), ParseError);
  try {
    parse_expr("C(3) x ");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position > 0);
  }
}

// ---------------------------------------------------------------------------
// corpus

TEST_CASE("builtin corpus parses with the expected shape") {
  std::vector<CorpusEntry> rows = parse_corpus(builtin_corpus_text());
  CHECK(rows.size() == 48);
  std::map<std::string, int> per_section;
  std::set<std::string> labels;
  for (const CorpusEntry& e : rows) {
    ++per_section[e.section];
    labels.insert(e.label);
    CHECK(!e.citation.empty());
    CHECK(e.order >= 1);
    if (e.jordan) CHECK(e.order % *e.jordan == 0);
    CHECK(render(*parse_expr(e.expr)) == e.expr);
  }
  CHECK(labels.size() == rows.size());
  CHECK(per_section["noniso"] == 14);
  CHECK(per_section["ordinary"] == 9);
  CHECK(per_section["supersingular"] == 20);
  CHECK(per_section["simple"] == 5);
}

TEST_CASE("shipped corpus file matches the builtin text") {
  const char* path = std::getenv("GJ_CORPUS_FILE");
  REQUIRE(path != nullptr);
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == builtin_corpus_text());
}

TEST_CASE("profile column round-trips") {
  Profile p = parse_profile("1;2;2,2;3,6");
  CHECK(p == Profile{{}, {2}, {2, 2}, {3, 6}});
  CHECK(render_profile(p) == "1;2;2,2;3,6");
  CHECK(parse_profile("1") == Profile{{}});
  CHECK_THROWS_AS(parse_profile(""), CorpusError);
  CHECK_THROWS_AS(parse_profile("0"), CorpusError);
  CHECK_THROWS_AS(parse_profile("2,3"), CorpusError);  // no divisibility chain
  CHECK_THROWS_AS(parse_profile("2,x"), CorpusError);
}

TEST_CASE("malformed corpus tables are rejected") {
  CHECK_THROWS_AS(parse_corpus("[weird]\na | C(2) | 2 | - | - | n/a | src\n"),
                  CorpusError);
  CHECK_THROWS_AS(parse_corpus("[simple]\na | C(2) | 2 | - | - | n/a\n"), CorpusError);
  CHECK_THROWS_AS(parse_corpus("[simple]\na | C(2) | 2 | - | - | n/a | s\n"
                               "a | C(3) | 3 | - | - | n/a | s\n"),
                  CorpusError);
  CHECK_THROWS_AS(parse_corpus("[simple]\na | C(2) | 2 | - | - | bogus | s\n"),
                  CorpusError);
  CHECK_THROWS_AS(parse_corpus("[simple]\na | C(2) | 4 | 3 | - | n/a | s\n"),
                  CorpusError);
  CHECK_THROWS_AS(parse_corpus("[simple]\na | Foo(2) | 2 | - | - | n/a | s\n"),
                  CorpusError);
  CHECK_THROWS_AS(parse_corpus("a | C(2) | 2 | - | - | n/a | s\n"), CorpusError);
}

// ---------------------------------------------------------------------------
// group kernel

TEST_CASE("table construction validates the group laws") {
  Builder b;
  auto c4 = b.build("C(4)");
  std::vector<Elt> mul = c4->mul_table();
  std::swap(mul[1], mul[2]);  // break the Latin square
  CHECK_THROWS_AS(GroupTable::from_mul(4, mul, "broken"), InvalidTable);
  CHECK_THROWS_AS(GroupTable::from_mul(3, {1, 0, 2, 0, 1, 2, 2, 2, 0}, "noid"),
                  InvalidTable);

  CHECK(b.build("S(3)")->check_associativity_full());
  CHECK(b.build("Q8")->check_associativity_full());
  CHECK(b.build("Tstar")->check_associativity_sampled(10000));
}

TEST_CASE("subgroup closures satisfy Lagrange") {
  Builder b;
  auto s4 = b.build("S(4)");
  SubSet e = subgroup_closure(*s4, {});
  CHECK(e.size == 1);
  CHECK(e.contains(GroupTable::kId));
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    std::vector<Elt> seed{static_cast<Elt>(rng() % 24), static_cast<Elt>(rng() % 24)};
    SubSet h = subgroup_closure(*s4, seed);
    CHECK(24 % h.size == 0);
    for (Elt x : h.elements()) {
      CHECK(h.contains(s4->inv(x)));
      for (Elt y : h.elements()) CHECK(h.contains(s4->mul(x, y)));
    }
  }
}

TEST_CASE("center, centralizer and normalizer") {
  Builder b;
  auto s3 = b.build("S(3)");
  auto q8 = b.build("Q8");
  auto d4 = b.build("D(4)");
  CHECK(center(*s3).size == 1);
  CHECK(center(*q8).size == 2);
  CHECK(center(*d4).size == 2);

  Elt three = 0;
  for (Elt x = 0; x < 6; ++x)
    if (s3->elt_order(x) == 3) three = x;
  std::vector<Elt> seed{three};
  SubSet c3 = subgroup_closure(*s3, seed);
  CHECK(c3.size == 3);
  CHECK(centralizer(*s3, c3).size == 3);
  CHECK(normalizer(*s3, c3).size == 6);
  CHECK(is_normal(*s3, c3));
  CHECK(is_abelian_subset(*s3, c3));
  CHECK(!is_abelian(*s3));
}

TEST_CASE("quotients project with exact kernels") {
  Builder b;
  auto q8 = b.build("Q8");
  SubSet z = center(*q8);
  QuotientResult q = quotient(*q8, z);
  CHECK(q.table->order() == 4);
  CHECK(q.projection.is_homomorphism());
  CHECK(q.projection.kernel().members == z.members);
  CHECK(abelian_invariants(*q.table) == std::vector<unsigned>{2, 2});

  auto s4 = b.build("S(4)");
  SubSet v4 = derived_series(*s4)[2];
  REQUIRE(v4.size == 4);
  QuotientResult q2 = quotient(*s4, v4);
  CHECK(q2.table->order() == 6);
  CHECK(is_isomorphic(*q2.table, *b.build("S(3)")).isomorphic());
}

TEST_CASE("derived series and perfect cores") {
  Builder b;
  std::vector<SubSet> ds = derived_series(*b.build("S(4)"));
  std::vector<std::size_t> sizes;
  for (const SubSet& s : ds) sizes.push_back(s.size);
  CHECK(sizes == std::vector<std::size_t>{24, 12, 4, 1});

  auto a5 = b.build("A(5)");
  CHECK(perfect_core(*a5).size == 60);

  auto tstar = b.build("Tstar");
  CHECK(derived_series(*tstar)[1].size == 8);
  CHECK(abelian_invariants(*quotient(*tstar, derived_series(*tstar)[1]).table) ==
        std::vector<unsigned>{3});
}

TEST_CASE("element censuses and abelian invariants") {
  Builder b;
  std::map<unsigned, std::size_t> expected{{1, 1}, {2, 1}, {4, 6}};
  CHECK(element_order_census(*b.build("Q8")) == expected);
  CHECK(involution_count(*b.build("D(4)")) == 5);
  CHECK(abelian_invariants(*b.build("C(12)")) == std::vector<unsigned>{12});
  CHECK(abelian_invariants(*b.build("C(2) x C(6)")) == std::vector<unsigned>{2, 6});
  CHECK(abelian_invariants(*b.build("C(4) x C(6)")) == std::vector<unsigned>{2, 12});
  CHECK(abelian_invariants(*b.build("C(1)")) == std::vector<unsigned>{});
  CHECK_THROWS_AS(abelian_invariants(*b.build("S(3)")), NotAbelian);
}

TEST_CASE("conjugacy classes partition the elements") {
  Builder b;
  for (const char* name : {"S(3)", "S(4)", "SL(2,3)", "Q8"}) {
    auto g = b.build(name);
    ConjClassPartition cc = conjugacy_classes(*g);
    std::size_t covered = 0;
    for (std::size_t c = 0; c < cc.count(); ++c) {
      covered += cc.sizes[c];
      CHECK(g->order() % cc.sizes[c] == 0);
    }
    CHECK(covered == g->order());
    for (Elt x = 0; x < g->order(); ++x)
      CHECK(g->elt_order(x) == g->elt_order(cc.representatives[cc.class_of[x]]));
  }
  CHECK(conjugacy_classes(*b.build("S(3)")).count() == 3);
  CHECK(conjugacy_classes(*b.build("Q8")).count() == 5);
}

TEST_CASE("materialized subgroups are standalone groups") {
  Builder b;
  auto s4 = b.build("S(4)");
  SubSet a4 = derived_series(*s4)[1];
  REQUIRE(a4.size == 12);
  Materialized m = materialize(*s4, a4);
  CHECK(m.table->order() == 12);
  CHECK(m.table->check_associativity_full());
  CHECK(is_isomorphic(*m.table, *b.build("A(4)")).isomorphic());
  for (Elt x = 0; x < 12; ++x)
    for (Elt y = 0; y < 12; ++y)
      CHECK(m.to_parent[m.table->mul(x, y)] == s4->mul(m.to_parent[x], m.to_parent[y]));
}

TEST_CASE("small generating sets generate") {
  Builder b;
  for (const char* name : {"C(12)", "S(4)", "Tstar", "GL(2,3)", "Dic(24)"}) {
    auto g = b.build(name);
    std::vector<Elt> gens = small_generating_set(*g);
    CHECK(subgroup_closure(*g, gens).size == g->order());
    CHECK(gens.size() <= 3);
  }
}

// ---------------------------------------------------------------------------
// fields and matrices

TEST_CASE("field tables are exact") {
  for (auto [p, d] : {std::pair{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {5, 2}}) {
    const FieldDesc& f = gf(p, d);
    int q = f.q();
    CHECK(q == (d == 1 ? p : p * p));
    for (int a = 1; a < q; ++a) {
      auto ua = static_cast<std::uint8_t>(a);
      CHECK(f.mul(ua, f.inv(ua)) == f.one());
    }
    // x^(q-1) = 1 for every unit.
    for (int a = 1; a < q; ++a) {
      std::uint8_t acc = f.one();
      for (int e = 0; e < q - 1; ++e) acc = f.mul(acc, static_cast<std::uint8_t>(a));
      CHECK(acc == f.one());
    }
    std::uint8_t gen = f.mult_generator();
    std::uint8_t acc = gen;
    int ord = 1;
    while (acc != f.one()) {
      acc = f.mul(acc, gen);
      ++ord;
    }
    CHECK(ord == q - 1);
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
      auto a = static_cast<std::uint8_t>(rng() % q);
      auto bb = static_cast<std::uint8_t>(rng() % q);
      auto c = static_cast<std::uint8_t>(rng() % q);
      CHECK(f.mul(a, f.add(bb, c)) == f.add(f.mul(a, bb), f.mul(a, c)));
      CHECK(f.add(a, bb) == f.add(bb, a));
      CHECK(f.mul(a, bb) == f.mul(bb, a));
    }
    if (d == 2) {
      // The adjoined root satisfies its modulus: x^2 = -(c1 x + c0).
      std::uint8_t x = f.gen_x();
      auto c0 = static_cast<std::uint8_t>(f.modulus()[0]);
      auto c1 = static_cast<std::uint8_t>(f.modulus()[1]);
      CHECK(f.mul(x, x) == f.neg(f.add(f.mul(c1, x), c0)));
    }
  }
  CHECK_THROWS_AS(FieldDesc::make(2, 2, {1, 0}), ReduciblePolynomial);
  CHECK_THROWS_AS(FieldDesc::make(3, 2, {2, 0}), ReduciblePolynomial);
}

TEST_CASE("matrix arithmetic and the conjugation solver") {
  const FieldDesc& f5 = gf(5, 1);
  const FieldDesc& f9 = gf(3, 2);
  Mat i2 = Mat::identity(f5, 2);
  Mat a = Mat::from_ints(f5, 2, {0, 1, 4, 0});
  CHECK(a * a.inverse() == i2);
  CHECK(a * i2 == a);
  CHECK(a.det() == f5.one());

  Mat j = Mat::from_ints(f9, 2, {0, 1, 2, 0});
  CHECK(j * j.inverse() == Mat::identity(f9, 2));

  CHECK_THROWS_AS(Mat::from_ints(f5, 2, {1, 2, 2, 4}).inverse(), SingularMatrix);

  Mat b = Mat::from_ints(f5, 2, {2, 0, 0, 3});
  Mat c = Mat::from_ints(f5, 2, {1, 1, 0, 1});
  Mat d = Mat::from_ints(f5, 2, {1, 0, 1, 1});
  CHECK(kron(a, b).dim() == 4);
  CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));

  // Conjugate pair: the solver recovers an invertible intertwiner.
  Mat t = Mat::from_ints(f5, 2, {1, 1, 0, 1});
  Mat y = t * a * t.inverse();
  ConjugationSolution sol = solve_conjugation({a}, {y});
  REQUIRE(sol.T.has_value());
  CHECK(sol.space_dim >= 1);
  CHECK((*sol.T * a) == (y * *sol.T));
  CHECK(sol.T->det() != 0);

  // Scalar-shifted pair: empty solution space.
  ConjugationSolution none = solve_conjugation({i2}, {Mat::scalar(f5, 2, 2)});
  CHECK(none.space_dim == 0);
  CHECK(!none.T.has_value());

  // Nonzero space with no invertible member.
  Mat e11 = Mat::from_ints(f5, 2, {1, 0, 0, 0});
  CHECK_THROWS_AS(solve_conjugation({e11}, {i2}), NoInvertibleSolution);
}

TEST_CASE("concrete closures reach the right orders") {
  auto sl23 = classical_generators(ClassicalKind::SL, 3);
  CHECK(build_from_concrete<Mat>(sl23, 100, "sl23").table->order() == 24);
  auto gl3 = classical_generators(ClassicalKind::GL, 3);
  CHECK(build_from_concrete<Mat>(gl3, 100, "gl23").table->order() == 48);
  auto sl5 = classical_generators(ClassicalKind::SL, 5);
  CHECK(build_from_concrete<Mat>(sl5, 200, "sl25").table->order() == 120);

  const FieldDesc& f9 = gf(3, 2);
  Mat qi(f9, 2);
  qi.set(0, 0, f9.gen_x());
  qi.set(1, 1, f9.neg(f9.gen_x()));
  Mat qj = Mat::from_ints(f9, 2, {0, 1, 2, 0});
  std::vector<Mat> qgens{qi, qj};
  auto q8 = build_from_concrete<Mat>(qgens, 16, "q8");
  CHECK(q8.table->order() == 8);
  CHECK(element_order_census(*q8.table) ==
        std::map<unsigned, std::size_t>{{1, 1}, {2, 1}, {4, 6}});

  std::vector<Perm> s4gens{Perm::cycle(4, {0, 1}), Perm::cycle(4, {0, 1, 2, 3})};
  CHECK(build_from_concrete<Perm>(s4gens, 30, "s4").table->order() == 24);
  CHECK_THROWS_AS(build_from_concrete<Perm>(s4gens, 10, "s4"), CapExceeded);
}

// ---------------------------------------------------------------------------
// automorphisms and isomorphism

TEST_CASE("automorphism groups close under composition") {
  Builder b;
  CHECK(automorphisms(*b.build("C(12)")).size() == 4);
  CHECK(automorphisms(*b.build("C(2) x C(2)")).size() == 6);
  CHECK(automorphisms(*b.build("Q8")).size() == 24);

  auto s3 = b.build("S(3)");
  std::vector<GroupMap> aut = automorphisms(*s3);
  CHECK(aut.size() == 6);
  for (const GroupMap& m : aut) CHECK(is_inner(*s3, m));

  auto tstar = b.build("Tstar");
  std::vector<GroupMap> at = automorphisms(*tstar);
  CHECK(at.size() == 24);
  std::size_t inner = 0;
  for (const GroupMap& m : at)
    if (is_inner(*tstar, m)) ++inner;
  CHECK(inner == 12);

  std::set<std::vector<Elt>> images;
  for (const GroupMap& m : at) images.insert(m.image);
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    const GroupMap& p = at[rng() % at.size()];
    const GroupMap& q = at[rng() % at.size()];
    CHECK(images.count(p.then(q).image) == 1);
  }
}

TEST_CASE("isomorphism testing is reflexive and symmetric") {
  Builder b;
  const char* names[] = {"C(6)",     "D(4)",     "Dic(12)",       "Tstar",
                         "GL(2,3)",  "SL25dot2", "swap2(Dic(12))"};
  for (const char* n : names) {
    auto g = b.build(n);
    CHECK(is_isomorphic(*g, *g).isomorphic());
  }
  auto d4 = b.build("D(4)");
  auto q8 = b.build("Q8");
  IsoOutcome ab = is_isomorphic(*d4, *q8);
  IsoOutcome ba = is_isomorphic(*q8, *d4);
  CHECK(ab.kind == IsoOutcome::Kind::NotIsomorphic);
  CHECK(ba.kind == IsoOutcome::Kind::NotIsomorphic);
  CHECK(is_isomorphic(*b.build("C(4) x C(4)"), *b.build("C(2) x C(8)")).kind ==
        IsoOutcome::Kind::NotIsomorphic);

  // Above the search cap the outcome is only as strong as the invariants.
  auto big = b.build("Tstar x Tstar");
  CHECK(is_isomorphic(*big, *big).kind == IsoOutcome::Kind::Indeterminate);
  CHECK(is_isomorphic(*big, *b.build("C(576)")).kind ==
        IsoOutcome::Kind::NotIsomorphic);

  IsoOutcome w = is_isomorphic(*b.build("Istar"), *b.build("SL(2,5)"));
  REQUIRE(w.isomorphic());
  REQUIRE(w.witness.has_value());
  CHECK(w.witness->is_homomorphism());
  CHECK(w.witness->is_bijective());
}

// ---------------------------------------------------------------------------
// builder

TEST_CASE("builder caches on the canonical rendering") {
  Builder b;
  auto first = b.build("Tstar");
  auto second = b.build("  Tstar ");
  CHECK(first.get() == second.get());
  CHECK(first->label() == "Tstar");
  CHECK(b.build("Tstar x C(3)")->label() == "Tstar x C(3)");
  CHECK(b.notes().empty());
}

TEST_CASE("named constructions have the right orders") {
  Builder b;
  std::pair<const char*, std::size_t> cases[] = {
      {"C(7)", 7},        {"D(7)", 14},     {"Dic(16)", 16},  {"S(6)", 720},
      {"A(7)", 2520},     {"Q8", 8},        {"Tstar", 24},    {"Ostar", 48},
      {"Istar", 120},     {"SL(2,3)", 24},  {"SL(2,5)", 120}, {"SL(2,9)", 720},
      {"GL(2,3)", 48},    {"GL(2,5)", 480}, {"SL25dot2", 240}, {"SL25colon2", 240},
      {"ES32minus", 32},
  };
  for (auto [expr, n] : cases) CHECK(b.build(expr)->order() == n);
}

TEST_CASE("builder rejects out-of-range parameters") {
  Builder b;
  CHECK_THROWS_AS(b.build("GL(2,9)"), CapExceeded);
  CHECK_THROWS_AS(b.build("S(7)"), Error);
  CHECK_THROWS_AS(b.build("A(8)"), Error);
  CHECK_THROWS_AS(b.build("Dic(10)"), Error);
  CHECK_THROWS_AS(b.build("Dic(4)"), Error);
  CHECK_THROWS_AS(b.build("C(0)"), Error);
  CHECK_THROWS_AS(b.build("C(5000)"), Error);
  CHECK_THROWS_AS(b.build("SL(2,7)"), Error);
  CHECK_THROWS_AS(b.build("Q8(3)"), Error);
}

TEST_CASE("action constructors verify their preconditions") {
  Builder b;
  CHECK_THROWS_AS(b.build("semi(S(3), C(2), invert)"), NotAbelian);
  CHECK_THROWS_AS(b.build("semi(C(5), C(3), invert)"), Error);
  CHECK_THROWS_AS(b.build("semi(C(2) x C(4), C(2), swap)"), Error);
  CHECK_THROWS_AS(b.build("semi(C(3) x C(3), C(3), swap)"), Error);
  CHECK_THROWS_AS(b.build("semi(Tstar, C(2) x C(2), outer2)"), Error);
  CHECK_THROWS_AS(b.build("cprod(C(3), Q8)"), NotIsomorphicCenters);
  CHECK_THROWS_AS(b.build("cprod(C(2) x C(2), Q8)"), NotCentral);

  auto c3 = b.build("C(3)");
  auto c2 = b.build("C(2)");
  auto c4 = b.build("C(4)");
  GroupMap invert3{c3.get(), c3.get(), {0, 2, 1}};
  GroupMap collapse{c3.get(), c3.get(), {0, 1, 1}};

  // The identity of the acting group must act trivially.
  std::vector<GroupMap> bad_id{invert3, invert3};
  CHECK_THROWS_AS(semidirect_product(*c3, *c2, bad_id, "x"), NotAHomomorphism);
  // Action images must be automorphisms.
  std::vector<GroupMap> not_auto{identity_on(*c3), collapse};
  CHECK_THROWS_AS(semidirect_product(*c3, *c2, not_auto, "x"), NotAHomomorphism);
  // h -> action[h] must respect the product in H.
  GroupMap invert4{c4.get(), c4.get(), {0, 3, 2, 1}};
  std::vector<GroupMap> not_hom{identity_on(*c4), invert4, invert4, identity_on(*c4)};
  CHECK_THROWS_AS(semidirect_product(*c4, *c4, not_hom, "x"), NotAHomomorphism);
  // Sanity: the honest inversion action builds S(3).
  std::vector<GroupMap> good{identity_on(*c3), invert3};
  auto s3 = semidirect_product(*c3, *c2, good, "c3byc2");
  CHECK(is_isomorphic(*s3, *b.build("S(3)")).isomorphic());
}

TEST_CASE("cyclic extensions verify their preconditions") {
  Builder b;
  auto c4 = b.build("C(4)");
  GroupMap invert4{c4.get(), c4.get(), {0, 3, 2, 1}};
  // The relator value must be fixed by the twist.
  CHECK_THROWS_AS(cyclic_extension(*c4, invert4, 2, 1, "x"), InconsistentExtension);
  // The twist order must divide the exponent.
  CHECK_THROWS_AS(cyclic_extension(*c4, invert4, 3, 0, "x"), InconsistentExtension);
  // The twist must be an automorphism.
  GroupMap collapse{c4.get(), c4.get(), {0, 1, 1, 3}};
  CHECK_THROWS_AS(cyclic_extension(*c4, collapse, 2, 0, "x"), InconsistentExtension);
  // The relator value must be central.
  auto s3 = b.build("S(3)");
  Elt flip = 0;
  for (Elt x = 0; x < 6; ++x)
    if (s3->elt_order(x) == 2) flip = x;
  CHECK_THROWS_AS(cyclic_extension(*s3, identity_on(*s3), 2, flip, "x"),
                  InconsistentExtension);
  // Dic(8) = <C(4), t | t a t^-1 = a^-1, t^2 = a^2>.
  auto dic8 = cyclic_extension(*c4, invert4, 2, 2, "dic8");
  CHECK(is_isomorphic(*dic8, *b.build("Dic(8)")).isomorphic());
  CHECK(b.build("cext(C(6), id, 2, id)")->order() == 12);
  CHECK_THROWS_AS(b.build("cext(C(3), outer2, 2, zcenter)"), InconsistentExtension);
}

TEST_CASE("certificates catch wrong claims") {
  Builder b;
  auto tstar = b.build("Tstar");
  Certificate c;
  c.order = 25;
  CHECK_THROWS_AS(b.check_certificate(*tstar, c), CertificateFailed);
  c = {};
  c.involutions = 2;
  CHECK_THROWS_AS(b.check_certificate(*tstar, c), CertificateFailed);
  c = {};
  c.center_invariants = std::vector<unsigned>{4};
  CHECK_THROWS_AS(b.check_certificate(*tstar, c), CertificateFailed);
  c = {};
  c.abelianization = std::vector<unsigned>{2};
  CHECK_THROWS_AS(b.check_certificate(*tstar, c), CertificateFailed);
  c = {};
  c.abelianization = std::vector<unsigned>{3};
  CHECK_NOTHROW(b.check_certificate(*tstar, c));
  c = {};
  c.iso_reference = "D(12)";
  CHECK_THROWS_AS(b.check_certificate(*tstar, c), CertificateFailed);
  c = {};
  c.iso_reference = "SL(2,3)";
  CHECK_NOTHROW(b.check_certificate(*tstar, c));
  c = {};
  c.normal_abelian_invariants = Profile{{}, {2}};
  CHECK_THROWS_AS(b.check_certificate(*b.build("Dic(12)"), c), CertificateFailed);
  CHECK_NOTHROW(b.check_certificate(*b.build("GL(2,3)"), c));
  c = {};
  c.involution_beyond = 120;
  CHECK_THROWS_AS(b.check_certificate(*b.build("SL25dot2"), c), CertificateFailed);
  CHECK_NOTHROW(b.check_certificate(*b.build("SL25colon2"), c));
  c = {};
  c.order_census = element_order_census(*b.build("Q8"));
  CHECK_THROWS_AS(b.check_certificate(*b.build("D(4)"), c), CertificateFailed);
}

TEST_CASE("extension isomorphism spot checks") {
  Builder b;
  CHECK(is_isomorphic(*b.build("semi(Q8, C(3), outer2)"), *b.build("Tstar")).isomorphic());
  CHECK(is_isomorphic(*b.build("cext(Tstar, outer2, 2, id)"), *b.build("GL(2,3)"))
            .isomorphic());
  CHECK(is_isomorphic(*b.build("swap2(C(2))"), *b.build("D(4)")).isomorphic());
  CHECK(is_isomorphic(*b.build("Tstar"), *b.build("SL(2,3)")).isomorphic());

  // Same data with a nontrivial relator value: a different order-96 group,
  // distinguished by its normal abelian subgroups.
  auto split = b.build("semi(Tstar, C(4), outer2)");
  auto nonsplit = b.build("cext(Tstar, outer2, 4, zcenter)");
  CHECK(split->order() == 96);
  CHECK(nonsplit->order() == 96);
  CHECK(profile_of(*split) == Profile{{}, {2}, {4}});
  CHECK(profile_of(*nonsplit) == Profile{{}, {2}, {2}, {2}, {2, 2}});
}

// ---------------------------------------------------------------------------
// table io

TEST_CASE("table json round-trips and validates") {
  Builder b;
  auto tstar = b.build("Tstar");
  std::string doc = table_to_json(*tstar);
  auto back = table_from_json(doc);
  CHECK(back->order() == 24);
  CHECK(back->label() == "Tstar");
  CHECK(back->mul_table() == tstar->mul_table());

  std::string bad = doc;
  std::size_t at = bad.find("[");
  bad[at + 1] = '9';  // mul[0][0] = 9: identity row broken
  CHECK_THROWS_AS(table_from_json(bad), InvalidTable);
  CHECK_THROWS_AS(table_from_json("{\"order\": 2}"), Error);
  CHECK_THROWS_AS(table_from_json("not json"), Error);
}

// ---------------------------------------------------------------------------
// jordan engine

TEST_CASE("jordan reports are internally consistent") {
  Builder b;
  for (const char* n : {"C(1)", "C(6)", "S(3)", "Q8", "D(6)", "Tstar", "GL(2,3)"}) {
    auto g = b.build(n);
    JordanReport r = jordan_constant(*g);
    CHECK(r.order == g->order());
    CHECK(r.label == g->label());
    CHECK(r.jordan >= r.whole_group_index);
    CHECK(r.whole_group_index >= 1);
    CHECK(r.class_count >= 1);
    CHECK(r.witness.subgroup.count() / r.witness.abelian.count() == r.jordan);
    CHECK((r.jordan == 1) == is_abelian(*g));
  }
  CHECK(jordan_constant(*b.build("C(1)")).jordan == 1);
  CHECK(jordan_constant(*b.build("S(3)")).jordan == 2);
  CHECK(jordan_constant(*b.build("S(4)")).jordan == 6);
  CHECK(jordan_constant(*b.build("A(4)")).jordan == 3);
  CHECK(jordan_constant(*b.build("A(5)")).jordan == 60);
}

TEST_CASE("subgroup inventories satisfy their counting laws") {
  Builder b;
  for (const char* n : {"S(3)", "Q8", "SL(2,3)", "D(6)", "Dic(12)"}) {
    auto g = b.build(n);
    SubgroupClassInventory inv = subgroup_classes(*g);
    std::size_t sum = 0;
    for (const SubgroupClass& c : inv.classes) {
      sum += c.class_size;
      CHECK(c.class_size * c.normalizer_order == g->order());
      CHECK(c.members.count() == c.order);
    }
    CHECK(sum == inv.total_subgroups);
  }
  CHECK(subgroup_classes(*b.build("S(3)")).classes.size() == 4);
  CHECK(subgroup_classes(*b.build("Q8")).classes.size() == 6);

  std::vector<std::size_t> orders;
  for (const SubgroupClass& c : subgroup_classes(*b.build("SL(2,3)")).classes)
    orders.push_back(c.order);
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<std::size_t>{1, 2, 3, 4, 6, 8, 24});
}

TEST_CASE("inventories match naive enumeration") {
  Builder b;
  for (const char* n : {"S(3)", "Q8", "D(6)", "SL(2,3)", "Dic(12)"}) {
    auto g = b.build(n);
    SubgroupClassInventory inv = subgroup_classes(*g);
    gj_tests::NaiveInventory oracle = gj_tests::naive_subgroups(*g);
    CHECK(inv.classes.size() == oracle.class_count);
    CHECK(inv.total_subgroups == oracle.total_subgroups);
    for (const SubgroupClass& c : inv.classes)
      CHECK(oracle.canonical.count(c.members.indices()) == 1);
  }
}

TEST_CASE("subgroup index is conjugation-invariant") {
  Builder b;
  auto g = b.build("GL(2,3)");
  SubgroupClassInventory inv = subgroup_classes(*g);
  std::mt19937 rng(17);
  for (int t = 0; t < 100; ++t) {
    const SubgroupClass& c = inv.classes[rng() % inv.classes.size()];
    Elt by = static_cast<Elt>(rng() % g->order());
    Bitvec moved(g->order());
    c.members.for_each([&](std::size_t x) { moved.set(g->conj(by, static_cast<Elt>(x))); });
    SubSet orig(*g, c.members);
    SubSet conj(*g, moved);
    CHECK(max_normal_abelian_order_within(*g, orig) ==
          max_normal_abelian_order_within(*g, conj));
  }
}

TEST_CASE("normal subgroup lists are complete") {
  Builder b;
  CHECK(normal_orders(*b.build("S(3)")) == std::vector<std::size_t>{1, 3, 6});
  CHECK(normal_orders(*b.build("GL(2,3)")) == std::vector<std::size_t>{1, 2, 8, 24, 48});
  CHECK(normal_subgroups(*b.build("Q8")).size() == 6);
  CHECK(profile_of(*b.build("Dic(12)")) == Profile{{}, {2}, {3}, {6}});
  CHECK(min_index_normal_abelian(*b.build("Tstar")) == 12);
  CHECK(min_index_normal_abelian(*b.build("C(12)")) == 1);
}

TEST_CASE("jordan_sup ranges over a family") {
  Builder b;
  std::vector<std::shared_ptr<const GroupTable>> simple;
  for (const char* n : {"C(6)", "Dic(12)", "Tstar", "Ostar", "Istar"})
    simple.push_back(b.build(n));
  CHECK(jordan_sup(simple) == 60);
  std::vector<std::shared_ptr<const GroupTable>> none;
  CHECK_THROWS_AS(jordan_sup(none), Error);
}

// ---------------------------------------------------------------------------
// verification reports

TEST_CASE("verification runs a section and emits every format") {
  Builder b;
  auto corpus = parse_corpus(builtin_corpus_text());
  VerificationReport rep = run_verification(b, corpus, "simple");
  REQUIRE(rep.sections.size() == 1);
  CHECK(rep.pass);
  CHECK(rep.sections[0].rows.size() == 5);
  CHECK(rep.sections[0].computed_set == std::vector<std::size_t>{1, 2, 12, 24, 60});
  for (const VerificationRow& r : rep.sections[0].rows) CHECK(r.index == r.jordan);

  std::string md = to_markdown(rep);
  CHECK(md.find("## simple") != std::string::npos);
  CHECK(md.find("Overall: pass") != std::string::npos);

  std::string csv = to_csv(rep);
  CHECK(csv.rfind("section,label,expr,order,i,J,expectedJ,pass,millis\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);

  std::string js = to_json(rep);
  CHECK(to_json(report_from_json(js)) == js);

  CHECK_THROWS_AS(run_verification(b, corpus, "bogus"), CorpusError);
  CHECK_THROWS_AS(report_from_json("{}"), Error);
}

TEST_CASE("verification is deterministic across thread counts") {
  Builder b;
  auto corpus = parse_corpus(builtin_corpus_text());
  std::string one = to_json(run_verification(b, corpus, "ordinary", 1, false));
  std::string three = to_json(run_verification(b, corpus, "ordinary", 3, false));
  CHECK(one == three);
  for (const SectionReport& s :
       run_verification(b, corpus, "ordinary", 1, false).sections)
    for (const VerificationRow& r : s.rows) CHECK(r.millis == 0);
}
