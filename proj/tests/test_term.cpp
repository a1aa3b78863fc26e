//===--- test_term.cpp - Term algebra tests ----------------------------------//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//

#include "acx/term.hpp"

#include "testutil.hpp"

#include <doctest.h>

using namespace acx;
using namespace acx::test;

TEST_CASE("positions: subterm_at and replace_at") {
  SymbolId u = register_symbol("u_pos", SymbolKind::AC, 2);
  SymbolId f = register_symbol("f_pos", SymbolKind::Uninterpreted, 1);
  Term a = mk_fresh_constant("pa");
  Term b = mk_fresh_constant("pb");
  Term c = mk_fresh_constant("pc");
  Term d = mk_fresh_constant("pd");

  Term uab = mk_app(u, {a, b});
  CHECK(subterm_at(uab, std::vector<uint32_t>{1}) == b);
  CHECK(subterm_at(uab, std::vector<uint32_t>{}) == uab);
  CHECK_THROWS_AS(subterm_at(uab, std::vector<uint32_t>{2}),
                  std::out_of_range);
  CHECK_THROWS_AS(subterm_at(a, std::vector<uint32_t>{0}),
                  std::out_of_range);

  CHECK(replace_at(mk_app(f, {a}), std::vector<uint32_t>{0}, b) ==
        mk_app(f, {b}));
  CHECK(replace_at(uab, std::vector<uint32_t>{}, c) == c);
  Term nested = mk_app(u, {a, mk_app(u, {b, c})});
  CHECK(replace_at(nested, std::vector<uint32_t>{1}, d) ==
        mk_app(u, {a, d}));

  // navigation into a mixed arithmetic/AC term
  Term t = mk_app(f, {mk_app(sym_add(),
                             {a, mk_app(sym_mul(), {mk_numeral(Rational(2)),
                                                    mk_app(u, {b, a})})})});
  CHECK(subterm_at(t, std::vector<uint32_t>{0, 1, 1}) == mk_app(u, {b, a}));
  CHECK(subterm_at(t, std::vector<uint32_t>{0, 1, 1, 0}) == b);
}

TEST_CASE("positions: replace/subterm round-trip on random terms") {
  Rng rng(7);
  TestSig sig(5, "rt");
  for (int i = 0; i < 200; ++i) {
    Term t = random_term(rng, sig, 3);
    Position p;
    Term cur = t;
    while (cur.is_app() && pick(rng, 0, 2) != 0) {
      uint32_t k = (uint32_t)pick(rng, 0, (int)cur.nargs() - 1);
      p.push_back(k);
      cur = cur.arg(k);
    }
    CHECK(replace_at(t, p, subterm_at(t, p)) == t);
  }
}

TEST_CASE("aliens: flattening and multiplicity") {
  SymbolId u = register_symbol("u_al", SymbolKind::AC, 2);
  SymbolId u2 = register_symbol("v_al", SymbolKind::AC, 2);
  SymbolId f = register_symbol("f_al", SymbolKind::Uninterpreted, 1);
  Term a = mk_fresh_constant("aa");
  Term b = mk_fresh_constant("ab");
  Term c = mk_fresh_constant("ac");

  TermMultiset m = aliens(mk_app(u, {a, mk_app(u, {b, a})}), u);
  CHECK(m.total() == 3);
  CHECK(m.count(a) == 2);
  CHECK(m.count(b) == 1);

  Term fu = mk_app(f, {mk_app(u, {a, b})});
  TermMultiset m2 = aliens(fu, u);
  CHECK(m2.total() == 1);
  CHECK(m2.count(fu) == 1);

  // the other AC symbol is an alien
  Term inner = mk_app(u2, {c, b});
  Term t = mk_app(u, {b, mk_app(u, {c, inner})});
  TermMultiset m3 = aliens(t, u);
  CHECK(m3.total() == 3);
  CHECK(m3.count(b) == 1);
  CHECK(m3.count(c) == 1);
  CHECK(m3.count(inner) == 1);

  CHECK_THROWS_AS(aliens(t, f), std::invalid_argument);
}

TEST_CASE("aliens: invariant under AC rearrangement") {
  Rng rng(11);
  TestSig sig(5, "ai");
  for (int i = 0; i < 300; ++i) {
    Term t =
        mk_app(sig.u1, {random_term(rng, sig, 2), random_term(rng, sig, 2)});
    TermMultiset m1 = aliens(t, sig.u1);
    std::vector<Term> xs = m1.expanded();
    std::shuffle(xs.begin(), xs.end(), rng);
    Term rebuilt = xs[0];
    for (size_t k = 1; k < xs.size(); ++k)
      rebuilt = mk_app(sig.u1, {xs[k], rebuilt});
    CHECK(aliens(rebuilt, sig.u1) == m1);
  }
}

TEST_CASE("multiset operations") {
  Term a = mk_fresh_constant("ma");
  Term b = mk_fresh_constant("mb");
  Term c = mk_fresh_constant("mc");
  TermMultiset m1, m2;
  m1.add(a, 2);
  m1.add(b);
  m2.add(a);
  m2.add(c);
  CHECK(m1.intersect(m2).total() == 1);
  CHECK(m1.subtract(m2).count(a) == 1);
  CHECK(m1.subtract(m2).count(b) == 1);
  CHECK(!m1.subset_of(m2));
  TermMultiset m3 = m2;
  m3.add(a);
  CHECK(m2.strict_subset_of(m3));
  CHECK(!m3.strict_subset_of(m3));
  CHECK(m1.set_union(m2).total() == 5);
}

TEST_CASE("substitution") {
  SymbolId f = register_symbol("f_su", SymbolKind::Uninterpreted, 1);
  Term a = mk_fresh_constant("sa");
  Term x = mk_fresh_var();
  Term y = mk_fresh_var();

  Substitution s1;
  s1.bind(x, a);
  CHECK(s1.apply(x) == a);

  Substitution empty;
  CHECK(empty.apply(mk_app(f, {x})) == mk_app(f, {x}));

  SymbolId u = register_symbol("u_su", SymbolKind::AC, 2);
  Term uab = mk_app(u, {a, mk_fresh_constant("sb")});
  Substitution s2;
  s2.bind(x, uab);
  s2.bind(y, a);
  Term sum = mk_app(sym_add(), {x, y});
  CHECK(s2.apply(sum) == mk_app(sym_add(), {uab, a}));
}

namespace {
Term rebuild(Term t) {
  if (!t.is_app())
    return t;
  std::vector<Term> args;
  for (const Term& a : t.args())
    args.push_back(rebuild(a));
  return mk_app(t.sym(), std::move(args));
}
} // namespace

TEST_CASE("interning: structural equality is identity") {
  Rng rng(23);
  TestSig sig(6, "in");
  for (int i = 0; i < 500; ++i) {
    Term t = random_term(rng, sig, 3);
    Term t2 = rebuild(t);
    CHECK(t == t2);
    CHECK(t.id() == t2.id());
  }
}

TEST_CASE("structural order is total and strict") {
  Rng rng(31);
  TestSig sig(5, "so");
  std::vector<Term> pool;
  for (int i = 0; i < 60; ++i)
    pool.push_back(random_term(rng, sig, 2));
  for (const Term& a : pool)
    for (const Term& b : pool) {
      if (a == b) {
        CHECK(!structural_less(a, b));
      } else {
        CHECK(structural_less(a, b) != structural_less(b, a));
      }
    }
}

TEST_CASE("classification of the abstracted fragment") {
  SymbolId u = register_symbol("u_cl", SymbolKind::AC, 2);
  SymbolId f = register_symbol("f_cl", SymbolKind::Uninterpreted, 2);
  Term k1 = mk_fresh_constant("ck1");
  Term k2 = mk_fresh_constant("ck2");
  Term k3 = mk_fresh_constant("ck3");

  CHECK(classify(mk_app(sym_add(), {k1, mk_numeral(Rational(3))})) ==
        TermClass::PureXK);
  CHECK(classify(mk_app(f, {k1, k2})) == TermClass::TEmpty);
  CHECK(classify(mk_app(u, {k1, mk_app(u, {k2, k3})})) == TermClass::TAC);
  CHECK(classify(mk_app(u, {mk_app(f, {k1, k2}), mk_app(f, {k1, k1})})) ==
        TermClass::Other);
  CHECK(classify(mk_app(sym_add(), {mk_app(f, {k1, k2}), k1})) ==
        TermClass::Other);
}

TEST_CASE("rationals") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(1, 3) * Rational(3) == Rational(1));
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK((-Rational(5, 7)).str() == "-5/7");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}
