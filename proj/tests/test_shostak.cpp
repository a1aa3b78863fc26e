//===--- test_shostak.cpp - Theory canonizer/solver tests ---------------------//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//

#include "acx/shostak.hpp"

#include "acx/ordering.hpp"
#include "testutil.hpp"

#include <doctest.h>

using namespace acx;
using namespace acx::test;

TEST_CASE("empty theory: canonizer is the identity") {
  const ShostakTheory& X = empty_theory();
  CanonContext ctx;
  Term k1 = mk_fresh_constant("ek1");
  Term x = ctx.abstraction_var(
      mk_app(register_symbol("f_es", SymbolKind::Uninterpreted, 1), {k1}));
  CHECK(X.canonize(x, ctx) == x);
  CHECK(X.canonize(k1, ctx) == k1);
}

TEST_CASE("empty theory: solver orients toward the smaller atom") {
  const ShostakTheory& X = empty_theory();
  CanonContext ctx;
  SymbolId u = register_symbol("u_es", SymbolKind::AC, 2);
  SymbolId f = register_symbol("g_es", SymbolKind::Uninterpreted, 1);
  Term a = mk_fresh_constant("ea");
  Term b = mk_fresh_constant("eb");
  Term x = ctx.abstraction_var(mk_app(u, {a, b})); // rho: AC term
  Term y = ctx.abstraction_var(mk_app(f, {a}));    // rho: smaller class

  SolveResult same = X.solve(x, x, ctx);
  CHECK(!same.bottom);
  CHECK(same.pairs.empty());

  // both argument orders give the same oriented pair
  SolveResult r1 = X.solve(x, y, ctx);
  SolveResult r2 = X.solve(y, x, ctx);
  REQUIRE(r1.pairs.size() == 1);
  CHECK(r1.pairs[0].first == x);
  CHECK(r1.pairs[0].second == y);
  CHECK(r2.pairs == r1.pairs);

  // constants sit below abstraction variables
  SolveResult r3 = X.solve(a, y, ctx);
  REQUIRE(r3.pairs.size() == 1);
  CHECK(r3.pairs[0].first == y);
  CHECK(r3.pairs[0].second == a);
}

TEST_CASE("la canonizer: frozen examples") {
  const ShostakTheory& X = la_theory();
  CanonContext ctx;
  Term a = mk_fresh_constant("la_a");
  Term x = mk_fresh_constant("la_x");

  // a + 2a collapses into one monomial
  CHECK(X.canonize(mk_app(sym_add(),
                          {a, mk_app(sym_mul(), {mk_numeral(Rational(2)), a})}),
                   ctx) == mk_app(sym_mul(), {a, mk_numeral(Rational(3))}));
  // x - x vanishes
  CHECK(X.canonize(mk_app(sym_sub(), {x, x}), ctx) ==
        mk_numeral(Rational(0)));
  // 1 + (2x + 3) with the constant rendered first
  Term t = mk_app(sym_add(),
                  {mk_numeral(Rational(1)),
                   mk_app(sym_add(), {mk_app(sym_mul(), {mk_numeral(Rational(2)), x}),
                                      mk_numeral(Rational(3))})});
  CHECK(X.canonize(t, ctx) ==
        mk_app(sym_add(), {mk_numeral(Rational(4)),
                           mk_app(sym_mul(), {x, mk_numeral(Rational(2))})}));
  // nonlinear products are rejected
  CHECK_THROWS_AS(X.canonize(mk_app(sym_mul(), {a, x}), ctx), TheoryError);
}

TEST_CASE("la canonizer: probabilistic identity against evaluation") {
  const ShostakTheory& X = la_theory();
  CanonContext ctx;
  Rng rng(67);
  std::vector<Term> atoms;
  for (int i = 0; i < 4; ++i)
    atoms.push_back(mk_fresh_constant("lp" + std::to_string(i)));
  for (int i = 0; i < 400; ++i) {
    Term s = random_la_term(rng, atoms, 3);
    Term t = random_la_term(rng, atoms, 3);
    bool same_canon = X.canonize(s, ctx) == X.canonize(t, ctx);
    bool same_eval = true;
    for (int pass = 0; pass < 5; ++pass) {
      std::unordered_map<uint32_t, Rational> env;
      for (const Term& a : atoms)
        env[a.id()] = Rational(pick(rng, -50, 50), pick(rng, 1, 7));
      if (eval_la(s, env) != eval_la(t, env))
        same_eval = false;
    }
    CHECK(same_canon == same_eval);
  }
}

TEST_CASE("la canonizer: idempotent") {
  const ShostakTheory& X = la_theory();
  CanonContext ctx;
  Rng rng(71);
  std::vector<Term> atoms;
  for (int i = 0; i < 4; ++i)
    atoms.push_back(mk_fresh_constant("li" + std::to_string(i)));
  for (int i = 0; i < 500; ++i) {
    Term c = X.canonize(random_la_term(rng, atoms, 3), ctx);
    CHECK(X.canonize(c, ctx) == c);
  }
}

TEST_CASE("la solver: examples") {
  const ShostakTheory& X = la_theory();
  CanonContext ctx;
  SymbolId u = register_symbol("u_ls", SymbolKind::AC, 2);
  SymbolId f = register_symbol("f_ls", SymbolKind::Uninterpreted, 1);
  Term a = mk_fresh_constant("ls_a");
  Term b = mk_fresh_constant("ls_b");

  // pivot on the variable whose image is larger: u(a,b) above f(a)
  Term xs = ctx.abstraction_var(mk_app(f, {a}));       // small image
  Term xl = ctx.abstraction_var(mk_app(u, {a, b}));    // large image
  SolveResult r =
      X.solve(mk_app(sym_add(), {xl, xs}), mk_numeral(Rational(0)), ctx);
  REQUIRE(r.pairs.size() == 1);
  CHECK(r.pairs[0].first == xl);
  CHECK(r.pairs[0].second ==
        mk_app(sym_mul(), {xs, mk_numeral(Rational(-1))}));

  // x = x + 1 is inconsistent
  Term x = mk_fresh_constant("ls_x");
  CHECK(X.solve(x, mk_app(sym_add(), {x, mk_numeral(Rational(1))}), ctx)
            .bottom);

  // 2x = 6
  SolveResult r2 = X.solve(
      mk_app(sym_mul(), {mk_numeral(Rational(2)), x}), mk_numeral(Rational(6)),
      ctx);
  REQUIRE(r2.pairs.size() == 1);
  CHECK(r2.pairs[0].first == x);
  CHECK(r2.pairs[0].second == mk_numeral(Rational(3)));

  // 0 = 0 has the empty solution
  SolveResult r3 = X.solve(mk_app(sym_sub(), {x, x}), mk_numeral(Rational(0)),
                           ctx);
  CHECK(!r3.bottom);
  CHECK(r3.pairs.empty());
}

TEST_CASE("la solver: substituting the solution back") {
  const ShostakTheory& X = la_theory();
  Rng rng(73);
  SymbolId f = register_symbol("f_lb", SymbolKind::Uninterpreted, 1);
  for (int i = 0; i < 400; ++i) {
    CanonContext ctx;
    std::vector<Term> atoms;
    for (int k = 0; k < 3; ++k)
      atoms.push_back(ctx.abstraction_var(
          mk_app(f, {mk_fresh_constant("lb" + std::to_string(i * 3 + k))})));
    Term s = random_la_term(rng, atoms, 2);
    Term t = random_la_term(rng, atoms, 2);
    SolveResult r = X.solve(s, t, ctx);
    if (r.bottom)
      continue;
    Substitution sub;
    for (auto& [atom, value] : r.pairs) {
      CHECK(atom.is_var());
      sub.bind(atom, value);
      // the solved atom does not occur in any right-hand side
      for (auto& [a2, v2] : r.pairs) {
        (void)a2;
        Substitution probe;
        probe.bind(atom, mk_numeral(Rational(123456)));
        CHECK(probe.apply(v2) == v2);
      }
    }
    CHECK(X.canonize(sub.apply(s), ctx) == X.canonize(sub.apply(t), ctx));
  }
}
