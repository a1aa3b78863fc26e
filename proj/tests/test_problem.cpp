//===--- test_problem.cpp - Parser, printer and generators ---------------------//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//

#include "acx/problem.hpp"

#include "acx/bench.hpp"
#include "acx/completion.hpp"
#include "acx/oracle.hpp"
#include "acx/shostak.hpp"
#include "testutil.hpp"

#include <doctest.h>

using namespace acx;
using namespace acx::test;

TEST_CASE("parsing the ground AC example") {
  Problem p = parse_problem(R"((theory empty)
(ac u)
(const a1 a2 a3 a4 a5 a6)
(assert (= (u a1 a4) a1))
(assert (= (u a3 a6) (u a5 a5)))
(assert (= a5 a4))
(assert (= a6 a2))
(goal (= a1 (u a1 (u a6 a3))))
)");
  CHECK(p.theory == "empty");
  CHECK(p.hypotheses.size() == 4);
  CHECK(p.goals.size() == 1);
  CHECK(p.const_names.size() == 6);
  CHECK(p.hypotheses[0].lhs ==
        mk_app(p.symbol("u"), {p.constant("a1"), p.constant("a4")}));
}

TEST_CASE("parse errors carry positions") {
  // no goal
  CHECK_THROWS_WITH_AS(parse_problem("(theory empty)\n(const a b)\n"
                                     "(assert (= a b))\n"),
                       doctest::Contains("no goal"), ParseError);
  // AC arity is fixed at two
  try {
    parse_problem("(theory empty)\n(ac u)\n(const a b)\n"
                  "(goal (= (u a) b))\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
    CHECK(std::string(e.what()).find("arity") != std::string::npos);
  }
  // undeclared symbols
  CHECK_THROWS_AS(parse_problem("(theory empty)\n(const a)\n"
                                "(goal (= a q))\n"),
                  ParseError);
  // arithmetic needs the lia theory
  CHECK_THROWS_WITH_AS(parse_problem("(theory empty)\n(const a)\n"
                                     "(goal (= (+ a 1) a))\n"),
                       doctest::Contains("lia"), ParseError);
  CHECK_THROWS_AS(parse_problem("(theory empty)\n(const a)\n"
                                "(goal (= 1 1))\n"),
                  ParseError);
  // malformed forms
  CHECK_THROWS_AS(parse_problem("(goal (= a"), ParseError);
  CHECK_THROWS_AS(parse_problem("(frobnicate a)\n(goal (= a a))\n"),
                  ParseError);
  // redeclaration
  CHECK_THROWS_AS(parse_problem("(theory empty)\n(const a a)\n"
                                "(goal (= a a))\n"),
                  ParseError);
}

TEST_CASE("rationals and unary minus parse") {
  Problem p = parse_problem(R"((theory lia)
(const x)
(assert (= (* (/ 1 2) x) (- x (* (/ 1 2) x))))
(goal (= (- x) (* -1 x)))
)");
  CanonContext ctx;
  const ShostakTheory& X = la_theory();
  CHECK(global_can(p.goals[0].lhs, ctx, X) ==
        global_can(p.goals[0].rhs, ctx, X));
}

TEST_CASE("render/parse round-trip is a fixed point") {
  const char* texts[] = {
      R"((theory empty)
(ac u v)
(op f 2)
(const a b c)
(assert (= (u a (v b c)) (f a b)))
(goal (= a b))
)",
      R"((theory lia)
(ac u)
(op f 1)
(const a b)
(assert (= (u a (- b a)) (f (+ a 1))))
(goal (= (* 2 a) (+ a a)))
)"};
  for (const char* text : texts) {
    std::string r1 = render_problem(parse_problem(text));
    std::string r2 = render_problem(parse_problem(r1));
    CHECK(r1 == r2);
  }
}

TEST_CASE("benchmark generator C1") {
  Problem p = gen_c1(BenchParams{3, 3});
  CHECK(p.theory == "empty");
  CHECK(p.hypotheses.size() == 3);
  CHECK(p.goals.size() == 3);
  {
    CanonContext ctx;
    DecideOutcome out =
        decide(p.hypotheses, p.goals, ctx, theory_by_name(p.theory));
    CHECK(out.verdict == Verdict::Valid);
  }

  Problem small = gen_c1(BenchParams{2, 1});
  CHECK(small.goals.size() == 1);
  {
    CanonContext ctx;
    DecideOutcome out = decide(small.hypotheses, small.goals, ctx,
                               theory_by_name(small.theory));
    CHECK(out.verdict == Verdict::Valid);
    OracleOptions oo;
    CHECK(oracle_derivable(small.hypotheses, small.goals[0], oo) ==
          OracleVerdict::Derivable);
  }

  // replacing one b with a fresh constant breaks the goal
  Problem broken = gen_c1(BenchParams{2, 1});
  Term fresh = mk_fresh_constant("c1_fresh");
  SymbolId u = broken.symbol("u");
  Term a1 = broken.constant("a1_1");
  Term a2 = broken.constant("a2_1");
  Term b1 = broken.constant("b1");
  broken.goals[0] =
      Equation{mk_app(u, {a1, fresh}), mk_app(u, {a2, b1})};
  {
    CanonContext ctx;
    DecideOutcome out = decide(broken.hypotheses, broken.goals, ctx,
                               theory_by_name(broken.theory));
    CHECK(out.verdict == Verdict::Invalid);
    OracleOptions oo;
    CHECK(oracle_derivable(broken.hypotheses, broken.goals[0], oo) ==
          OracleVerdict::NotWithinBound);
  }

  CHECK_THROWS_AS(gen_c1(BenchParams{1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(gen_c1(BenchParams{3, 0}), std::invalid_argument);
}

TEST_CASE("benchmark generator C2") {
  Problem p = gen_c2(BenchParams{3, 3});
  CHECK(p.theory == "lia");
  CHECK(p.hypotheses.size() == 3 + 2); // n hypotheses plus the chain
  {
    CanonContext ctx;
    DecideOutcome out =
        decide(p.hypotheses, p.goals, ctx, theory_by_name(p.theory));
    CHECK(out.verdict == Verdict::Valid);
  }

  Problem small = gen_c2(BenchParams{2, 1});
  {
    CanonContext ctx;
    DecideOutcome out = decide(small.hypotheses, small.goals, ctx,
                               theory_by_name(small.theory));
    CHECK(out.verdict == Verdict::Valid);
    OracleOptions oo;
    oo.lia = true;
    CHECK(oracle_derivable(small.hypotheses, small.goals[0], oo) ==
          OracleVerdict::Derivable);
  }

  // breaking the arithmetic chain invalidates the goal
  Problem broken = gen_c2(BenchParams{2, 1});
  Term t1 = broken.constant("t1");
  Term t2 = broken.constant("t2");
  broken.hypotheses.back() =
      Equation{mk_app(sym_add(), {t1, mk_numeral(Rational(2))}), t2};
  {
    CanonContext ctx;
    DecideOutcome out = decide(broken.hypotheses, broken.goals, ctx,
                               theory_by_name(broken.theory));
    CHECK(out.verdict == Verdict::Invalid);
    OracleOptions oo;
    oo.lia = true;
    CHECK(oracle_derivable(broken.hypotheses, broken.goals[0], oo) ==
          OracleVerdict::NotWithinBound);
  }
}
