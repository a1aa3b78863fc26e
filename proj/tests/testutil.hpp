//===--- testutil.hpp - Shared test helpers ---------------------*- C++ -*-===//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//

#ifndef ACX_TESTS_TESTUTIL_HPP
#define ACX_TESTS_TESTUTIL_HPP

#include "acx/canon.hpp"
#include "acx/shostak.hpp"
#include "acx/term.hpp"

#include <random>
#include <unordered_map>
#include <vector>

namespace acx::test {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) { // inclusive
  return lo + (int)(rng() % (uint64_t)(hi - lo + 1));
}

/// A small fixed signature for randomized tests: one or two AC symbols,
/// a few uninterpreted functions, a pool of constants.
struct TestSig {
  SymbolId u1, u2, f1, f2, g1;
  std::vector<Term> consts;

  explicit TestSig(int n_consts = 6, const std::string& tag = "c") {
    u1 = register_symbol("tu", SymbolKind::AC, 2);
    u2 = register_symbol("tv", SymbolKind::AC, 2);
    f1 = register_symbol("tf", SymbolKind::Uninterpreted, 1);
    f2 = register_symbol("tg", SymbolKind::Uninterpreted, 2);
    g1 = register_symbol("th", SymbolKind::Uninterpreted, 1);
    for (int i = 0; i < n_consts; ++i)
      consts.push_back(mk_fresh_constant(tag + std::to_string(i)));
  }
};

/// Random ground term over the test signature (no arithmetic).
inline Term random_term(Rng& rng, const TestSig& sig, int depth,
                        bool use_u2 = true) {
  if (depth <= 0 || pick(rng, 0, 2) == 0)
    return sig.consts[pick(rng, 0, (int)sig.consts.size() - 1)];
  switch (pick(rng, 0, use_u2 ? 4 : 3)) {
  case 0:
    return mk_app(sig.f1, {random_term(rng, sig, depth - 1, use_u2)});
  case 1:
    return mk_app(sig.f2, {random_term(rng, sig, depth - 1, use_u2),
                           random_term(rng, sig, depth - 1, use_u2)});
  case 2:
  case 3:
    return mk_app(sig.u1, {random_term(rng, sig, depth - 1, use_u2),
                           random_term(rng, sig, depth - 1, use_u2)});
  default:
    return mk_app(sig.u2, {random_term(rng, sig, depth - 1, use_u2),
                           random_term(rng, sig, depth - 1, use_u2)});
  }
}

/// Random linear-arithmetic term over the given atoms.
inline Term random_la_term(Rng& rng, const std::vector<Term>& atoms,
                           int depth) {
  if (depth <= 0 || pick(rng, 0, 2) == 0) {
    if (pick(rng, 0, 2) == 0)
      return mk_numeral(Rational(pick(rng, -4, 4), pick(rng, 1, 3)));
    return atoms[pick(rng, 0, (int)atoms.size() - 1)];
  }
  switch (pick(rng, 0, 3)) {
  case 0:
    return mk_app(sym_add(), {random_la_term(rng, atoms, depth - 1),
                              random_la_term(rng, atoms, depth - 1)});
  case 1:
    return mk_app(sym_sub(), {random_la_term(rng, atoms, depth - 1),
                              random_la_term(rng, atoms, depth - 1)});
  case 2:
    return mk_app(sym_neg(), {random_la_term(rng, atoms, depth - 1)});
  default:
    return mk_app(sym_mul(),
                  {mk_numeral(Rational(pick(rng, -3, 3))),
                   random_la_term(rng, atoms, depth - 1)});
  }
}

/// Independent evaluator for LA terms under an atom assignment. Atoms are
/// constants; anything else must be arithmetic.
inline Rational eval_la(Term t,
                        const std::unordered_map<uint32_t, Rational>& env) {
  if (t.is_numeral())
    return t.num();
  if (t.is_constant() || t.is_var())
    return env.at(t.id());
  SymbolId s = t.sym();
  if (s == sym_add())
    return eval_la(t.arg(0), env) + eval_la(t.arg(1), env);
  if (s == sym_sub())
    return eval_la(t.arg(0), env) - eval_la(t.arg(1), env);
  if (s == sym_neg())
    return -eval_la(t.arg(0), env);
  if (s == sym_mul())
    return eval_la(t.arg(0), env) * eval_la(t.arg(1), env);
  throw std::logic_error("eval_la: not an arithmetic term");
}

/// A random AC-equivalent variant: rebuilds every AC comb from a shuffled
/// alien multiset with random tree shapes.
inline Term ac_shuffle(Rng& rng, Term t) {
  if (!t.is_app())
    return t;
  if (t.sym_kind() != SymbolKind::AC) {
    std::vector<Term> args;
    for (const Term& a : t.args())
      args.push_back(ac_shuffle(rng, a));
    return mk_app(t.sym(), std::move(args));
  }
  SymbolId u = t.sym();
  std::vector<Term> xs = aliens(t, u).expanded();
  for (Term& x : xs)
    x = ac_shuffle(rng, x);
  std::shuffle(xs.begin(), xs.end(), rng);
  // random right/left mixture
  while (xs.size() > 1) {
    int i = pick(rng, 0, (int)xs.size() - 2);
    Term merged = mk_app(u, {xs[i], xs[i + 1]});
    xs.erase(xs.begin() + i, xs.begin() + i + 2);
    xs.insert(xs.begin() + i, merged);
  }
  return xs[0];
}

/// Random abstracted term: pure, T_empty or T_AC over a pure base.
inline Term random_pure(Rng& rng, const std::vector<Term>& ks, int depth) {
  return random_la_term(rng, ks, depth);
}

} // namespace acx::test

#endif // ACX_TESTS_TESTUTIL_HPP
