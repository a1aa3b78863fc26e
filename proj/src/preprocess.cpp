//===--- preprocess.cpp - Term abstraction -----------------------------------//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//

#include "acx/preprocess.hpp"

#include "acx/shostak.hpp"

#include <cassert>
#include <stdexcept>

namespace acx {

bool is_abstracted_equation(Term lhs, Term rhs) {
  TermClass cl = classify(lhs), cr = classify(rhs);
  auto foreign = [](TermClass c) {
    return c == TermClass::TEmpty || c == TermClass::TAC;
  };
  if (cl == TermClass::PureXK && cr == TermClass::PureXK)
    return true;
  if (cl == TermClass::PureXK && foreign(cr))
    return true;
  if (cr == TermClass::PureXK && foreign(cl))
    return true;
  return cl == TermClass::TAC && cr == TermClass::TAC &&
         lhs.sym() == rhs.sym();
}

namespace {

bool is_foreign_leaf(Term t) {
  TermClass c = classify(t);
  return c == TermClass::TEmpty || c == TermClass::TAC;
}

// Innermost-leftmost minimal foreign subterm at a proper position.
// Nodes of an AC comb directly under the same symbol are not occurrences
// of their own; the comb is one term.
Term find_proper_candidate(Term t, bool root, SymbolId parent_sym,
                           bool parent_is_ac) {
  if (classify(t) == TermClass::PureXK)
    return Term();
  if (t.is_app()) {
    bool ac = t.sym_kind() == SymbolKind::AC;
    for (const Term& a : t.args()) {
      Term c = find_proper_candidate(a, false, t.sym(), ac);
      if (c.valid())
        return c;
    }
  }
  bool comb_internal =
      parent_is_ac && t.is_app() && t.sym() == parent_sym;
  if (!root && !comb_internal && is_foreign_leaf(t))
    return t;
  return Term();
}

Term replace_all(Term t, Term from, Term to) {
  if (t == from)
    return to;
  if (!t.is_app())
    return t;
  bool changed = false;
  std::vector<Term> args;
  args.reserve(t.nargs());
  for (const Term& a : t.args()) {
    Term b = replace_all(a, from, to);
    changed |= (b != a);
    args.push_back(b);
  }
  return changed ? mk_app(t.sym(), std::move(args)) : t;
}

} // namespace

AbstractionRun abstract_equations(const std::vector<Equation>& E0,
                                  CanonContext& ctx,
                                  const ShostakTheory& X) {
  AbstractionRun run;
  run.input = E0;
  for (const Equation& e0 : E0) {
    Term s = global_can(e0.lhs, ctx, X);
    Term t = global_can(e0.rhs, ctx, X);
    // The impure-node count shrinks with every replacement, so this
    // terminates; the guard is belt and braces.
    for (int iter = 0; !is_abstracted_equation(s, t); ++iter) {
      if (iter > 10000)
        throw std::logic_error("abstraction did not reach a fixpoint");
      Term cand = find_proper_candidate(s, true, 0, false);
      if (!cand.valid())
        cand = find_proper_candidate(t, true, 0, false);
      if (!cand.valid()) {
        // Both sides are minimal foreign terms in a non-conforming
        // combination. Abstract a whole side, preferring the one that is
        // not AC-headed so AC structure survives for completion.
        TermClass cl = classify(s), cr = classify(t);
        assert(cl != TermClass::PureXK || cr != TermClass::PureXK);
        if (cr == TermClass::TEmpty && cl != TermClass::TEmpty)
          cand = t;
        else if (cl == TermClass::TEmpty)
          cand = s;
        else
          cand = s; // both AC-headed with distinct symbols
      }
      bool fresh = false;
      Term k = ctx.k_for(cand, &fresh);
      if (fresh)
        run.output.push_back({Equation{cand, k}, true});
      s = global_can(replace_all(s, cand, k), ctx, X);
      t = global_can(replace_all(t, cand, k), ctx, X);
    }
    run.output.push_back({Equation{s, t}, false});
  }
  run.k_bindings = ctx.k_bindings();
  return run;
}

Term unabstract(Term t, const CanonContext& ctx) {
  if (t.is_constant()) {
    auto b = ctx.k_binding(t);
    return b ? unabstract(*b, ctx) : t;
  }
  if (!t.is_app())
    return t;
  bool changed = false;
  std::vector<Term> args;
  args.reserve(t.nargs());
  for (const Term& a : t.args()) {
    Term b = unabstract(a, ctx);
    changed |= (b != a);
    args.push_back(b);
  }
  return changed ? mk_app(t.sym(), std::move(args)) : t;
}

} // namespace acx
