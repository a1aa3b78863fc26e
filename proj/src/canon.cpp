//===--- canon.cpp - Global canonizer and solve wrapper ---------------------//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//

#include "acx/canon.hpp"

#include "acx/ordering.hpp"
#include "acx/shostak.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace acx {

//===----------------------------------------------------------------------===//
// CanonContext
//===----------------------------------------------------------------------===//

Term CanonContext::abstraction_var(Term foreign) {
  auto it = alpha_.find(foreign.id());
  if (it != alpha_.end())
    return it->second;
  Term v = mk_fresh_var();
  alpha_.emplace(foreign.id(), v);
  rho_.emplace(v.index(), foreign);
  return v;
}

Term CanonContext::rho(Term var) const {
  assert(var.is_var());
  auto it = rho_.find(var.index());
  if (it == rho_.end())
    throw std::logic_error("rho: unknown abstraction variable");
  return it->second;
}

Term CanonContext::unabstract_vars(Term t) const {
  if (t.is_var())
    return rho(t);
  if (!t.is_app())
    return t;
  bool changed = false;
  std::vector<Term> args;
  args.reserve(t.nargs());
  for (const Term& a : t.args()) {
    Term b = unabstract_vars(a);
    changed |= (b != a);
    args.push_back(b);
  }
  return changed ? mk_app(t.sym(), std::move(args)) : t;
}

Term CanonContext::k_for(Term canonical_term, bool* fresh) {
  auto it = pi_.find(canonical_term.id());
  if (it != pi_.end()) {
    if (fresh)
      *fresh = false;
    return it->second;
  }
  Term k = mk_fresh_constant("");
  pi_.emplace(canonical_term.id(), k);
  k_bindings_.emplace_back(k, canonical_term);
  binding_of_.emplace(k.id(), canonical_term);
  if (fresh)
    *fresh = true;
  return k;
}

bool CanonContext::is_generated_k(Term t) const {
  return t.is_constant() && binding_of_.count(t.id()) > 0;
}

std::optional<Term> CanonContext::k_binding(Term k) const {
  auto it = binding_of_.find(k.id());
  if (it == binding_of_.end())
    return std::nullopt;
  return it->second;
}

//===----------------------------------------------------------------------===//
// AC canonical forms
//===----------------------------------------------------------------------===//

Term mk_ac_comb(SymbolId u, const TermMultiset& elems) {
  std::vector<Term> xs = elems.expanded();
  assert(!xs.empty());
  std::sort(xs.begin(), xs.end(), structural_less);
  Term acc = xs.back();
  for (size_t i = xs.size() - 1; i-- > 0;)
    acc = mk_app(u, {xs[i], acc});
  return acc;
}

Term can_ac(Term t) {
  if (!t.is_app())
    return t;
  if (t.sym_kind() != SymbolKind::AC) {
    bool changed = false;
    std::vector<Term> args;
    args.reserve(t.nargs());
    for (const Term& a : t.args()) {
      Term b = can_ac(a);
      changed |= (b != a);
      args.push_back(b);
    }
    return changed ? mk_app(t.sym(), std::move(args)) : t;
  }
  SymbolId u = t.sym();
  Term l = can_ac(t.arg(0));
  Term r = can_ac(t.arg(1));
  TermMultiset elems = aliens(l, u).set_union(aliens(r, u));
  return mk_ac_comb(u, elems);
}

//===----------------------------------------------------------------------===//
// Pure parts and the global canonizer
//===----------------------------------------------------------------------===//

Term pure_part(Term t, CanonContext& ctx) {
  switch (t.kind()) {
  case HeadKind::Numeral:
  case HeadKind::Constant:
  case HeadKind::Var:
    return t;
  case HeadKind::App:
    break;
  }
  if (t.sym_kind() == SymbolKind::TheoryX) {
    bool changed = false;
    std::vector<Term> args;
    args.reserve(t.nargs());
    for (const Term& a : t.args()) {
      Term b = pure_part(a, ctx);
      changed |= (b != a);
      args.push_back(b);
    }
    return changed ? mk_app(t.sym(), std::move(args)) : t;
  }
  return ctx.abstraction_var(t);
}

Term global_can(Term t, CanonContext& ctx, const ShostakTheory& X) {
  auto& memo = ctx.can_memo();
  auto hit = memo.find(t.id());
  if (hit != memo.end())
    return hit->second;

  Term result = t;
  switch (t.kind()) {
  case HeadKind::Numeral:
  case HeadKind::Constant:
  case HeadKind::Var:
    break;
  case HeadKind::App: {
    const SymbolInfo& info = symbol_info(t.sym());
    switch (info.kind) {
    case SymbolKind::Uninterpreted: {
      std::vector<Term> args;
      args.reserve(t.nargs());
      for (const Term& a : t.args())
        args.push_back(global_can(a, ctx, X));
      result = mk_app(t.sym(), std::move(args));
      break;
    }
    case SymbolKind::AC: {
      Term l = global_can(t.arg(0), ctx, X);
      Term r = global_can(t.arg(1), ctx, X);
      result = can_ac(mk_app(t.sym(), {l, r}));
      break;
    }
    case SymbolKind::TheoryX: {
      std::vector<Term> args;
      args.reserve(t.nargs());
      for (const Term& a : t.args())
        args.push_back(global_can(a, ctx, X));
      Term pure = pure_part(mk_app(t.sym(), std::move(args)), ctx);
      Term cx = X.canonize(pure, ctx);
      result = ctx.unabstract_vars(cx);
      break;
    }
    }
    break;
  }
  }
  memo.emplace(t.id(), result);
  memo.emplace(result.id(), result); // fixpoint
  return result;
}

//===----------------------------------------------------------------------===//
// Atom order
//===----------------------------------------------------------------------===//

bool atom_less(Term a, Term b, const CanonContext& ctx) {
  if (a == b)
    return false;
  // constants below variables: a variable stands for a foreign term,
  // which the ordering places above everything pure
  if (a.is_constant() != b.is_constant())
    return a.is_constant();
  if (a.is_constant())
    return a.index() < b.index();
  assert(a.is_var() && b.is_var());
  Term ra = ctx.rho(a), rb = ctx.rho(b);
  if (ra.ac_headed() && rb.ac_headed() && ra.sym() == rb.sym() &&
      classify(ra) == TermClass::TAC && classify(rb) == TermClass::TAC) {
    TermMultiset ma = aliens(ra, ra.sym());
    TermMultiset mb = aliens(rb, rb.sym());
    if (multiset_less(ma, mb))
      return true;
    if (multiset_less(mb, ma))
      return false;
  }
  return structural_less(ra, rb);
}

//===----------------------------------------------------------------------===//
// Solve wrapper
//===----------------------------------------------------------------------===//

std::optional<std::vector<Equation>>
wrapped_solve(Term s, Term t, CanonContext& ctx, const ShostakTheory& X) {
  Term ps = pure_part(s, ctx);
  Term pt = pure_part(t, ctx);
  SolveResult res = X.solve(ps, pt, ctx);
  if (res.bottom)
    return std::nullopt;
  std::vector<Equation> rules;
  rules.reserve(res.pairs.size());
  for (const auto& [atom, value] : res.pairs) {
    Term lhs = atom.is_var() ? ctx.rho(atom) : atom;
    Term rhs = global_can(ctx.unabstract_vars(value), ctx, X);
    rules.push_back(Equation{lhs, rhs});
  }
  return rules;
}

} // namespace acx
