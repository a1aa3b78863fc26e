//===--- canon.hpp - Global canonizer and solve wrapper ---------*- C++ -*-===//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//

#ifndef ACX_CANON_HPP
#define ACX_CANON_HPP

#include "acx/term.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace acx {

class ShostakTheory;

/// Per-run canonization state: the alpha/rho bijection between foreign
/// terms and abstraction variables, the registry of constants introduced
/// by the abstraction pass, and the canonizer memo table.
///
/// One completion run owns one context; contexts are not shared across
/// threads.
class CanonContext {
public:
  /// alpha: foreign term -> abstraction variable, extending on demand.
  /// The inverse rho entry is recorded at the same time.
  Term abstraction_var(Term foreign);
  /// rho: abstraction variable -> foreign term. Total on every variable
  /// this context created.
  Term rho(Term var) const;
  /// Replace every abstraction variable in t by its rho image.
  Term unabstract_vars(Term t) const;

  /// pi: canonical foreign term -> K constant, fresh-or-reused.
  /// `fresh` reports whether a new constant (and binding) was created.
  Term k_for(Term canonical_term, bool* fresh = nullptr);
  /// The (constant, bound term) pairs in creation order.
  const std::vector<std::pair<Term, Term>>& k_bindings() const {
    return k_bindings_;
  }
  /// True for constants this context created via k_for (as opposed to
  /// user-declared constants).
  bool is_generated_k(Term t) const;
  /// The term a generated constant stands for, if any.
  std::optional<Term> k_binding(Term k) const;

  std::unordered_map<uint32_t, Term>& can_memo() { return can_memo_; }

private:
  std::unordered_map<uint32_t, Term> alpha_;
  std::unordered_map<uint32_t, Term> rho_;
  std::vector<std::pair<Term, Term>> k_bindings_;
  std::unordered_map<uint32_t, Term> pi_;
  std::unordered_map<uint32_t, Term> binding_of_;
  std::unordered_map<uint32_t, Term> can_memo_;
};

/// Right comb u(s1, u(s2, ...)) over the multiset, sorted ascending by the
/// structural order. Singleton multisets yield the single element.
Term mk_ac_comb(SymbolId u, const TermMultiset& elems);

/// AC canonical form: degenerate right-leaning combs with structurally
/// sorted aliens; decides the AC word problem.
Term can_ac(Term t);

/// The pure Sigma_X-part of t: theory-headed structure kept, every maximal
/// foreign subterm replaced by its abstraction variable (constants and
/// numerals are already pure and stay).
Term pure_part(Term t, CanonContext& ctx);

/// The global canonizer combining the theory canonizer with can_ac.
/// Idempotent; decides equality modulo AC, the free theory and X.
Term global_can(Term t, CanonContext& ctx, const ShostakTheory& X);

/// Total order on solver atoms (constants and abstraction variables).
/// Constants sit below variables and compare by creation index; variables
/// compare through their rho images (multiset extension of compare_x for
/// same-headed AC images, structural order otherwise).
bool atom_less(Term a, Term b, const CanonContext& ctx);

/// The solve wrapper: abstracts both sides, runs the theory solver, and
/// maps the solved pairs back through rho with re-canonized right-hand
/// sides. nullopt means the equation is inconsistent with the theory.
std::optional<std::vector<Equation>>
wrapped_solve(Term s, Term t, CanonContext& ctx, const ShostakTheory& X);

} // namespace acx

#endif // ACX_CANON_HPP
