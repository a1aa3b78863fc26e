//===--- rewrite.hpp - Ground rewriting modulo AC ---------------*- C++ -*-===//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//
//
// Ground AC rewriting over canonical terms, where AC-equality is syntactic
// equality: a rule matches a position either plainly (the subterm is the
// left-hand side) or by extension (both are headed by the same AC symbol
// and the rule's aliens form a strict sub-multiset); and canonized
// rewriting, which re-canonizes the whole reduct after every plain step.
//
//===----------------------------------------------------------------------===//

#ifndef ACX_REWRITE_HPP
#define ACX_REWRITE_HPP

#include "acx/canon.hpp"
#include "acx/term.hpp"

#include <optional>
#include <algorithm>
#include <random>
#include <unordered_map>

namespace acx {

class ShostakTheory;

struct Rule {
  Term lhs, rhs;
  int step = 0;          // trace step that created / last rewrote this rule
  bool defining = false; // descends from an abstraction defining equation
};

enum class MatchKind : uint8_t { None, Plain, Extended };

struct MatchOutcome {
  MatchKind kind = MatchKind::None;
  TermMultiset remainder; // non-empty iff Extended
};

/// Match l against s|_p (both globally canonical).
MatchOutcome ac_match_at(Term s, std::span<const uint32_t> p, Term l);

/// One plain AC rewrite step at p, not canonized. nullopt on no match.
std::optional<Term> rewrite_ac(Term s, const Rule& rule,
                               std::span<const uint32_t> p);

struct RewriteStep {
  Term result;       // globally canonical
  size_t rule_index; // index into the rule span
  Position pos;
};

struct RewriteBudget {
  long remaining = 100000;
};

/// First applicable canonized rewrite step: innermost position, leftmost,
/// rules tried in span order. Dead rules can be skipped with `alive`.
/// When `rng` is given, a uniformly random applicable (position, rule)
/// pair is taken instead; final systems are confluent so the normal form
/// must not depend on this choice.
std::optional<RewriteStep>
can_rewrite_step(Term s, std::span<const Rule> rules, CanonContext& ctx,
                 const ShostakTheory& X,
                 const std::vector<char>* alive = nullptr,
                 std::mt19937_64* rng = nullptr);

/// Fixpoint of can_rewrite_step. Throws BudgetError when the step budget
/// runs out, which signals a non-terminating rule set.
Term normal_form(Term s, std::span<const Rule> rules, CanonContext& ctx,
                 const ShostakTheory& X, RewriteBudget* budget = nullptr,
                 const std::vector<char>* alive = nullptr,
                 std::mt19937_64* rng = nullptr);

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace acx

#endif // ACX_REWRITE_HPP
