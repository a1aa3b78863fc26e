//===--- completion.hpp - The AC(X) inference engine ------------*- C++ -*-===//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//
//
// Ground AC-completion modulo a Shostak theory. The engine runs the seven
// inference rules Trivial / Bottom / Orient / Simplify / Compose /
// Collapse / Deduce under the strategy
//
//     Sim*  ( Tri | Bot | (Ori (Com Col Ded)*) )
//
// over a FIFO worklist, which realizes a strongly fair strategy: Orient
// only ever sees fully simplified equations and nothing is delayed
// forever. All terms entering the state are globally canonical and
// abstracted; orientation is delegated to the theory solver.
//
//===----------------------------------------------------------------------===//

#ifndef ACX_COMPLETION_HPP
#define ACX_COMPLETION_HPP

#include "acx/preprocess.hpp"
#include "acx/rewrite.hpp"
#include "acx/term.hpp"

#include <deque>
#include <optional>
#include <string>
#include <vector>

namespace acx {

class ShostakTheory;

enum class InferenceKind : uint8_t {
  Orient,
  Simplify,
  Compose,
  Collapse,
  Deduce,
  Trivial,
  Bottom
};

const char* inference_name(InferenceKind k); // "Ori", "Sim", ...

struct TraceEntry {
  int step = 0;
  InferenceKind kind;
  bool is_rule = false; // item reads l -> r rather than l ≈ r
  Term lhs, rhs;
  std::vector<int> refs; // cited steps; layout depends on kind
  Term src_lhs, src_rhs; // the touched equation, for input equations
};

std::string render_trace_entry(const TraceEntry& e);

struct PendingEquation {
  Term lhs, rhs;
  int birth = 0; // trace step that produced it; 0 for input equations
  bool defining = false;
};

struct FinalSystem {
  bool inconsistent = false;
  std::vector<Rule> rules; // persistent rules, insertion order
  std::vector<TraceEntry> trace;
  long inferences = 0;
};

struct CompletionOptions {
  long max_inferences = 1000000;
  long rewrite_budget = 2000000;
};

/// Head critical pair between two rules whose left-hand sides overlap on
/// a common alien multiset under the same AC symbol. Boundary cases where
/// one side's aliens contain the other's entirely yield nothing (Collapse
/// subsumes them).
std::optional<Equation> head_cp(const Rule& a, const Rule& b,
                                CanonContext& ctx, const ShostakTheory& X);

/// Run completion to quiescence. Throws BudgetError if the inference or
/// rewrite budget is exhausted.
FinalSystem complete(std::deque<PendingEquation> E0, CanonContext& ctx,
                     const ShostakTheory& X,
                     const CompletionOptions& opts = {});

/// Rules that are not part of the abstraction naming layer: neither
/// descended from a defining equation nor rewriting a generated constant.
std::vector<Rule> core_rules(const FinalSystem& sys, const CanonContext& ctx);

/// No rule's left side reducible by the others, no right side reducible
/// at all.
bool is_inter_reduced(const std::vector<Rule>& rules, CanonContext& ctx,
                      const ShostakTheory& X);

enum class Verdict : uint8_t { Valid, ValidInconsistent, Invalid };

struct DecideOutcome {
  Verdict verdict = Verdict::Invalid;
  FinalSystem system;
  AbstractionRun abstraction;
};

/// The decision procedure: canonize and abstract the hypotheses, complete
/// them, then compare the normal forms of the canonized goal sides.
/// Inconsistent hypotheses entail every goal. Several goals are decided
/// against the same completed system; the verdict is their conjunction.
DecideOutcome decide(const std::vector<Equation>& hypotheses,
                     const std::vector<Equation>& goals, CanonContext& ctx,
                     const ShostakTheory& X,
                     const CompletionOptions& opts = {});

inline DecideOutcome decide(const std::vector<Equation>& hypotheses,
                            const Equation& goal, CanonContext& ctx,
                            const ShostakTheory& X,
                            const CompletionOptions& opts = {}) {
  return decide(hypotheses, std::vector<Equation>{goal}, ctx, X, opts);
}

} // namespace acx

#endif // ACX_COMPLETION_HPP
