//===--- preprocess.hpp - Term abstraction ----------------------*- C++ -*-===//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//
//
// Rewrites arbitrary ground equations into abstracted equations over
// T(Sigma_X ∪ K): compound foreign subterms in non-conforming positions
// are replaced by fresh-or-reused constants, with a defining equation
// emitted per fresh constant. Declared constants already live in K, so
// only compound terms ever get named.
//
// An equation s ≈ t is abstracted when one of:
//   1. both sides are pure,
//   2. one side is in T_empty ∪ T_AC and the other is pure,
//   3. both sides are in T_AC with the same head symbol.
//
//===----------------------------------------------------------------------===//

#ifndef ACX_PREPROCESS_HPP
#define ACX_PREPROCESS_HPP

#include "acx/canon.hpp"
#include "acx/term.hpp"

#include <vector>

namespace acx {

class ShostakTheory;

struct AbstractedEquation {
  Equation eq;
  bool defining = false; // names a fresh K constant
};

struct AbstractionRun {
  std::vector<Equation> input;
  std::vector<AbstractedEquation> output;
  std::vector<std::pair<Term, Term>> k_bindings; // creation order
};

bool is_abstracted_equation(Term lhs, Term rhs);

/// Abstract a canonized equation set. Defining equations precede the
/// transformed equation they were created for.
AbstractionRun abstract_equations(const std::vector<Equation>& E0,
                                  CanonContext& ctx, const ShostakTheory& X);

/// Replace every generated K constant by its bound term, recursively.
/// User-declared constants are their own names and stay.
Term unabstract(Term t, const CanonContext& ctx);

} // namespace acx

#endif // ACX_PREPROCESS_HPP
