//===--- shostak.hpp - Pluggable theory canonizer/solver pairs --*- C++ -*-===//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//

#ifndef ACX_SHOSTAK_HPP
#define ACX_SHOSTAK_HPP

#include "acx/canon.hpp"
#include "acx/term.hpp"

#include <string_view>
#include <vector>

namespace acx {

/// Result of solving one pure equation: either inconsistent, or an
/// equivalent solved substitution. Solved atoms are pairwise distinct and
/// never occur in any right-hand side.
struct SolveResult {
  bool bottom = false;
  std::vector<std::pair<Term, Term>> pairs; // (atom, value)

  static SolveResult bot() { return SolveResult{true, {}}; }
};

/// A Shostak theory: a canonizer computing unique normal forms on pure
/// terms, and a solver. Both respect the atom order so orientation via
/// the solver produces rules compatible with the reduction ordering.
class ShostakTheory {
public:
  virtual ~ShostakTheory() = default;
  virtual std::string_view name() const = 0;
  /// Unique normal form of a pure term (atoms, numerals, theory ops).
  virtual Term canonize(Term pure, const CanonContext& ctx) const = 0;
  /// Solve s ≈ t (both pure).
  virtual SolveResult solve(Term s, Term t,
                            const CanonContext& ctx) const = 0;
};

/// X = ∅: the canonizer is the identity on atoms and the solver orients
/// an equation between two atoms toward the smaller one.
const ShostakTheory& empty_theory();

/// Linear rational arithmetic: +, -, unary -, and * with at least one
/// numeral factor. Canonical forms are rendered polynomials; the solver
/// pivots on the maximal atom.
const ShostakTheory& la_theory();

const ShostakTheory& theory_by_name(std::string_view name);

/// Nonlinear products and other theory-level misuse.
struct TheoryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace acx

#endif // ACX_SHOSTAK_HPP
