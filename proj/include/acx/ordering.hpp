//===--- ordering.hpp - Reduction orderings ---------------------*- C++ -*-===//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//
//
// Two layers:
//
//   compare_x   a total rewrite ordering on T(Sigma_X ∪ K), realized as a
//               ground lexicographic path ordering. Precedence, ascending:
//               numerals (ordered by value) < theory operators (* < + <
//               neg < -) < K constants (ordered by creation index).
//               All operators compare their arguments left to right except
//               *, which compares right to left so that k*c sits below the
//               variants the canonizer collapses.
//
//   compare     the partial reduction ordering over abstracted terms:
//               compare_x inside the pure fragment, pure terms below
//               T_empty and T_AC, and same-headed AC terms by the multiset
//               extension of compare_x on their alien multisets. Everything
//               else is incomparable; callers must pass abstracted terms.
//
//===----------------------------------------------------------------------===//

#ifndef ACX_ORDERING_HPP
#define ACX_ORDERING_HPP

#include "acx/term.hpp"

namespace acx {

enum class OrderResult : uint8_t { Less, Greater, Equivalent, Incomparable };

/// Total order on T(Sigma_X ∪ K); never returns Incomparable.
/// Throws std::invalid_argument outside that fragment.
OrderResult compare_x(Term a, Term b);

/// Dershowitz–Manna multiset extension of compare_x. All elements must be
/// in T(Sigma_X ∪ K).
bool multiset_less(const TermMultiset& m1, const TermMultiset& m2);

/// The partial ordering over the abstracted fragment. Equivalent iff the
/// terms are identical. Throws std::invalid_argument when either argument
/// does not classify into the fragment.
OrderResult compare(Term s, Term t);

inline OrderResult flip(OrderResult r) {
  if (r == OrderResult::Less)
    return OrderResult::Greater;
  if (r == OrderResult::Greater)
    return OrderResult::Less;
  return r;
}

} // namespace acx

#endif // ACX_ORDERING_HPP
