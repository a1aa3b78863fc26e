//===--- ordering.cpp - Reduction orderings --------------------------------===//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//

#include "acx/ordering.hpp"

#include <stdexcept>

namespace acx {

namespace {

// Precedence classes for the LPO, ascending.
enum PrecClass { PC_NUMERAL = 0, PC_XSYM = 1, PC_CONST = 2 };

void require_pure(Term t) {
  if (classify(t) != TermClass::PureXK)
    throw std::invalid_argument("compare_x: term outside T(Sigma_X ∪ K): " +
                                to_sexpr(t));
}

// Three-way precedence on heads. Heads are equal only for identical
// constants/numerals or the same operator.
int prec_cmp(Term a, Term b) {
  auto cls = [](Term t) {
    switch (t.kind()) {
    case HeadKind::Numeral:
      return PC_NUMERAL;
    case HeadKind::Constant:
      return PC_CONST;
    default:
      return PC_XSYM;
    }
  };
  int ca = cls(a), cb = cls(b);
  if (ca != cb)
    return ca < cb ? -1 : 1;
  switch (ca) {
  case PC_NUMERAL:
    if (a.num() == b.num())
      return 0;
    return a.num() < b.num() ? -1 : 1;
  case PC_CONST:
    if (a.index() == b.index())
      return 0;
    return a.index() < b.index() ? -1 : 1;
  default: {
    int ra = symbol_info(a.sym()).x_rank;
    int rb = symbol_info(b.sym()).x_rank;
    if (ra == rb)
      return 0;
    return ra < rb ? -1 : 1;
  }
  }
}

bool lpo_gt(Term s, Term t);

bool lpo_ge(Term s, Term t) { return s == t || lpo_gt(s, t); }

// s > every argument of t.
bool dominates_args(Term s, Term t) {
  for (const Term& b : t.args())
    if (!lpo_gt(s, b))
      return false;
  return true;
}

// Argument order per status: * compares right-to-left, the rest
// left-to-right.
bool lex_gt(Term s, Term t) {
  bool rl = s.is_app() && s.sym() == sym_mul();
  size_t n = s.nargs();
  for (size_t k = 0; k < n; ++k) {
    size_t i = rl ? n - 1 - k : k;
    if (s.arg(i) == t.arg(i))
      continue;
    return lpo_gt(s.arg(i), t.arg(i));
  }
  return false;
}

bool lpo_gt(Term s, Term t) {
  if (s == t)
    return false;
  // (1) some argument of s is >= t
  for (const Term& a : s.args())
    if (lpo_ge(a, t))
      return true;
  int pc = prec_cmp(s, t);
  if (pc > 0) // (2) head precedence
    return dominates_args(s, t);
  if (pc == 0 && s.is_app() && t.is_app() && s.sym() == t.sym() &&
      s.nargs() == t.nargs()) // (3) lexicographic descent
    return lex_gt(s, t) && dominates_args(s, t);
  return false;
}

} // namespace

OrderResult compare_x(Term a, Term b) {
  require_pure(a);
  require_pure(b);
  if (a == b)
    return OrderResult::Equivalent;
  return lpo_gt(a, b) ? OrderResult::Greater : OrderResult::Less;
}

bool multiset_less(const TermMultiset& m1, const TermMultiset& m2) {
  TermMultiset d1 = m1.subtract(m2);
  TermMultiset d2 = m2.subtract(m1);
  if (d2.empty())
    return false; // m1 ⊇ m2 up to equality
  if (d1.empty())
    return true; // m1 ⊊ m2
  for (const auto& [x, cx] : d1.items()) {
    (void)cx;
    bool dominated = false;
    for (const auto& [y, cy] : d2.items()) {
      (void)cy;
      if (compare_x(x, y) == OrderResult::Less) {
        dominated = true;
        break;
      }
    }
    if (!dominated)
      return false;
  }
  return true;
}

OrderResult compare(Term s, Term t) {
  TermClass cs = classify(s), ct = classify(t);
  if (cs == TermClass::Other || ct == TermClass::Other)
    throw std::invalid_argument("compare: non-abstracted input: " +
                                to_sexpr(cs == TermClass::Other ? s : t));
  if (s == t)
    return OrderResult::Equivalent;
  // pure below everything else
  if (cs == TermClass::PureXK && ct == TermClass::PureXK)
    return compare_x(s, t);
  if (cs == TermClass::PureXK)
    return OrderResult::Less;
  if (ct == TermClass::PureXK)
    return OrderResult::Greater;
  // same-headed AC terms by the multiset extension on aliens
  if (cs == TermClass::TAC && ct == TermClass::TAC && s.sym() == t.sym()) {
    TermMultiset as = aliens(s, s.sym());
    TermMultiset at = aliens(t, t.sym());
    if (as == at)
      return OrderResult::Incomparable; // distinct combs, same multiset
    if (multiset_less(as, at))
      return OrderResult::Less;
    if (multiset_less(at, as))
      return OrderResult::Greater;
    return OrderResult::Incomparable;
  }
  return OrderResult::Incomparable;
}

} // namespace acx
