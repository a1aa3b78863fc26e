//===--- oracle.hpp - Bounded-saturation oracle -----------------*- C++ -*-===//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//
//
// An independent ground-truth check for desk-scale problems: saturates a
// subterm-closed universe under congruence, AC rearrangement, the
// hypotheses, and (for lia) identification of linear-arithmetic-equal
// terms via Gaussian elimination over the merged classes. Shares nothing
// with the completion/canonization path beyond the term representation.
//
//===----------------------------------------------------------------------===//

#ifndef ACX_ORACLE_HPP
#define ACX_ORACLE_HPP

#include "acx/term.hpp"

#include <vector>

namespace acx {

enum class OracleVerdict : uint8_t { Derivable, NotWithinBound };

struct OracleOptions {
  int rounds = 30;
  size_t max_entries = 30000;
  bool lia = false;
};

OracleVerdict oracle_derivable(const std::vector<Equation>& hypotheses,
                               const Equation& goal,
                               const OracleOptions& opts = {});

} // namespace acx

#endif // ACX_ORACLE_HPP
