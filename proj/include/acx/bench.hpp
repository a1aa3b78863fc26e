//===--- bench.hpp - Benchmark problem generators ---------------*- C++ -*-===//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//

#ifndef ACX_BENCH_HPP
#define ACX_BENCH_HPP

#include "acx/problem.hpp"

namespace acx {

struct BenchParams {
  int n; // number of hypothesis equations
  int d; // depth of the AC terms
};

/// Category C1: pure AC + free equality. n hypotheses
///   {e} ∪ a^p_1 ∪ ... ∪ a^p_d ≈ b^p
/// and one goal per pair p < q
///   a^p_d ∪ ... ∪ a^p_1 ∪ b^q ≈ a^q_d ∪ ... ∪ a^q_1 ∪ b^p.
Problem gen_c1(const BenchParams& params);

/// Category C2: same shape over linear arithmetic, the singleton element
/// being t_p - p with a chain t_p + 1 ≈ t_{p+1}.
Problem gen_c2(const BenchParams& params);

} // namespace acx

#endif // ACX_BENCH_HPP
