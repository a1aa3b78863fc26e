//===--- bench.cpp - Benchmark problem generators -----------------------------//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//

#include "acx/bench.hpp"

#include <stdexcept>

namespace acx {

namespace {

void validate(const BenchParams& p) {
  if (p.n < 2 || p.d < 1)
    throw std::invalid_argument("bench parameters require n >= 2, d >= 1");
}

Term comb_right(SymbolId u, const std::vector<Term>& xs) {
  Term acc = xs.back();
  for (size_t i = xs.size() - 1; i-- > 0;)
    acc = mk_app(u, {xs[i], acc});
  return acc;
}

struct Gen {
  Problem p;
  SymbolId u, sing;

  void declare_base(const std::string& theory) {
    p.theory = theory;
    u = register_symbol("u", SymbolKind::AC, 2);
    p.ac_symbols.push_back("u");
    sing = register_symbol("sing", SymbolKind::Uninterpreted, 1);
    p.op_decls.emplace_back("sing", 1);
  }

  Term constant(const std::string& name) {
    Term c = mk_fresh_constant(name);
    p.constants[name] = c;
    p.const_names.push_back(name);
    return c;
  }

  // a^p_d ∪ ... ∪ a^p_1 ∪ tail
  Term chain(const std::vector<Term>& as, Term tail) {
    std::vector<Term> xs;
    for (size_t i = as.size(); i-- > 0;)
      xs.push_back(as[i]);
    xs.push_back(tail);
    return comb_right(u, xs);
  }

  void add_goals(const std::vector<std::vector<Term>>& a,
                 const std::vector<Term>& b) {
    size_t n = b.size();
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        p.goals.push_back(Equation{chain(a[i], b[j]), chain(a[j], b[i])});
  }
};

} // namespace

Problem gen_c1(const BenchParams& params) {
  validate(params);
  Gen g;
  g.declare_base("empty");
  Term e = g.constant("e");
  std::vector<std::vector<Term>> a(params.n);
  std::vector<Term> b(params.n);
  for (int q = 0; q < params.n; ++q) {
    for (int i = 1; i <= params.d; ++i)
      a[q].push_back(
          g.constant("a" + std::to_string(q + 1) + "_" + std::to_string(i)));
    b[q] = g.constant("b" + std::to_string(q + 1));
  }
  for (int q = 0; q < params.n; ++q) {
    std::vector<Term> xs{mk_app(g.sing, {e})};
    xs.insert(xs.end(), a[q].begin(), a[q].end());
    g.p.hypotheses.push_back(Equation{comb_right(g.u, xs), b[q]});
  }
  g.add_goals(a, b);
  return std::move(g.p);
}

Problem gen_c2(const BenchParams& params) {
  validate(params);
  Gen g;
  g.declare_base("lia");
  std::vector<Term> t(params.n);
  std::vector<std::vector<Term>> a(params.n);
  std::vector<Term> b(params.n);
  for (int q = 0; q < params.n; ++q)
    t[q] = g.constant("t" + std::to_string(q + 1));
  for (int q = 0; q < params.n; ++q) {
    for (int i = 1; i <= params.d; ++i)
      a[q].push_back(
          g.constant("a" + std::to_string(q + 1) + "_" + std::to_string(i)));
    b[q] = g.constant("b" + std::to_string(q + 1));
  }
  for (int q = 0; q < params.n; ++q) {
    Term elem = mk_app(
        g.sing, {mk_app(sym_sub(), {t[q], mk_numeral(Rational(q + 1))})});
    std::vector<Term> xs{elem};
    xs.insert(xs.end(), a[q].begin(), a[q].end());
    g.p.hypotheses.push_back(Equation{comb_right(g.u, xs), b[q]});
  }
  for (int q = 0; q + 1 < params.n; ++q)
    g.p.hypotheses.push_back(Equation{
        mk_app(sym_add(), {t[q], mk_numeral(Rational(1))}), t[q + 1]});
  g.add_goals(a, b);
  return std::move(g.p);
}

} // namespace acx
