//===--- shostak.cpp - Theory instances: empty and linear arithmetic --------//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//

#include "acx/shostak.hpp"

#include "acx/ordering.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace acx {

namespace {

//===----------------------------------------------------------------------===//
// X = ∅
//===----------------------------------------------------------------------===//

class EmptyTheory final : public ShostakTheory {
public:
  std::string_view name() const override { return "empty"; }

  Term canonize(Term pure, const CanonContext&) const override {
    return pure;
  }

  SolveResult solve(Term s, Term t, const CanonContext& ctx) const override {
    if (s == t)
      return SolveResult{};
    if (!is_atom(s) || !is_atom(t))
      throw TheoryError("empty theory: non-atomic equation side");
    SolveResult r;
    if (atom_less(s, t, ctx))
      r.pairs.emplace_back(t, s);
    else
      r.pairs.emplace_back(s, t);
    return r;
  }

private:
  static bool is_atom(Term t) { return t.is_constant() || t.is_var(); }
};

//===----------------------------------------------------------------------===//
// Linear rational arithmetic
//===----------------------------------------------------------------------===//

// Unique representation of a linear function: rational coefficients over
// atoms (constants or abstraction variables) plus a rational constant.
// Zero coefficients are never stored.
struct Poly {
  std::vector<std::pair<Term, Rational>> monos; // sorted by atom_less
  Rational constant;

  bool numeric() const { return monos.empty(); }
};

class PolyBuilder {
public:
  explicit PolyBuilder(const CanonContext& ctx) : ctx_(ctx) {}

  void add_atom(Term atom, const Rational& c) {
    auto [it, inserted] = coeff_.try_emplace(atom.id(), atom, c);
    if (!inserted)
      it->second.second += c;
  }
  void add_const(const Rational& c) { constant_ += c; }

  void add_poly(const Poly& p, const Rational& scale) {
    for (const auto& [a, c] : p.monos)
      add_atom(a, c * scale);
    constant_ += p.constant * scale;
  }

  Poly finish() {
    Poly p;
    p.constant = constant_;
    for (auto& [id, ac] : coeff_) {
      (void)id;
      if (!ac.second.is_zero())
        p.monos.push_back(ac);
    }
    std::sort(p.monos.begin(), p.monos.end(),
              [&](const auto& x, const auto& y) {
                return atom_less(x.first, y.first, ctx_);
              });
    return p;
  }

private:
  const CanonContext& ctx_;
  std::unordered_map<uint32_t, std::pair<Term, Rational>> coeff_;
  Rational constant_;
};

Poly to_poly(Term t, const CanonContext& ctx);

void accumulate(Term t, const Rational& scale, PolyBuilder& b,
                const CanonContext& ctx) {
  switch (t.kind()) {
  case HeadKind::Numeral:
    b.add_const(t.num() * scale);
    return;
  case HeadKind::Constant:
  case HeadKind::Var:
    b.add_atom(t, scale);
    return;
  case HeadKind::App:
    break;
  }
  SymbolId s = t.sym();
  if (s == sym_add()) {
    accumulate(t.arg(0), scale, b, ctx);
    accumulate(t.arg(1), scale, b, ctx);
  } else if (s == sym_sub()) {
    accumulate(t.arg(0), scale, b, ctx);
    accumulate(t.arg(1), -scale, b, ctx);
  } else if (s == sym_neg()) {
    accumulate(t.arg(0), -scale, b, ctx);
  } else if (s == sym_mul()) {
    Poly l = to_poly(t.arg(0), ctx);
    Poly r = to_poly(t.arg(1), ctx);
    if (l.numeric())
      b.add_poly(r, l.constant * scale);
    else if (r.numeric())
      b.add_poly(l, r.constant * scale);
    else
      throw TheoryError("nonlinear product: " + to_sexpr(t));
  } else {
    throw TheoryError("non-arithmetic symbol in pure term: " + to_sexpr(t));
  }
}

Poly to_poly(Term t, const CanonContext& ctx) {
  PolyBuilder b(ctx);
  accumulate(t, Rational(1), b, ctx);
  return b.finish();
}

// Constant first, monomials ascending by atom, unit coefficients omitted,
// single-part polynomials rendered bare.
Term render(const Poly& p) {
  std::vector<Term> parts;
  if (!p.constant.is_zero() || p.monos.empty())
    parts.push_back(mk_numeral(p.constant));
  for (const auto& [atom, c] : p.monos) {
    if (c.is_one())
      parts.push_back(atom);
    else
      parts.push_back(mk_app(sym_mul(), {atom, mk_numeral(c)}));
  }
  Term acc = parts.back();
  for (size_t i = parts.size() - 1; i-- > 0;)
    acc = mk_app(sym_add(), {parts[i], acc});
  return acc;
}

class LaTheory final : public ShostakTheory {
public:
  std::string_view name() const override { return "lia"; }

  Term canonize(Term pure, const CanonContext& ctx) const override {
    return render(to_poly(pure, ctx));
  }

  SolveResult solve(Term s, Term t, const CanonContext& ctx) const override {
    PolyBuilder b(ctx);
    b.add_poly(to_poly(s, ctx), Rational(1));
    b.add_poly(to_poly(t, ctx), Rational(-1));
    Poly diff = b.finish();
    if (diff.numeric())
      return diff.constant.is_zero() ? SolveResult{} : SolveResult::bot();
    // pivot on the maximal atom; ascending sort puts it last
    auto [pivot, c] = diff.monos.back();
    PolyBuilder rhs(ctx);
    Rational scale = Rational(-1) / c;
    for (size_t i = 0; i + 1 < diff.monos.size(); ++i)
      rhs.add_atom(diff.monos[i].first, diff.monos[i].second * scale);
    rhs.add_const(diff.constant * scale);
    SolveResult r;
    r.pairs.emplace_back(pivot, render(rhs.finish()));
    return r;
  }
};

} // namespace

const ShostakTheory& empty_theory() {
  static EmptyTheory t;
  return t;
}

const ShostakTheory& la_theory() {
  static LaTheory t;
  return t;
}

const ShostakTheory& theory_by_name(std::string_view name) {
  if (name == "empty")
    return empty_theory();
  if (name == "lia")
    return la_theory();
  throw std::invalid_argument("unknown theory: " + std::string(name));
}

} // namespace acx
