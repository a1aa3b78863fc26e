//===--- completion.cpp - The AC(X) inference engine -------------------------//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//

#include "acx/completion.hpp"

#include "acx/ordering.hpp"
#include "acx/shostak.hpp"

#include <algorithm>
#include <stdexcept>

namespace acx {

namespace {

// Internal invariant violations surface as exceptions in every build;
// completion bugs otherwise show up as bogus verdicts.
void check(bool cond, const char* what) {
  if (!cond)
    throw std::logic_error(std::string("completion invariant violated: ") +
                           what);
}

struct EngineState {
  std::vector<Rule> rules;
  std::vector<char> alive;
  std::deque<PendingEquation> queue;
  std::vector<TraceEntry> trace;
  bool inconsistent = false;
  long inferences = 0;
  const CompletionOptions* opts = nullptr;
  RewriteBudget rw;

  std::span<const Rule> all() const { return {rules.data(), rules.size()}; }

  int add_entry(TraceEntry e) {
    if (++inferences > opts->max_inferences)
      throw BudgetError("inference budget exceeded");
    e.step = static_cast<int>(trace.size()) + 1;
    trace.push_back(std::move(e));
    return trace.back().step;
  }
};

Term simplify_fix(Term t, EngineState& st, CanonContext& ctx,
                  const ShostakTheory& X, std::vector<int>& used) {
  Term cur = t;
  while (auto step = can_rewrite_step(cur, st.all(), ctx, X, &st.alive)) {
    if (--st.rw.remaining < 0)
      throw BudgetError("rewrite budget exceeded");
    cur = step->result;
    int rs = st.rules[step->rule_index].step;
    if (std::find(used.begin(), used.end(), rs) == used.end())
      used.push_back(rs);
  }
  return cur;
}

void add_rule(EngineState& st, Term l, Term r, int birth, bool defining,
              Term eq_s, Term eq_t, CanonContext& ctx,
              const ShostakTheory& X) {
  check(compare(r, l) == OrderResult::Less,
        "oriented rule is not ordering-decreasing");
  for (size_t i = 0; i < st.rules.size(); ++i)
    if (st.alive[i])
      check(st.rules[i].lhs != l, "duplicate rule left-hand side");

  TraceEntry oe;
  oe.kind = InferenceKind::Orient;
  oe.is_rule = true;
  oe.lhs = l;
  oe.rhs = r;
  if (birth > 0)
    oe.refs = {birth};
  oe.src_lhs = eq_s;
  oe.src_rhs = eq_t;
  int step = st.add_entry(std::move(oe));

  st.rules.push_back(Rule{l, r, step, defining});
  st.alive.push_back(1);
  size_t nr = st.rules.size() - 1;

  // Compose: renormalize the right sides the new rule touches. Right
  // sides are kept in normal form, so any reduction goes through nr.
  for (size_t i = 0; i < st.rules.size(); ++i) {
    if (!st.alive[i] || i == nr)
      continue;
    std::vector<int> used;
    Term rhs2 = simplify_fix(st.rules[i].rhs, st, ctx, X, used);
    if (rhs2 == st.rules[i].rhs)
      continue;
    TraceEntry ce;
    ce.kind = InferenceKind::Compose;
    ce.is_rule = true;
    ce.lhs = st.rules[i].lhs;
    ce.rhs = rhs2;
    ce.refs.push_back(st.rules[i].step);
    for (int u : used)
      ce.refs.push_back(u);
    st.rules[i].rhs = rhs2;
    st.rules[i].step = st.add_entry(std::move(ce));
  }

  // Collapse: retire rules whose left side the new rule reduces, provided
  // the guard g ≺ l ∨ (g = l ∧ d ≺ r) holds; the reduced pair re-enters
  // the worklist as an equation.
  std::span<const Rule> just_nr{&st.rules[nr], 1};
  for (size_t i = 0; i < st.rules.size(); ++i) {
    if (!st.alive[i] || i == nr)
      continue;
    auto stp = can_rewrite_step(st.rules[i].lhs, just_nr, ctx, X);
    if (!stp)
      continue;
    bool fire;
    if (st.rules[nr].lhs == st.rules[i].lhs)
      fire = compare(st.rules[nr].rhs, st.rules[i].rhs) == OrderResult::Less;
    else
      fire = compare(st.rules[nr].lhs, st.rules[i].lhs) == OrderResult::Less;
    if (!fire)
      continue;
    if (--st.rw.remaining < 0)
      throw BudgetError("rewrite budget exceeded");
    TraceEntry ce;
    ce.kind = InferenceKind::Collapse;
    ce.lhs = stp->result;
    ce.rhs = st.rules[i].rhs;
    ce.refs = {st.rules[i].step, st.rules[nr].step};
    int cs = st.add_entry(std::move(ce));
    st.alive[i] = 0;
    st.queue.push_back(
        PendingEquation{st.trace[cs - 1].lhs, st.trace[cs - 1].rhs, cs});
  }

  // Deduce: head critical pairs of the new rule against the survivors.
  for (size_t i = 0; i < st.rules.size(); ++i) {
    if (!st.alive[i] || i == nr)
      continue;
    auto cp = head_cp(st.rules[nr], st.rules[i], ctx, X);
    if (!cp)
      continue;
    TraceEntry de;
    de.kind = InferenceKind::Deduce;
    de.lhs = cp->lhs;
    de.rhs = cp->rhs;
    de.refs = {std::min(st.rules[i].step, st.rules[nr].step),
               std::max(st.rules[i].step, st.rules[nr].step)};
    int ds = st.add_entry(std::move(de));
    st.queue.push_back(PendingEquation{cp->lhs, cp->rhs, ds});
  }
}

void process_equation(EngineState& st, const PendingEquation& e,
                      CanonContext& ctx, const ShostakTheory& X) {
  std::vector<int> used;
  Term s = simplify_fix(e.lhs, st, ctx, X, used);
  Term t = simplify_fix(e.rhs, st, ctx, X, used);
  int birth = e.birth;
  if (!used.empty()) {
    TraceEntry se;
    se.kind = InferenceKind::Simplify;
    se.lhs = s;
    se.rhs = t;
    se.refs.push_back(birth);
    for (int u : used)
      se.refs.push_back(u);
    se.src_lhs = e.lhs;
    se.src_rhs = e.rhs;
    birth = st.add_entry(std::move(se));
  }
  if (s == t) {
    TraceEntry te;
    te.kind = InferenceKind::Trivial;
    te.lhs = s;
    te.rhs = t;
    te.refs = {birth};
    st.add_entry(std::move(te));
    return;
  }
  auto solved = wrapped_solve(s, t, ctx, X);
  if (!solved) {
    TraceEntry be;
    be.kind = InferenceKind::Bottom;
    be.lhs = s;
    be.rhs = t;
    be.refs = {birth};
    st.add_entry(std::move(be));
    st.inconsistent = true;
    return;
  }
  if (solved->empty()) {
    // distinct canonical sides with an empty solution cannot happen for a
    // complete canonizer; treat defensively as trivial
    TraceEntry te;
    te.kind = InferenceKind::Trivial;
    te.lhs = s;
    te.rhs = t;
    te.refs = {birth};
    st.add_entry(std::move(te));
    return;
  }
  for (const Equation& rule : *solved)
    add_rule(st, rule.lhs, rule.rhs, birth, e.defining, s, t, ctx, X);
}

} // namespace

std::optional<Equation> head_cp(const Rule& a, const Rule& b,
                                CanonContext& ctx, const ShostakTheory& X) {
  if (&a == &b)
    return std::nullopt;
  if (!a.lhs.ac_headed() || !b.lhs.ac_headed() ||
      a.lhs.sym() != b.lhs.sym())
    return std::nullopt;
  SymbolId u = a.lhs.sym();
  TermMultiset aa = aliens(a.lhs, u);
  TermMultiset ab = aliens(b.lhs, u);
  TermMultiset common = aa.intersect(ab);
  if (common.empty())
    return std::nullopt;
  TermMultiset ra = aa.subtract(common);
  TermMultiset rb = ab.subtract(common);
  if (ra.empty() || rb.empty())
    return std::nullopt;
  Term cl = global_can(mk_ac_comb(u, ra.set_union(aliens(b.rhs, u))), ctx, X);
  Term cr = global_can(mk_ac_comb(u, rb.set_union(aliens(a.rhs, u))), ctx, X);
  return Equation{cl, cr};
}

FinalSystem complete(std::deque<PendingEquation> E0, CanonContext& ctx,
                     const ShostakTheory& X, const CompletionOptions& opts) {
  EngineState st;
  st.opts = &opts;
  st.queue = std::move(E0);
  st.rw.remaining = opts.rewrite_budget;
  while (!st.queue.empty() && !st.inconsistent) {
    PendingEquation e = st.queue.front();
    st.queue.pop_front();
    process_equation(st, e, ctx, X);
  }
  FinalSystem out;
  out.inconsistent = st.inconsistent;
  out.inferences = st.inferences;
  out.trace = std::move(st.trace);
  if (!st.inconsistent) {
    for (size_t i = 0; i < st.rules.size(); ++i)
      if (st.alive[i])
        out.rules.push_back(st.rules[i]);
    check(is_inter_reduced(out.rules, ctx, X),
          "final system is not inter-reduced");
  }
  return out;
}

std::vector<Rule> core_rules(const FinalSystem& sys,
                             const CanonContext& ctx) {
  std::vector<Rule> out;
  for (const Rule& r : sys.rules)
    if (!r.defining && !ctx.is_generated_k(r.lhs))
      out.push_back(r);
  return out;
}

bool is_inter_reduced(const std::vector<Rule>& rules, CanonContext& ctx,
                      const ShostakTheory& X) {
  for (size_t i = 0; i < rules.size(); ++i) {
    std::vector<Rule> others;
    for (size_t j = 0; j < rules.size(); ++j)
      if (j != i)
        others.push_back(rules[j]);
    if (can_rewrite_step(rules[i].lhs, others, ctx, X))
      return false;
    if (can_rewrite_step(rules[i].rhs, rules, ctx, X))
      return false;
  }
  return true;
}

DecideOutcome decide(const std::vector<Equation>& hypotheses,
                     const std::vector<Equation>& goals, CanonContext& ctx,
                     const ShostakTheory& X, const CompletionOptions& opts) {
  DecideOutcome out;
  std::vector<Equation> canon;
  canon.reserve(hypotheses.size());
  for (const Equation& e : hypotheses)
    canon.push_back(
        Equation{global_can(e.lhs, ctx, X), global_can(e.rhs, ctx, X)});
  out.abstraction = abstract_equations(canon, ctx, X);
  std::deque<PendingEquation> E0;
  for (const AbstractedEquation& ae : out.abstraction.output)
    E0.push_back(PendingEquation{ae.eq.lhs, ae.eq.rhs, 0, ae.defining});
  out.system = complete(std::move(E0), ctx, X, opts);
  if (out.system.inconsistent) {
    out.verdict = Verdict::ValidInconsistent;
    return out;
  }
  RewriteBudget budget{opts.rewrite_budget};
  bool all_valid = true;
  for (const Equation& g : goals) {
    Term nl = normal_form(global_can(g.lhs, ctx, X), out.system.rules, ctx,
                          X, &budget);
    Term nr = normal_form(global_can(g.rhs, ctx, X), out.system.rules, ctx,
                          X, &budget);
    if (nl != nr) {
      all_valid = false;
      break;
    }
  }
  out.verdict = all_valid ? Verdict::Valid : Verdict::Invalid;
  return out;
}

//===----------------------------------------------------------------------===//
// Trace rendering
//===----------------------------------------------------------------------===//

const char* inference_name(InferenceKind k) {
  switch (k) {
  case InferenceKind::Orient:
    return "Ori";
  case InferenceKind::Simplify:
    return "Sim";
  case InferenceKind::Compose:
    return "Com";
  case InferenceKind::Collapse:
    return "Col";
  case InferenceKind::Deduce:
    return "Ded";
  case InferenceKind::Trivial:
    return "Tri";
  case InferenceKind::Bottom:
    return "Bot";
  }
  return "?";
}

std::string render_trace_entry(const TraceEntry& e) {
  auto eq_text = [](Term l, Term r) {
    return to_sexpr(l) + " ~ " + to_sexpr(r);
  };
  std::string item = e.is_rule ? to_sexpr(e.lhs) + " -> " + to_sexpr(e.rhs)
                               : eq_text(e.lhs, e.rhs);
  std::string why = inference_name(e.kind);
  switch (e.kind) {
  case InferenceKind::Orient:
    if (!e.refs.empty() && e.refs[0] > 0)
      why += " " + std::to_string(e.refs[0]);
    else
      why += " " + eq_text(e.src_lhs, e.src_rhs);
    break;
  case InferenceKind::Simplify: {
    why += e.refs[0] > 0 ? " " + std::to_string(e.refs[0])
                         : " " + eq_text(e.src_lhs, e.src_rhs);
    why += " by";
    for (size_t i = 1; i < e.refs.size(); ++i)
      why += (i == 1 ? " " : " and ") + std::to_string(e.refs[i]);
    break;
  }
  case InferenceKind::Compose:
  case InferenceKind::Collapse: {
    why += " " + std::to_string(e.refs[0]);
    for (size_t i = 1; i < e.refs.size(); ++i)
      why += " and " + std::to_string(e.refs[i]);
    break;
  }
  case InferenceKind::Deduce:
    why += " from " + std::to_string(e.refs[0]) + " and " +
           std::to_string(e.refs[1]);
    break;
  case InferenceKind::Trivial:
    if (!e.refs.empty() && e.refs[0] > 0)
      why += " " + std::to_string(e.refs[0]);
    break;
  case InferenceKind::Bottom:
    why += " " + eq_text(e.lhs, e.rhs);
    break;
  }
  return "| " + std::to_string(e.step) + " | " + item + " | " + why + " |";
}

} // namespace acx
