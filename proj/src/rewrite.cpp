//===--- rewrite.cpp - Ground rewriting modulo AC ---------------------------//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//

#include "acx/rewrite.hpp"

#include "acx/ordering.hpp"
#include "acx/shostak.hpp"

#include <cassert>

namespace acx {

MatchOutcome ac_match_at(Term s, std::span<const uint32_t> p, Term l) {
  Term sub = subterm_at(s, p);
  if (sub == l)
    return MatchOutcome{MatchKind::Plain, {}};
  if (!l.ac_headed() || !sub.headed_by(l.sym()))
    return MatchOutcome{};
  TermMultiset la = aliens(l, l.sym());
  TermMultiset sa = aliens(sub, l.sym());
  if (!la.strict_subset_of(sa))
    return MatchOutcome{};
  return MatchOutcome{MatchKind::Extended, sa.subtract(la)};
}

std::optional<Term> rewrite_ac(Term s, const Rule& rule,
                               std::span<const uint32_t> p) {
  MatchOutcome m = ac_match_at(s, p, rule.lhs);
  switch (m.kind) {
  case MatchKind::None:
    return std::nullopt;
  case MatchKind::Plain:
    return replace_at(s, p, rule.rhs);
  case MatchKind::Extended: {
    SymbolId u = rule.lhs.sym();
    TermMultiset elems = aliens(rule.rhs, u).set_union(m.remainder);
    return replace_at(s, p, mk_ac_comb(u, elems));
  }
  }
  return std::nullopt;
}

namespace {

struct Candidate {
  size_t rule_index;
  Position pos;
};

// Left-hand-side index: plain matches resolve by interned id, extension
// candidates by AC head symbol with a width prefilter.
struct RuleIndex {
  std::unordered_map<uint32_t, size_t> by_lhs;
  struct AcEntry {
    size_t rule_index;
    TermMultiset lhs_aliens;
  };
  std::unordered_map<SymbolId, std::vector<AcEntry>> ac;

  RuleIndex(std::span<const Rule> rules, const std::vector<char>* alive) {
    for (size_t r = 0; r < rules.size(); ++r) {
      if (alive && !(*alive)[r])
        continue;
      by_lhs.try_emplace(rules[r].lhs.id(), r);
      if (rules[r].lhs.ac_headed())
        ac[rules[r].lhs.sym()].push_back(
            {r, aliens(rules[r].lhs, rules[r].lhs.sym())});
    }
  }
};

// Innermost-leftmost scan; with `all` set, collects every applicable
// (position, rule) pair instead of stopping at the first.
bool scan(Term t, Position& pos, const RuleIndex& idx,
          std::vector<Candidate>& out, bool all) {
  if (t.is_app()) {
    for (uint32_t i = 0; i < t.nargs(); ++i) {
      pos.push_back(i);
      bool found = scan(t.arg(i), pos, idx, out, all);
      pos.pop_back();
      if (found && !all)
        return true;
    }
  }
  // rules tried in insertion order: gather matches here, keep the earliest
  std::vector<size_t> here;
  auto hit = idx.by_lhs.find(t.id());
  if (hit != idx.by_lhs.end())
    here.push_back(hit->second);
  if (t.ac_headed()) {
    auto ac_it = idx.ac.find(t.sym());
    if (ac_it != idx.ac.end()) {
      TermMultiset mine = aliens(t, t.sym());
      for (const auto& e : ac_it->second)
        if (e.lhs_aliens.total() < mine.total() &&
            e.lhs_aliens.subset_of(mine))
          here.push_back(e.rule_index);
    }
  }
  if (!here.empty()) {
    if (all) {
      for (size_t r : here)
        out.push_back(Candidate{r, pos});
    } else {
      out.push_back(Candidate{*std::min_element(here.begin(), here.end()),
                              pos});
      return true;
    }
  }
  return all ? !out.empty() : false;
}

} // namespace

std::optional<RewriteStep>
can_rewrite_step(Term s, std::span<const Rule> rules, CanonContext& ctx,
                 const ShostakTheory& X, const std::vector<char>* alive,
                 std::mt19937_64* rng) {
  RuleIndex idx(rules, alive);
  std::vector<Candidate> cands;
  Position pos;
  if (!scan(s, pos, idx, cands, rng != nullptr))
    return std::nullopt;
  const Candidate& c =
      rng ? cands[(*rng)() % cands.size()] : cands.front();
  std::optional<Term> plain = rewrite_ac(s, rules[c.rule_index], c.pos);
  assert(plain);
  Term t = global_can(*plain, ctx, X);
#ifdef ACX_CHECK_INVARIANTS
  // Canonized rewriting must descend; the partial ordering can only
  // witness this inside the abstracted fragment.
  assert(t != s && "rewrite step did not change the term");
  if (classify(s) != TermClass::Other && classify(t) != TermClass::Other) {
    OrderResult o = compare(t, s);
    assert(o != OrderResult::Greater && o != OrderResult::Equivalent &&
           "rewrite step did not decrease the ordering");
  }
#endif
  return RewriteStep{t, c.rule_index, c.pos};
}

Term normal_form(Term s, std::span<const Rule> rules, CanonContext& ctx,
                 const ShostakTheory& X, RewriteBudget* budget,
                 const std::vector<char>* alive, std::mt19937_64* rng) {
  RewriteBudget local;
  RewriteBudget* b = budget ? budget : &local;
  Term cur = s;
  while (true) {
    auto step = can_rewrite_step(cur, rules, ctx, X, alive, rng);
    if (!step)
      return cur;
    if (--b->remaining < 0)
      throw BudgetError("rewrite step budget exceeded (non-terminating "
                        "rule set?)");
    cur = step->result;
  }
}

} // namespace acx
