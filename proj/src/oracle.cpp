//===--- oracle.cpp - Bounded-saturation oracle --------------------------------//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//

#include "acx/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace acx {

namespace {

// Linear form over equivalence-class atoms.
struct LinForm {
  std::map<int, Rational> coeff;
  Rational constant;
  bool ok = true; // false: not linearizable

  void add(int cls, const Rational& c) {
    auto [it, ins] = coeff.try_emplace(cls, c);
    if (!ins) {
      it->second += c;
      if (it->second.is_zero())
        coeff.erase(it);
    }
  }
};

class Saturator {
public:
  Saturator(const std::vector<Equation>& hyps, const Equation& goal,
            const OracleOptions& opts)
      : opts_(opts) {
    for (const Equation& e : hyps) {
      int a = add_term(e.lhs);
      int b = add_term(e.rhs);
      hyp_pairs_.emplace_back(a, b);
    }
    goal_l_ = add_term(goal.lhs);
    goal_r_ = add_term(goal.rhs);
    for (const auto& [t, idx] : by_term_)
      (void)t, (void)idx;
    width_cap_ = base_width_ + 2;
  }

  OracleVerdict run() {
    for (auto [a, b] : hyp_pairs_)
      merge(a, b);
    for (int round = 0; round < opts_.rounds; ++round) {
      changed_ = false;
      congruence_pass();
      if (inconsistent_)
        return OracleVerdict::Derivable;
      ac_enrich_pass();
      congruence_pass();
      if (opts_.lia)
        la_pass();
      if (inconsistent_)
        return OracleVerdict::Derivable;
      if (find(goal_l_) == find(goal_r_))
        return OracleVerdict::Derivable;
      if (!changed_)
        break;
    }
    return find(goal_l_) == find(goal_r_) ? OracleVerdict::Derivable
                                          : OracleVerdict::NotWithinBound;
  }

private:
  struct Entry {
    Term term;              // real entries
    SymbolId sym = 0;       // synthetic AC entries
    std::vector<int> elems; // synthetic: class multiset (unnormalized)
  };

  bool is_la_app(Term t) const {
    if (!opts_.lia || !t.is_app())
      return false;
    SymbolId s = t.sym();
    return s == sym_add() || s == sym_sub() || s == sym_neg() ||
           (s == sym_mul() && linear_mul(t));
  }

  bool linear_mul(Term t) const {
    // one factor must evaluate numerically for * to be linear; checked
    // shallowly, which is all the generators produce
    return t.arg(0).is_numeral() || t.arg(1).is_numeral();
  }

  int add_term(Term t) {
    auto it = by_term_.find(t.id());
    if (it != by_term_.end())
      return it->second;
    // children first so the universe stays subterm-closed
    if (t.is_app())
      for (const Term& a : t.args())
        add_term(a);
    int idx = (int)entries_.size();
    entries_.push_back(Entry{t, 0, {}});
    parent_.push_back(idx);
    by_term_.emplace(t.id(), idx);
    if (t.is_app() && t.sym_kind() == SymbolKind::AC) {
      size_t w = flat_aliens(t, t.sym()).size();
      base_width_ = std::max(base_width_, w);
    }
    return idx;
  }

  std::vector<int> flat_aliens(Term t, SymbolId u) const {
    std::vector<int> out;
    collect_flat(t, u, out);
    return out;
  }
  void collect_flat(Term t, SymbolId u, std::vector<int>& out) const {
    if (t.headed_by(u)) {
      collect_flat(t.arg(0), u, out);
      collect_flat(t.arg(1), u, out);
    } else {
      out.push_back(by_term_.at(t.id()));
    }
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return;
    parent_[std::max(a, b)] = std::min(a, b);
    changed_ = true;
  }

  std::string key_of(int idx) {
    const Entry& e = entries_[idx];
    if (!e.term.valid()) { // synthetic AC node
      std::vector<int> cls;
      for (int x : e.elems)
        cls.push_back(find(x));
      std::sort(cls.begin(), cls.end());
      std::string k = "u" + std::to_string(e.sym) + ":";
      for (int c : cls)
        k += std::to_string(c) + ",";
      return k;
    }
    Term t = e.term;
    switch (t.kind()) {
    case HeadKind::Numeral:
      return "n" + t.num().str();
    case HeadKind::Constant:
    case HeadKind::Var:
      return "a" + std::to_string(t.id());
    case HeadKind::App:
      break;
    }
    if (t.sym_kind() == SymbolKind::AC) {
      std::vector<int> cls;
      for (int x : flat_aliens(t, t.sym()))
        cls.push_back(find(x));
      std::sort(cls.begin(), cls.end());
      std::string k = "u" + std::to_string(t.sym()) + ":";
      for (int c : cls)
        k += std::to_string(c) + ",";
      return k;
    }
    std::string k = "f" + std::to_string(t.sym()) + ":";
    for (const Term& a : t.args())
      k += std::to_string(find(by_term_.at(a.id()))) + ",";
    return k;
  }

  void congruence_pass() {
    bool local = true;
    while (local) {
      local = false;
      std::unordered_map<std::string, int> seen;
      for (int i = 0; i < (int)entries_.size(); ++i) {
        std::string k = key_of(i);
        auto [it, ins] = seen.try_emplace(k, i);
        if (!ins && find(it->second) != find(i)) {
          merge(it->second, i);
          local = true;
        }
      }
    }
  }

  // For every entry with an AC shape (u, M): contract any sub-multiset
  // that matches another class's AC shape down to that class, and expand
  // any element whose class has an AC shape. The synthesized variants
  // join the entry's own class.
  void ac_enrich_pass() {
    struct Shape {
      SymbolId sym;
      std::vector<int> cls; // sorted
      int owner;            // class it belongs to
    };
    std::vector<Shape> shapes;
    std::vector<std::pair<int, Shape>> items; // (entry class, shape)
    for (int i = 0; i < (int)entries_.size(); ++i) {
      const Entry& e = entries_[i];
      SymbolId sym = 0;
      std::vector<int> cls;
      if (!e.term.valid()) {
        sym = e.sym;
        for (int x : e.elems)
          cls.push_back(find(x));
      } else if (e.term.is_app() &&
                 e.term.sym_kind() == SymbolKind::AC) {
        sym = e.term.sym();
        for (int x : flat_aliens(e.term, sym))
          cls.push_back(find(x));
      } else {
        continue;
      }
      std::sort(cls.begin(), cls.end());
      Shape s{sym, cls, find(i)};
      shapes.push_back(s);
      items.emplace_back(find(i), s);
    }
    auto sub_multiset = [](const std::vector<int>& a,
                           const std::vector<int>& b) {
      // a ⊆ b, both sorted
      size_t i = 0;
      for (int x : b) {
        if (i < a.size() && a[i] == x)
          ++i;
      }
      return i == a.size();
    };
    for (const auto& [owner, shape] : items) {
      for (const Shape& other : shapes) {
        if (other.sym != shape.sym)
          continue;
        // contraction: other.cls ⊊ shape.cls
        if (other.cls.size() < shape.cls.size() &&
            sub_multiset(other.cls, shape.cls)) {
          std::vector<int> rest;
          size_t i = 0;
          for (int x : shape.cls) {
            if (i < other.cls.size() && other.cls[i] == x)
              ++i;
            else
              rest.push_back(x);
          }
          rest.push_back(other.owner);
          add_synthetic(shape.sym, rest, owner);
        }
        // expansion: replace one occurrence of other.owner by other.cls
        if (std::find(shape.cls.begin(), shape.cls.end(), other.owner) !=
                shape.cls.end() &&
            shape.cls.size() - 1 + other.cls.size() <= width_cap_) {
          std::vector<int> rest;
          bool dropped = false;
          for (int x : shape.cls) {
            if (!dropped && x == other.owner) {
              dropped = true;
              continue;
            }
            rest.push_back(x);
          }
          rest.insert(rest.end(), other.cls.begin(), other.cls.end());
          add_synthetic(shape.sym, rest, owner);
        }
      }
    }
  }

  void add_synthetic(SymbolId sym, std::vector<int> elems, int owner) {
    if (elems.size() < 2 || entries_.size() >= opts_.max_entries)
      return;
    std::vector<int> cls;
    for (int x : elems)
      cls.push_back(find(x));
    std::sort(cls.begin(), cls.end());
    std::string k = "u" + std::to_string(sym) + ":";
    for (int c : cls)
      k += std::to_string(c) + ",";
    auto it = synth_seen_.find(k);
    if (it != synth_seen_.end()) {
      merge(it->second, owner);
      return;
    }
    int idx = (int)entries_.size();
    entries_.push_back(Entry{Term(), sym, std::move(cls)});
    parent_.push_back(idx);
    synth_seen_.emplace(std::move(k), idx);
    merge(idx, owner);
    changed_ = true;
  }

  LinForm lin_of(int idx) {
    const Entry& e = entries_[idx];
    LinForm f;
    if (!e.term.valid()) {
      f.add(find(idx), Rational(1));
      return f;
    }
    lin_term(e.term, Rational(1), f);
    return f;
  }

  void lin_term(Term t, const Rational& scale, LinForm& f) {
    if (t.is_numeral()) {
      f.constant += t.num() * scale;
      return;
    }
    if (is_la_app(t)) {
      SymbolId s = t.sym();
      if (s == sym_add()) {
        lin_term(t.arg(0), scale, f);
        lin_term(t.arg(1), scale, f);
      } else if (s == sym_sub()) {
        lin_term(t.arg(0), scale, f);
        lin_term(t.arg(1), -scale, f);
      } else if (s == sym_neg()) {
        lin_term(t.arg(0), -scale, f);
      } else { // mul with a numeral factor
        if (t.arg(0).is_numeral())
          lin_term(t.arg(1), scale * t.arg(0).num(), f);
        else
          lin_term(t.arg(0), scale * t.arg(1).num(), f);
      }
      return;
    }
    f.add(find(by_term_.at(t.id())), scale);
  }

  // Gaussian elimination over the class atoms. Rows come from every
  // class whose members carry distinct linear forms; two classes merge
  // when the difference of their atom forms lies in the row space.
  void la_pass() {
    std::vector<LinForm> rows;
    std::unordered_map<int, LinForm> base;
    for (int i = 0; i < (int)entries_.size(); ++i) {
      LinForm f = lin_of(i);
      int c = find(i);
      // link the class atom to the arithmetic content of this member
      LinForm atom;
      atom.add(c, Rational(1));
      LinForm link = diff(f, atom);
      if (!link.coeff.empty() || !link.constant.is_zero())
        rows.push_back(std::move(link));
      auto [it, ins] = base.try_emplace(c, f);
      if (!ins) {
        LinForm d = diff(f, it->second);
        if (!d.coeff.empty() || !d.constant.is_zero())
          rows.push_back(std::move(d));
      }
    }
    reduce(rows);
    if (inconsistent_)
      return;
    // pairwise merge test on class representatives
    std::vector<int> classes;
    for (auto& [c, f] : base)
      classes.push_back(c);
    std::sort(classes.begin(), classes.end());
    for (size_t i = 0; i < classes.size(); ++i) {
      for (size_t j = i + 1; j < classes.size(); ++j) {
        if (find(classes[i]) == find(classes[j]))
          continue;
        LinForm d;
        d.add(classes[i], Rational(1));
        d.add(classes[j], Rational(-1));
        LinForm r = residue(d, rows);
        if (r.coeff.empty() && r.constant.is_zero())
          merge(classes[i], classes[j]);
      }
    }
  }

  static LinForm diff(const LinForm& a, const LinForm& b) {
    LinForm d = a;
    for (const auto& [c, q] : b.coeff)
      d.add(c, -q);
    d.constant = a.constant - b.constant;
    return d;
  }

  // in-place reduction to row echelon (by leading atom)
  void reduce(std::vector<LinForm>& rows) {
    std::vector<LinForm> basis;
    for (LinForm& r : rows) {
      LinForm res = residue(r, basis);
      if (res.coeff.empty()) {
        if (!res.constant.is_zero())
          inconsistent_ = true;
        continue;
      }
      basis.push_back(std::move(res));
    }
    rows = std::move(basis);
  }

  static LinForm residue(LinForm f, const std::vector<LinForm>& basis) {
    bool again = true;
    while (again) {
      again = false;
      for (const LinForm& b : basis) {
        if (b.coeff.empty())
          continue;
        int lead = b.coeff.begin()->first;
        auto it = f.coeff.find(lead);
        if (it == f.coeff.end())
          continue;
        Rational factor = it->second / b.coeff.begin()->second;
        for (const auto& [c, q] : b.coeff)
          f.add(c, -(q * factor));
        f.constant -= b.constant * factor;
        again = true;
      }
    }
    return f;
  }

  OracleOptions opts_;
  std::vector<Entry> entries_;
  std::vector<int> parent_;
  std::unordered_map<uint32_t, int> by_term_;
  std::unordered_map<std::string, int> synth_seen_;
  std::vector<std::pair<int, int>> hyp_pairs_;
  int goal_l_ = 0, goal_r_ = 0;
  size_t base_width_ = 2, width_cap_ = 4;
  bool changed_ = false;
  bool inconsistent_ = false;
};

} // namespace

OracleVerdict oracle_derivable(const std::vector<Equation>& hypotheses,
                               const Equation& goal,
                               const OracleOptions& opts) {
  return Saturator(hypotheses, goal, opts).run();
}

} // namespace acx
