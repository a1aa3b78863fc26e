//===--- term.hpp - Hash-consed ground terms --------------------*- C++ -*-===//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//
//
// The term algebra everything else works on. Terms are immutable and
// interned in a process-wide table, so structural equality is pointer
// equality and multiset operations can key on term ids.
//
// Heads come in four flavors:
//   - numerals (exact rationals, only meaningful with the LA theory),
//   - constants (user-declared constants and the fresh constants the
//     abstraction pass introduces; both live in the ordering's K),
//   - abstraction variables (internal, never in user input),
//   - applications of declared symbols (AC / uninterpreted / theory ops).
//
//===----------------------------------------------------------------------===//

#ifndef ACX_TERM_HPP
#define ACX_TERM_HPP

#include "acx/rational.hpp"

#include <cassert>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace acx {

using SymbolId = uint32_t;

enum class SymbolKind : uint8_t { AC, Uninterpreted, TheoryX };

struct SymbolInfo {
  std::string name;
  SymbolKind kind;
  uint32_t arity;
  // rank among theory symbols, drives the LPO precedence: * < + < neg < -
  int x_rank = -1;
};

/// Registers a symbol; (name, kind, arity) triples are interned so repeated
/// registration returns the same id.
SymbolId register_symbol(const std::string& name, SymbolKind kind,
                         uint32_t arity);
const SymbolInfo& symbol_info(SymbolId id);

// Built-in linear-arithmetic operators.
SymbolId sym_add();
SymbolId sym_sub();
SymbolId sym_neg();
SymbolId sym_mul();

enum class HeadKind : uint8_t { Numeral, Constant, Var, App };

class Term;

struct TermNode {
  HeadKind kind;
  SymbolId sym = 0;       // App
  uint32_t index = 0;     // Constant / Var creation index
  Rational num;           // Numeral
  std::string name;       // Constant display name
  std::vector<Term> args; // App
  uint32_t id = 0;
  uint32_t size = 1; // node count, handy for generators and diagnostics
};

/// Immutable interned term handle. Copy freely; equality is identity.
class Term {
public:
  Term() : node_(nullptr) {}
  explicit Term(const TermNode* n) : node_(n) {}

  bool valid() const { return node_ != nullptr; }
  uint32_t id() const { return node_->id; }
  HeadKind kind() const { return node_->kind; }
  SymbolId sym() const { return node_->sym; }
  uint32_t index() const { return node_->index; }
  const Rational& num() const { return node_->num; }
  const std::string& const_name() const { return node_->name; }
  uint32_t size() const { return node_->size; }

  size_t nargs() const { return node_->args.size(); }
  Term arg(size_t i) const { return node_->args[i]; }
  const std::vector<Term>& args() const { return node_->args; }

  bool is_app() const { return node_->kind == HeadKind::App; }
  bool is_numeral() const { return node_->kind == HeadKind::Numeral; }
  bool is_constant() const { return node_->kind == HeadKind::Constant; }
  bool is_var() const { return node_->kind == HeadKind::Var; }
  bool headed_by(SymbolId s) const { return is_app() && node_->sym == s; }
  SymbolKind sym_kind() const { return symbol_info(node_->sym).kind; }
  bool ac_headed() const {
    return is_app() && symbol_info(node_->sym).kind == SymbolKind::AC;
  }

  bool operator==(const Term& o) const { return node_ == o.node_; }
  bool operator!=(const Term& o) const { return node_ != o.node_; }
  bool operator<(const Term& o) const { return id() < o.id(); } // id order

private:
  const TermNode* node_;
};

// Construction. All constructors intern.
Term mk_app(SymbolId sym, std::vector<Term> args);
Term mk_numeral(const Rational& q);
/// Fresh constant; the creation index both identifies it and fixes its
/// position in the K-precedence.
Term mk_fresh_constant(const std::string& name);
/// Fresh abstraction variable.
Term mk_fresh_var();

// Total structural order, interning-independent: head class
// (numeral < constant < var < theory op < uninterpreted < AC, then symbol
// index), then arity, then children lexicographically. This is the sort
// order inside AC canonical forms.
bool structural_less(Term a, Term b);

/// An unordered pair of terms.
struct Equation {
  Term lhs, rhs;
};

//===----------------------------------------------------------------------===//
// Positions
//===----------------------------------------------------------------------===//

using Position = std::vector<uint32_t>;

/// Subterm at p; throws std::out_of_range if p is not a valid position.
Term subterm_at(Term t, std::span<const uint32_t> p);
/// Replace the subterm at p; result differs from t only below p.
Term replace_at(Term t, std::span<const uint32_t> p, Term r);

//===----------------------------------------------------------------------===//
// Alien multisets
//===----------------------------------------------------------------------===//

/// Multiset of terms, stored as (term, multiplicity) sorted by term id so
/// intersection/difference are linear merges.
class TermMultiset {
public:
  TermMultiset() = default;

  void add(Term t, uint32_t count = 1);
  uint32_t count(Term t) const;
  size_t total() const { return total_; }
  bool empty() const { return items_.empty(); }

  TermMultiset set_union(const TermMultiset& o) const;
  TermMultiset intersect(const TermMultiset& o) const;
  TermMultiset subtract(const TermMultiset& o) const;
  bool subset_of(const TermMultiset& o) const;
  bool strict_subset_of(const TermMultiset& o) const {
    return total_ < o.total_ && subset_of(o);
  }

  bool operator==(const TermMultiset& o) const { return items_ == o.items_; }

  const std::vector<std::pair<Term, uint32_t>>& items() const {
    return items_;
  }
  /// All elements with multiplicity, expanded.
  std::vector<Term> expanded() const;

private:
  std::vector<std::pair<Term, uint32_t>> items_; // sorted by term id
  size_t total_ = 0;
};

/// Multiset of maximal subterms of t not headed by the AC symbol u;
/// {t} itself when t is not headed by u. Throws if u is not AC.
TermMultiset aliens(Term t, SymbolId u);

//===----------------------------------------------------------------------===//
// Substitutions
//===----------------------------------------------------------------------===//

/// Homomorphic replacement of abstraction variables (keyed by var index).
class Substitution {
public:
  void bind(Term var, Term value);
  Term apply(Term t) const;

private:
  std::vector<std::pair<uint32_t, Term>> map_;
};

//===----------------------------------------------------------------------===//
// Term classification (the abstracted fragment of the ordering)
//===----------------------------------------------------------------------===//

enum class TermClass : uint8_t {
  PureXK, // T(Sigma_X ∪ K): numerals, constants, theory ops over pure args
  TEmpty, // uninterpreted application with pure arguments
  TAC,    // AC application whose aliens are all pure
  Other,
};

TermClass classify(Term t);
inline bool is_pure(Term t) { return classify(t) == TermClass::PureXK; }

/// S-expression rendering (also used by the problem printer).
std::string to_sexpr(Term t);

} // namespace acx

#endif // ACX_TERM_HPP
