//===--- term.cpp - Hash-consed ground terms ------------------------------===//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//

#include "acx/term.hpp"

#include <atomic>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace acx {

//===----------------------------------------------------------------------===//
// Symbol table
//===----------------------------------------------------------------------===//

namespace {

struct SymbolTable {
  std::vector<SymbolInfo> infos;
  std::unordered_map<std::string, SymbolId> by_key;
  std::shared_mutex mu;

  static SymbolTable& instance() {
    static SymbolTable t;
    return t;
  }
};

std::string symbol_key(const std::string& name, SymbolKind kind,
                       uint32_t arity) {
  return name + "/" + std::to_string(arity) + "/" +
         std::to_string(static_cast<int>(kind));
}

} // namespace

SymbolId register_symbol(const std::string& name, SymbolKind kind,
                         uint32_t arity) {
  if (kind == SymbolKind::AC && arity != 2)
    throw std::invalid_argument("AC symbol must have arity 2: " + name);
  auto& tab = SymbolTable::instance();
  std::string key = symbol_key(name, kind, arity);
  {
    std::shared_lock lock(tab.mu);
    auto it = tab.by_key.find(key);
    if (it != tab.by_key.end())
      return it->second;
  }
  std::unique_lock lock(tab.mu);
  auto it = tab.by_key.find(key);
  if (it != tab.by_key.end())
    return it->second;
  SymbolId id = static_cast<SymbolId>(tab.infos.size());
  tab.infos.push_back(SymbolInfo{name, kind, arity, -1});
  tab.by_key.emplace(std::move(key), id);
  return id;
}

const SymbolInfo& symbol_info(SymbolId id) {
  auto& tab = SymbolTable::instance();
  std::shared_lock lock(tab.mu);
  return tab.infos[id];
}

namespace {
SymbolId register_x_symbol(const char* name, uint32_t arity, int rank) {
  SymbolId id = register_symbol(name, SymbolKind::TheoryX, arity);
  auto& tab = SymbolTable::instance();
  std::unique_lock lock(tab.mu);
  tab.infos[id].x_rank = rank;
  return id;
}
} // namespace

SymbolId sym_mul() {
  static SymbolId id = register_x_symbol("*", 2, 0);
  return id;
}
SymbolId sym_add() {
  static SymbolId id = register_x_symbol("+", 2, 1);
  return id;
}
SymbolId sym_neg() {
  static SymbolId id = register_x_symbol("neg", 1, 2);
  return id;
}
SymbolId sym_sub() {
  static SymbolId id = register_x_symbol("-", 2, 3);
  return id;
}

//===----------------------------------------------------------------------===//
// Term table
//===----------------------------------------------------------------------===//

namespace {

struct NodeKey {
  HeadKind kind;
  SymbolId sym;
  uint32_t index;
  Rational num;
  std::vector<uint32_t> arg_ids;

  bool operator==(const NodeKey& o) const {
    return kind == o.kind && sym == o.sym && index == o.index &&
           num == o.num && arg_ids == o.arg_ids;
  }
};

struct NodeKeyHash {
  size_t operator()(const NodeKey& k) const {
    size_t h = static_cast<size_t>(k.kind);
    h = h * 31 + k.sym;
    h = h * 31 + k.index;
    h = h * 31 + k.num.hash();
    for (uint32_t a : k.arg_ids)
      h = h * 1000003u + a;
    return h;
  }
};

// Interning table: concurrent reads, serialized inserts. Nodes are never
// freed; terms stay valid for the process lifetime.
struct TermTable {
  std::vector<std::unique_ptr<TermNode>> nodes;
  std::unordered_map<NodeKey, uint32_t, NodeKeyHash> index;
  std::shared_mutex mu;
  std::atomic<uint32_t> next_const{0};
  std::atomic<uint32_t> next_var{0};

  static TermTable& instance() {
    static TermTable t;
    return t;
  }

  Term intern(NodeKey key, std::string name) {
    {
      std::shared_lock lock(mu);
      auto it = index.find(key);
      if (it != index.end())
        return Term(nodes[it->second].get());
    }
    std::unique_lock lock(mu);
    auto it = index.find(key);
    if (it != index.end())
      return Term(nodes[it->second].get());
    auto node = std::make_unique<TermNode>();
    node->kind = key.kind;
    node->sym = key.sym;
    node->index = key.index;
    node->num = key.num;
    node->name = std::move(name);
    node->id = static_cast<uint32_t>(nodes.size());
    nodes.push_back(std::move(node));
    index.emplace(std::move(key), nodes.back()->id);
    return Term(nodes.back().get());
  }
};

} // namespace

Term mk_app(SymbolId sym, std::vector<Term> args) {
  const SymbolInfo& info = symbol_info(sym);
  if (args.size() != info.arity)
    throw std::invalid_argument("arity mismatch for symbol " + info.name);
  NodeKey key;
  key.kind = HeadKind::App;
  key.sym = sym;
  key.index = 0;
  key.arg_ids.reserve(args.size());
  for (const Term& a : args) {
    assert(a.valid());
    key.arg_ids.push_back(a.id());
  }
  auto& tab = TermTable::instance();
  {
    std::shared_lock lock(tab.mu);
    auto it = tab.index.find(key);
    if (it != tab.index.end())
      return Term(tab.nodes[it->second].get());
  }
  std::unique_lock lock(tab.mu);
  auto it = tab.index.find(key);
  if (it != tab.index.end())
    return Term(tab.nodes[it->second].get());
  auto node = std::make_unique<TermNode>();
  node->kind = HeadKind::App;
  node->sym = sym;
  node->args = std::move(args);
  node->id = static_cast<uint32_t>(tab.nodes.size());
  uint32_t sz = 1;
  for (const Term& a : node->args)
    sz += a.size();
  node->size = sz;
  tab.nodes.push_back(std::move(node));
  tab.index.emplace(std::move(key), tab.nodes.back()->id);
  return Term(tab.nodes.back().get());
}

Term mk_numeral(const Rational& q) {
  NodeKey key;
  key.kind = HeadKind::Numeral;
  key.sym = 0;
  key.index = 0;
  key.num = q;
  return TermTable::instance().intern(std::move(key), "");
}

Term mk_fresh_constant(const std::string& name) {
  auto& tab = TermTable::instance();
  NodeKey key;
  key.kind = HeadKind::Constant;
  key.sym = 0;
  key.index = tab.next_const.fetch_add(1);
  return tab.intern(std::move(key),
                    name.empty() ? "k" + std::to_string(key.index) : name);
}

Term mk_fresh_var() {
  auto& tab = TermTable::instance();
  NodeKey key;
  key.kind = HeadKind::Var;
  key.sym = 0;
  key.index = tab.next_var.fetch_add(1);
  return tab.intern(std::move(key), "");
}

//===----------------------------------------------------------------------===//
// Structural order
//===----------------------------------------------------------------------===//

namespace {

int head_class(Term t) {
  switch (t.kind()) {
  case HeadKind::Numeral:
    return 0;
  case HeadKind::Constant:
    return 1;
  case HeadKind::Var:
    return 2;
  case HeadKind::App:
    switch (symbol_info(t.sym()).kind) {
    case SymbolKind::TheoryX:
      return 3;
    case SymbolKind::Uninterpreted:
      return 4;
    case SymbolKind::AC:
      return 5;
    }
  }
  return 6;
}

// -1 / 0 / +1 three-way structural comparison.
int structural_cmp(Term a, Term b) {
  if (a == b)
    return 0;
  int ca = head_class(a), cb = head_class(b);
  if (ca != cb)
    return ca < cb ? -1 : 1;
  switch (a.kind()) {
  case HeadKind::Numeral:
    return a.num() < b.num() ? -1 : 1;
  case HeadKind::Constant:
  case HeadKind::Var:
    return a.index() < b.index() ? -1 : 1;
  case HeadKind::App: {
    if (a.sym() != b.sym())
      return a.sym() < b.sym() ? -1 : 1;
    if (a.nargs() != b.nargs())
      return a.nargs() < b.nargs() ? -1 : 1;
    for (size_t i = 0; i < a.nargs(); ++i)
      if (int c = structural_cmp(a.arg(i), b.arg(i)))
        return c;
    return 0;
  }
  }
  return 0;
}

} // namespace

bool structural_less(Term a, Term b) { return structural_cmp(a, b) < 0; }

//===----------------------------------------------------------------------===//
// Positions
//===----------------------------------------------------------------------===//

Term subterm_at(Term t, std::span<const uint32_t> p) {
  Term cur = t;
  for (uint32_t i : p) {
    if (!cur.is_app() || i >= cur.nargs())
      throw std::out_of_range("invalid position");
    cur = cur.arg(i);
  }
  return cur;
}

Term replace_at(Term t, std::span<const uint32_t> p, Term r) {
  if (p.empty())
    return r;
  uint32_t i = p.front();
  if (!t.is_app() || i >= t.nargs())
    throw std::out_of_range("invalid position");
  std::vector<Term> args = t.args();
  args[i] = replace_at(args[i], p.subspan(1), r);
  return mk_app(t.sym(), std::move(args));
}

//===----------------------------------------------------------------------===//
// Multisets and aliens
//===----------------------------------------------------------------------===//

void TermMultiset::add(Term t, uint32_t count) {
  if (count == 0)
    return;
  auto it = std::lower_bound(
      items_.begin(), items_.end(), t,
      [](const auto& p, const Term& x) { return p.first.id() < x.id(); });
  if (it != items_.end() && it->first == t)
    it->second += count;
  else
    items_.insert(it, {t, count});
  total_ += count;
}

uint32_t TermMultiset::count(Term t) const {
  auto it = std::lower_bound(
      items_.begin(), items_.end(), t,
      [](const auto& p, const Term& x) { return p.first.id() < x.id(); });
  return (it != items_.end() && it->first == t) ? it->second : 0;
}

TermMultiset TermMultiset::set_union(const TermMultiset& o) const {
  TermMultiset r = *this;
  for (const auto& [t, c] : o.items_)
    r.add(t, c);
  return r;
}

TermMultiset TermMultiset::intersect(const TermMultiset& o) const {
  TermMultiset r;
  size_t i = 0, j = 0;
  while (i < items_.size() && j < o.items_.size()) {
    uint32_t a = items_[i].first.id(), b = o.items_[j].first.id();
    if (a == b) {
      r.add(items_[i].first, std::min(items_[i].second, o.items_[j].second));
      ++i, ++j;
    } else if (a < b) {
      ++i;
    } else {
      ++j;
    }
  }
  return r;
}

TermMultiset TermMultiset::subtract(const TermMultiset& o) const {
  TermMultiset r;
  for (const auto& [t, c] : items_) {
    uint32_t oc = o.count(t);
    if (c > oc)
      r.add(t, c - oc);
  }
  return r;
}

bool TermMultiset::subset_of(const TermMultiset& o) const {
  for (const auto& [t, c] : items_)
    if (c > o.count(t))
      return false;
  return true;
}

std::vector<Term> TermMultiset::expanded() const {
  std::vector<Term> out;
  out.reserve(total_);
  for (const auto& [t, c] : items_)
    for (uint32_t i = 0; i < c; ++i)
      out.push_back(t);
  return out;
}

namespace {
void collect_aliens(Term t, SymbolId u, TermMultiset& out) {
  if (t.headed_by(u)) {
    collect_aliens(t.arg(0), u, out);
    collect_aliens(t.arg(1), u, out);
  } else {
    out.add(t);
  }
}
} // namespace

TermMultiset aliens(Term t, SymbolId u) {
  if (symbol_info(u).kind != SymbolKind::AC)
    throw std::invalid_argument("aliens: symbol is not AC");
  TermMultiset out;
  collect_aliens(t, u, out);
  return out;
}

//===----------------------------------------------------------------------===//
// Substitution
//===----------------------------------------------------------------------===//

void Substitution::bind(Term var, Term value) {
  assert(var.is_var());
  map_.emplace_back(var.index(), value);
}

Term Substitution::apply(Term t) const {
  if (t.is_var()) {
    for (const auto& [idx, v] : map_)
      if (idx == t.index())
        return v;
    return t;
  }
  if (!t.is_app())
    return t;
  bool changed = false;
  std::vector<Term> args;
  args.reserve(t.nargs());
  for (const Term& a : t.args()) {
    Term b = apply(a);
    changed |= (b != a);
    args.push_back(b);
  }
  return changed ? mk_app(t.sym(), std::move(args)) : t;
}

//===----------------------------------------------------------------------===//
// Classification
//===----------------------------------------------------------------------===//

TermClass classify(Term t) {
  switch (t.kind()) {
  case HeadKind::Numeral:
  case HeadKind::Constant:
    return TermClass::PureXK;
  case HeadKind::Var:
    return TermClass::Other;
  case HeadKind::App:
    break;
  }
  const SymbolInfo& info = symbol_info(t.sym());
  switch (info.kind) {
  case SymbolKind::TheoryX:
    for (const Term& a : t.args())
      if (classify(a) != TermClass::PureXK)
        return TermClass::Other;
    return TermClass::PureXK;
  case SymbolKind::Uninterpreted:
    for (const Term& a : t.args())
      if (classify(a) != TermClass::PureXK)
        return TermClass::Other;
    return TermClass::TEmpty;
  case SymbolKind::AC: {
    TermMultiset as = aliens(t, t.sym());
    for (const auto& [alien, c] : as.items()) {
      (void)c;
      if (classify(alien) != TermClass::PureXK)
        return TermClass::Other;
    }
    return TermClass::TAC;
  }
  }
  return TermClass::Other;
}

//===----------------------------------------------------------------------===//
// Rendering
//===----------------------------------------------------------------------===//

std::string to_sexpr(Term t) {
  switch (t.kind()) {
  case HeadKind::Numeral: {
    const Rational& q = t.num();
    if (q.is_integer())
      return q.str();
    if (q.is_negative())
      return "(- (/ " + std::to_string(-q.num()) + " " +
             std::to_string(q.den()) + "))";
    return "(/ " + std::to_string(q.num()) + " " + std::to_string(q.den()) +
           ")";
  }
  case HeadKind::Constant:
    return t.const_name();
  case HeadKind::Var:
    return "?x" + std::to_string(t.index());
  case HeadKind::App: {
    std::string s = "(" + symbol_info(t.sym()).name;
    for (const Term& a : t.args())
      s += " " + to_sexpr(a);
    return s + ")";
  }
  }
  return "?";
}

} // namespace acx
