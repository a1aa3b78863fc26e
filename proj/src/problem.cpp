//===--- problem.cpp - Problem files ------------------------------------------//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//

#include "acx/problem.hpp"

#include <cctype>
#include <charconv>
#include <memory>
#include <optional>

namespace acx {

namespace {

struct SExpr {
  // atom when children empty and !is_list
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> children;
  int line = 0, col = 0;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  struct Token {
    enum Kind { LPAREN, RPAREN, ATOM, END } kind;
    std::string text;
    int line, col;
  };

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= text_.size()) {
      t.kind = Token::END;
      return t;
    }
    char c = text_[pos_];
    if (c == '(') {
      advance();
      t.kind = Token::LPAREN;
      return t;
    }
    if (c == ')') {
      advance();
      t.kind = Token::RPAREN;
      return t;
    }
    t.kind = Token::ATOM;
    while (pos_ < text_.size() && !std::isspace((unsigned char)text_[pos_]) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != ';') {
      t.text += text_[pos_];
      advance();
    }
    if (t.text.empty())
      throw ParseError(t.line, t.col, "unexpected character");
    return t;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') { // comment to end of line
        while (pos_ < text_.size() && text_[pos_] != '\n')
          advance();
      } else if (std::isspace((unsigned char)c)) {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Reader {
public:
  explicit Reader(std::string_view text) : lex_(text) { tok_ = lex_.next(); }

  std::optional<SExpr> read_form() {
    if (tok_.kind == Lexer::Token::END)
      return std::nullopt;
    return read();
  }

private:
  SExpr read() {
    if (tok_.kind == Lexer::Token::ATOM) {
      SExpr e;
      e.atom = tok_.text;
      e.line = tok_.line;
      e.col = tok_.col;
      tok_ = lex_.next();
      return e;
    }
    if (tok_.kind == Lexer::Token::LPAREN) {
      SExpr e;
      e.is_list = true;
      e.line = tok_.line;
      e.col = tok_.col;
      tok_ = lex_.next();
      while (tok_.kind != Lexer::Token::RPAREN) {
        if (tok_.kind == Lexer::Token::END)
          throw ParseError(e.line, e.col, "unterminated form");
        e.children.push_back(read());
      }
      tok_ = lex_.next();
      return e;
    }
    throw ParseError(tok_.line, tok_.col, "unexpected ')'");
  }

  Lexer lex_;
  Lexer::Token tok_;
};

bool is_integer(const std::string& s) {
  size_t i = (s[0] == '-' && s.size() > 1) ? 1 : 0;
  if (i >= s.size())
    return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit((unsigned char)s[i]))
      return false;
  return true;
}

long long parse_int(const SExpr& e) {
  long long v = 0;
  auto [p, ec] =
      std::from_chars(e.atom.data(), e.atom.data() + e.atom.size(), v);
  if (ec != std::errc() || p != e.atom.data() + e.atom.size())
    throw ParseError(e.line, e.col, "integer literal out of range");
  return v;
}

class ProblemBuilder {
public:
  Problem build(std::string_view text) {
    Reader rd(text);
    while (auto form = rd.read_form())
      handle_form(*form);
    if (p_.goals.empty())
      throw ParseError(1, 1, "no goal");
    return std::move(p_);
  }

private:
  void handle_form(const SExpr& f) {
    if (!f.is_list || f.children.empty() || f.children[0].is_list)
      throw ParseError(f.line, f.col, "expected (<keyword> ...)");
    const std::string& kw = f.children[0].atom;
    if (kw == "theory") {
      expect_arity(f, 1);
      const std::string& name = f.children[1].atom;
      if (name != "empty" && name != "lia")
        throw ParseError(f.line, f.col, "unknown theory: " + name);
      p_.theory = name;
    } else if (kw == "ac") {
      if (f.children.size() < 2)
        throw ParseError(f.line, f.col, "(ac ...) needs at least one symbol");
      for (size_t i = 1; i < f.children.size(); ++i)
        declare_symbol(f.children[i], SymbolKind::AC, 2);
    } else if (kw == "op") {
      expect_arity(f, 2);
      const SExpr& ar = f.children[2];
      if (!is_integer(ar.atom) || parse_int(ar) < 0)
        throw ParseError(ar.line, ar.col, "expected an arity");
      long long a = parse_int(ar);
      if (a == 0)
        declare_constant(f.children[1]);
      else
        declare_symbol(f.children[1], SymbolKind::Uninterpreted, (uint32_t)a);
    } else if (kw == "const") {
      if (f.children.size() < 2)
        throw ParseError(f.line, f.col,
                         "(const ...) needs at least one name");
      for (size_t i = 1; i < f.children.size(); ++i)
        declare_constant(f.children[i]);
    } else if (kw == "assert" || kw == "goal") {
      expect_arity(f, 1);
      Equation eq = parse_equation(f.children[1]);
      (kw == "assert" ? p_.hypotheses : p_.goals).push_back(eq);
    } else {
      throw ParseError(f.line, f.col, "unknown form: " + kw);
    }
  }

  void expect_arity(const SExpr& f, size_t n) {
    if (f.children.size() != n + 1)
      throw ParseError(f.line, f.col,
                       "(" + f.children[0].atom + " ...) takes " +
                           std::to_string(n) + " argument(s)");
  }

  void declare_symbol(const SExpr& e, SymbolKind kind, uint32_t arity) {
    if (e.is_list)
      throw ParseError(e.line, e.col, "expected a symbol name");
    check_fresh(e);
    p_.symbols[e.atom] = register_symbol(e.atom, kind, arity);
    if (kind == SymbolKind::AC)
      p_.ac_symbols.push_back(e.atom);
    else
      p_.op_decls.emplace_back(e.atom, arity);
  }

  void declare_constant(const SExpr& e) {
    if (e.is_list)
      throw ParseError(e.line, e.col, "expected a constant name");
    check_fresh(e);
    p_.constants[e.atom] = mk_fresh_constant(e.atom);
    p_.const_names.push_back(e.atom);
  }

  void check_fresh(const SExpr& e) {
    if (p_.constants.count(e.atom) || p_.symbols.count(e.atom))
      throw ParseError(e.line, e.col, "redeclared name: " + e.atom);
    if (e.atom == "+" || e.atom == "-" || e.atom == "*" || e.atom == "/" ||
        e.atom == "=" || e.atom == "neg")
      throw ParseError(e.line, e.col, "reserved name: " + e.atom);
  }

  Equation parse_equation(const SExpr& e) {
    if (!e.is_list || e.children.size() != 3 || e.children[0].is_list ||
        e.children[0].atom != "=")
      throw ParseError(e.line, e.col, "expected (= <term> <term>)");
    return Equation{parse_term(e.children[1]), parse_term(e.children[2])};
  }

  void require_lia(const SExpr& e) {
    if (p_.theory != "lia")
      throw ParseError(e.line, e.col,
                       "arithmetic requires (theory lia)");
  }

  Term parse_term(const SExpr& e) {
    if (!e.is_list) {
      if (is_integer(e.atom)) {
        require_lia(e);
        return mk_numeral(Rational(parse_int(e)));
      }
      auto it = p_.constants.find(e.atom);
      if (it == p_.constants.end())
        throw ParseError(e.line, e.col, "undeclared symbol: " + e.atom);
      return it->second;
    }
    if (e.children.empty() || e.children[0].is_list)
      throw ParseError(e.line, e.col, "expected an application");
    const std::string& head = e.children[0].atom;
    size_t n = e.children.size() - 1;
    auto args = [&](size_t count) {
      if (n != count)
        throw ParseError(e.line, e.col,
                         head + " takes " + std::to_string(count) +
                             " argument(s)");
      std::vector<Term> xs;
      for (size_t i = 1; i < e.children.size(); ++i)
        xs.push_back(parse_term(e.children[i]));
      return xs;
    };
    if (head == "+") {
      require_lia(e);
      return mk_app(sym_add(), args(2));
    }
    if (head == "*") {
      require_lia(e);
      return mk_app(sym_mul(), args(2));
    }
    if (head == "-") {
      require_lia(e);
      if (n == 1)
        return mk_app(sym_neg(), args(1));
      return mk_app(sym_sub(), args(2));
    }
    if (head == "neg") {
      require_lia(e);
      return mk_app(sym_neg(), args(1));
    }
    if (head == "/") {
      require_lia(e);
      if (n != 2 || e.children[1].is_list || e.children[2].is_list ||
          !is_integer(e.children[1].atom) || !is_integer(e.children[2].atom))
        throw ParseError(e.line, e.col, "expected (/ <int> <int>)");
      return mk_numeral(
          Rational(parse_int(e.children[1]), parse_int(e.children[2])));
    }
    auto it = p_.symbols.find(head);
    if (it == p_.symbols.end())
      throw ParseError(e.line, e.col, "undeclared symbol: " + head);
    const SymbolInfo& info = symbol_info(it->second);
    if (n != info.arity)
      throw ParseError(e.line, e.col,
                       "arity mismatch: " + head + " takes " +
                           std::to_string(info.arity) + " argument(s)");
    return mk_app(it->second, args(info.arity));
  }

  Problem p_;
};

} // namespace

Problem parse_problem(std::string_view text) {
  return ProblemBuilder().build(text);
}

std::string render_problem(const Problem& p) {
  std::string out = "(theory " + p.theory + ")\n";
  if (!p.ac_symbols.empty()) {
    out += "(ac";
    for (const auto& s : p.ac_symbols)
      out += " " + s;
    out += ")\n";
  }
  for (const auto& [name, arity] : p.op_decls)
    out += "(op " + name + " " + std::to_string(arity) + ")\n";
  if (!p.const_names.empty()) {
    out += "(const";
    for (const auto& c : p.const_names)
      out += " " + c;
    out += ")\n";
  }
  for (const Equation& e : p.hypotheses)
    out += "(assert (= " + to_sexpr(e.lhs) + " " + to_sexpr(e.rhs) + "))\n";
  for (const Equation& e : p.goals)
    out += "(goal (= " + to_sexpr(e.lhs) + " " + to_sexpr(e.rhs) + "))\n";
  return out;
}

} // namespace acx
