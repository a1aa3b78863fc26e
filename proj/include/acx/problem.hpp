//===--- problem.hpp - Problem files ----------------------------*- C++ -*-===//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//
//
// The input format is one S-expression form per line (forms may span
// lines):
//
//   (theory empty|lia)
//   (ac u ...)              AC symbols, arity 2
//   (op f <arity>)          uninterpreted symbols
//   (const a b ...)         uninterpreted constants
//   (assert (= <t> <t>))    hypotheses
//   (goal (= <t> <t>))      goals; several goal forms mean conjunction
//
// LA terms use + - * (binary; - also unary), integer literals and
// rational literals (/ p q), and are only legal when the theory is lia.
//
//===----------------------------------------------------------------------===//

#ifndef ACX_PROBLEM_HPP
#define ACX_PROBLEM_HPP

#include "acx/term.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace acx {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) +
                           ": " + msg),
        line(line), col(col) {}
};

struct Problem {
  std::string theory = "empty";
  std::vector<std::string> ac_symbols;                    // declaration order
  std::vector<std::pair<std::string, uint32_t>> op_decls; // name, arity
  std::vector<std::string> const_names;                   // declaration order
  std::vector<Equation> hypotheses;
  std::vector<Equation> goals;

  // per-problem bindings (constants are fresh per parse)
  std::unordered_map<std::string, Term> constants;
  std::unordered_map<std::string, SymbolId> symbols;

  Term constant(const std::string& name) const { return constants.at(name); }
  SymbolId symbol(const std::string& name) const { return symbols.at(name); }
};

Problem parse_problem(std::string_view text);
std::string render_problem(const Problem& p);

} // namespace acx

#endif // ACX_PROBLEM_HPP
