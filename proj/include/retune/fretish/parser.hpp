// fretish/parser.hpp — recursive-descent parser for the FRETISH subset.
//
// Grammar (see docs/grammar.md for the full EBNF):
//
//   requirement = [cond] [cond] COMPONENT "shall" ["until" "(" expr ")"] expr
//   cond        = ("when" | "if") "(" expr ")"
//
// `when` and `if` are interchangeable condition keywords.  A single leading
// condition clause always lands in the if_clause slot; when two clauses are
// present the first fills when_clause and the second if_clause.
//
// `a => b` is implication sugar inside expressions and desugars to `!a | b`.

#ifndef RETUNE_FRETISH_PARSER_HPP
#define RETUNE_FRETISH_PARSER_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "retune/fretish/ast.hpp"

namespace retune {

struct ParseError : std::runtime_error {
    ParseError(std::string msg, int line, int col, std::vector<std::string> expected);

    int line;
    int col;
    std::vector<std::string> expected;
};

// Parses one requirement's text into its AST.  Metadata (id, parents,
// depends, rationale) is not part of the grammar; callers fill it in.
Requirement parse_requirement(const std::string& text);

// Parses a bare boolean expression (used by CLI subtree matching and
// fragment-definition files).
BoolExpr parse_bool_expr(const std::string& text);

}  // namespace retune

#endif
