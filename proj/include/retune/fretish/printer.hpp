// fretish/printer.hpp — canonical rendering of FRETISH ASTs.
//
// The canonical form is what every other module keys on: atom identity,
// duplicate detection, and refactoring-site matching all compare canonical
// strings.  Rendering is injective on parser-built trees: same-operator
// chains print flat on the left spine (matching the grammar's left
// associativity) and everything else is explicitly parenthesised, so
// parse(render(e)) reproduces e node for node.

#ifndef RETUNE_FRETISH_PRINTER_HPP
#define RETUNE_FRETISH_PRINTER_HPP

#include <string>
#include <vector>

#include "retune/fretish/ast.hpp"

namespace retune {

std::string render_arith(const ArithExpr& e);
std::string render_atom(const Atom& a);
std::string render_expr(const BoolExpr& e);

// Canonical single-line text of a whole requirement:
//   [when (E)] [if (E)] COMPONENT shall [until (E)] (RESPONSE)
std::string render_requirement(const Requirement& r);

// Canonical identity string for an atom (comparisons render fully).
std::string canonical_atom(const Atom& a);

// Canonical identity string for an expression.
inline std::string canonical_expr(const BoolExpr& e) { return render_expr(e); }

bool expr_equal(const BoolExpr& a, const BoolExpr& b);

// Deterministic left-to-right, duplicate-free list of the atoms in `e`
// (duplicates decided by canonical_atom).
std::vector<Atom> collect_atoms(const BoolExpr& e);

}  // namespace retune

#endif
