// abstraction/atom_map.hpp — consistent propositionalization of expression
// atoms across a family of formulas.
//
// Identical canonical atoms map to the same proposition (a1, a2, … in first
// occurrence order); Reference atoms map to propositions named by their
// requirement id.  Atom identity is purely syntactic after canonicalization:
// `x > 5` and `x >= 6` stay unrelated.

#ifndef RETUNE_ABSTRACTION_ATOM_MAP_HPP
#define RETUNE_ABSTRACTION_ATOM_MAP_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "retune/fretish/ast.hpp"
#include "retune/ltl/formula.hpp"

namespace retune {

class AtomMap {
public:
    // Proposition for `a`, allocating a fresh name on first sight.
    // Throws std::logic_error when the map is frozen and `a` is unseen.
    std::string proposition(const Atom& a);

    void freeze() { frozen_ = true; }
    bool frozen() const { return frozen_; }

    // Entries as (canonical atom, proposition) pairs in assignment order.
    std::vector<std::pair<std::string, std::string>> entries() const;

    std::string to_json() const;

private:
    std::vector<std::pair<std::string, std::string>> order_;  // atom -> prop
    std::map<std::string, std::string> by_atom_;
    int counter_ = 0;
    bool frozen_ = false;
};

// Replaces every atom in `e` by its proposition, preserving the boolean
// structure.  The same map must be used across all expressions of one
// checking session.
BoolExpr propositionalize_expr(const BoolExpr& e, AtomMap& map);

// Spec-level entry point: one map for the whole list.
std::pair<AtomMap, std::vector<BoolExpr>> propositionalize(
    const std::vector<BoolExpr>& exprs);

// Same abstraction emitting an LTL term directly.
LtlFormula abstract_to_ltl(const BoolExpr& e, AtomMap& map);

}  // namespace retune

#endif
