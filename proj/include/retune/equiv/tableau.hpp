// equiv/tableau.hpp — LTL → generalized Büchi automaton, classic
// tableau-expansion construction.
//
// States are saturated formula sets over the closure of the core-normalized
// input (so the state count is bounded by 2^|closure|); transitions carry
// symbolic literal guards; one generalized acceptance set per Until
// subformula (a state fulfils `a U b` when it either drops the obligation or
// asserts b now).

#ifndef RETUNE_EQUIV_TABLEAU_HPP
#define RETUNE_EQUIV_TABLEAU_HPP

#include "retune/equiv/buchi.hpp"
#include "retune/ltl/formula.hpp"

namespace retune {

// L(automaton) = models of f.  Accepts any formula: the input is normalized
// with to_core first.
BuchiAutomaton ltl_to_buchi(const LtlFormula& f);

}  // namespace retune

#endif
