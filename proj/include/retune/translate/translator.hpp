// translate/translator.hpp — requirement → future-time LTL.
//
// Template (C = conjunction of the present condition clauses, R = response,
// S = until-stop):
//
//   no timing:     G (C -> R)          condition absent:  G R
//   until (S):     G (C -> (R W S))    condition absent:  G (R W S)
//
// Weak until keeps the response obligated forever when the stop condition
// never occurs.  The trigger fires on every C-state (not only rising edges);
// see docs/semantics.md.
//
// References resolve per FragmentResolution: AsAtom treats a reference as a
// proposition named by the referenced requirement's id; Inline substitutes
// the referenced requirement's condition, recursively.

#ifndef RETUNE_TRANSLATE_TRANSLATOR_HPP
#define RETUNE_TRANSLATE_TRANSLATOR_HPP

#include "retune/abstraction/atom_map.hpp"
#include "retune/fretish/ast.hpp"
#include "retune/ltl/formula.hpp"
#include "retune/store/requirement_set.hpp"

namespace retune {

enum class ResolutionMode { AsAtom, Inline };

struct FragmentResolution {
    ResolutionMode mode = ResolutionMode::AsAtom;
    const RequirementSet* set = nullptr;  // required for Inline

    static FragmentResolution as_atom() { return {ResolutionMode::AsAtom, nullptr}; }
    static FragmentResolution inline_in(const RequirementSet& s) {
        return {ResolutionMode::Inline, &s};
    }
};

// True when `r` has the extracted-fragment shape: a condition, a response
// that is a single boolean variable, and no scope.
bool is_fragment_shaped(const Requirement& r);

// The fragment's defining expression: its condition clauses conjoined.
BoolExpr fragment_definition(const Requirement& fragment);

// Replaces every Reference atom by the referenced requirement's definition,
// recursively until reference-free.  Throws ValidationError on unresolved
// references and on referenced requirements that are not fragment-shaped
// (the store guarantees acyclicity).
BoolExpr substitute_references(const BoolExpr& expr, const RequirementSet& set);

// Compiles `req` into LTL over propositions drawn from `map`.
// Throws ValidationError on a non-empty scope.
LtlFormula translate(const Requirement& req, const FragmentResolution& res,
                     AtomMap& map);

}  // namespace retune

#endif
