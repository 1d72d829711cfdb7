// ltl/formula.hpp — future-time LTL terms.
//
// Nodes are immutable shared trees.  to_nnf pushes negation to propositions
// and eliminates Implies while keeping W/G/F as first-class operators;
// to_core additionally rewrites W/G/F into the Until/Release core consumed
// by the tableau:
//
//   G a    =  false R a        F a  =  true U a        a W b  =  b R (a | b)
//
// Release(false, x) prints as `G x`.

#ifndef RETUNE_LTL_FORMULA_HPP
#define RETUNE_LTL_FORMULA_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace retune {

enum class LtlKind {
    True, False, Prop, Not, And, Or, Implies,
    Next, Until, WeakUntil, Release, Globally, Finally
};

struct LtlNode;
using LtlFormula = std::shared_ptr<const LtlNode>;

struct LtlNode {
    LtlKind kind{};
    std::string prop;      // Prop
    LtlFormula lhs, rhs;   // unary ops use lhs
};

namespace ltl {

LtlFormula top();
LtlFormula bottom();
LtlFormula prop(std::string name);
LtlFormula lnot(LtlFormula a);
LtlFormula land(LtlFormula a, LtlFormula b);
LtlFormula lor(LtlFormula a, LtlFormula b);
LtlFormula implies(LtlFormula a, LtlFormula b);
LtlFormula next(LtlFormula a);
LtlFormula until(LtlFormula a, LtlFormula b);
LtlFormula weak_until(LtlFormula a, LtlFormula b);
LtlFormula release(LtlFormula a, LtlFormula b);
LtlFormula globally(LtlFormula a);
LtlFormula finally_(LtlFormula a);

}  // namespace ltl

bool ltl_equal(const LtlFormula& a, const LtlFormula& b);
std::size_t ltl_size(const LtlFormula& f);
std::set<std::string> ltl_props(const LtlFormula& f);

// Negation normal form: Not only on Prop, Implies eliminated; W/G/F kept.
LtlFormula to_nnf(const LtlFormula& f);

// NNF restricted to {True, False, literals, And, Or, X, U, R}.
LtlFormula to_core(const LtlFormula& f);

// Substitutes `replacement` for every occurrence of proposition `name`.
LtlFormula substitute_prop(const LtlFormula& f, const std::string& name,
                           const LtlFormula& replacement);

// Renames proposition `from` to `to`.
LtlFormula rename_prop(const LtlFormula& f, const std::string& from,
                       const std::string& to);

// Text form used on the CLI:  G F X U W R & | ! -> plus parentheses.
// Precedence (tightest first): unary, U/W/R (right-assoc), &, |, ->.
std::string ltl_to_string(const LtlFormula& f);
LtlFormula parse_ltl(const std::string& text);  // throws std::runtime_error

}  // namespace retune

#endif
