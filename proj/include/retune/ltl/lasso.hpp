// ltl/lasso.hpp — ultimately periodic words (prefix · loop^ω) and an exact
// LTL evaluator over them.  This is the independent semantic oracle the
// automata engine is checked against; it never goes through the tableau.

#ifndef RETUNE_LTL_LASSO_HPP
#define RETUNE_LTL_LASSO_HPP

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "retune/ltl/formula.hpp"

namespace retune {

using Letter = std::set<std::string>;  // propositions true at one step

struct LassoTrace {
    std::vector<Letter> prefix;
    std::vector<Letter> loop;  // non-empty

    std::string to_string() const;
};

// Exact LTL semantics on prefix · loop^ω.  Temporal operators are resolved
// by fixpoint sweeps over the finitely many distinct positions.  Accepts any
// formula (NNF not required).  Throws std::invalid_argument on empty loop.
bool eval_on_lasso(const LtlFormula& f, const LassoTrace& trace);

// Deterministic exhaustive enumeration of every lasso with prefix length
// 0..max_prefix and loop length 1..max_loop over `props`.  The callback may
// return false to stop early; enumerate_lassos returns false in that case.
// Throws std::invalid_argument when max_prefix < 0 or max_loop < 1.
bool enumerate_lassos(const std::set<std::string>& props, int max_prefix,
                      int max_loop, const std::function<bool(const LassoTrace&)>& fn);

// Convenience: collects the full enumeration (small bounds only).
std::vector<LassoTrace> all_lassos(const std::set<std::string>& props,
                                   int max_prefix, int max_loop);

}  // namespace retune

#endif
