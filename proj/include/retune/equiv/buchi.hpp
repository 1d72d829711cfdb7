// equiv/buchi.hpp — Büchi automata over symbolic letters.
//
// A letter guard is a consistent conjunction of proposition literals; a
// concrete letter (set of true propositions) satisfies a guard when it
// contains every positive literal and none of the negative ones.  Guards are
// satisfiable by construction (inconsistent tableau branches are dropped).

#ifndef RETUNE_EQUIV_BUCHI_HPP
#define RETUNE_EQUIV_BUCHI_HPP

#include <map>
#include <string>
#include <vector>

#include "retune/ltl/lasso.hpp"

namespace retune {

struct Guard {
    std::map<std::string, bool> literals;  // prop -> required value

    bool satisfied_by(const Letter& l) const {
        for (const auto& [p, v] : literals)
            if ((l.count(p) != 0) != v) return false;
        return true;
    }

    // Minimal satisfying letter: exactly the positive literals.
    Letter concretize() const {
        Letter l;
        for (const auto& [p, v] : literals)
            if (v) l.insert(p);
        return l;
    }

    std::string to_string() const;
};

struct BuchiEdge {
    Guard guard;
    int target = 0;
};

struct BuchiAutomaton {
    int state_count = 0;
    std::vector<int> initial_states;
    std::vector<std::vector<BuchiEdge>> edges;          // indexed by state
    std::vector<std::vector<bool>> acceptance_sets;     // k sets over states;
                                                        // k == 0 means all
                                                        // states accepting

    bool degeneralized() const { return acceptance_sets.size() <= 1; }

    // Single-set membership for a degeneralized automaton.
    bool accepting(int s) const {
        return acceptance_sets.empty() || acceptance_sets[0][static_cast<std::size_t>(s)];
    }
};

// Counting degeneralization; language-preserving (checked against the lasso
// oracle in the test suite).
BuchiAutomaton degeneralize(const BuchiAutomaton& a);

}  // namespace retune

#endif
