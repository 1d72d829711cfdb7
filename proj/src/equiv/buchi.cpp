#include "retune/equiv/buchi.hpp"

namespace retune {

std::string Guard::to_string() const {
    if (literals.empty()) return "true";
    std::string out;
    for (const auto& [p, v] : literals) {
        if (!out.empty()) out += " & ";
        out += v ? p : "!" + p;
    }
    return out;
}

BuchiAutomaton degeneralize(const BuchiAutomaton& a) {
    const std::size_t k = a.acceptance_sets.size();
    if (k <= 1) return a;

    // States (s, layer): the layer advances when leaving an F_layer state and
    // wraps after F_{k-1}; a run wraps infinitely often iff it visits every
    // acceptance set infinitely often.  Single set: layer k-1 states in F_{k-1}.
    BuchiAutomaton out;
    const int n = a.state_count;
    out.state_count = n * static_cast<int>(k);
    out.edges.resize(static_cast<std::size_t>(out.state_count));
    out.acceptance_sets.assign(1, std::vector<bool>(
                                      static_cast<std::size_t>(out.state_count), false));

    auto id = [&](int s, std::size_t layer) {
        return s + static_cast<int>(layer) * n;
    };

    for (int s = 0; s < n; ++s) {
        for (std::size_t layer = 0; layer < k; ++layer) {
            std::size_t next_layer =
                a.acceptance_sets[layer][static_cast<std::size_t>(s)]
                    ? (layer + 1) % k
                    : layer;
            auto& bucket = out.edges[static_cast<std::size_t>(id(s, layer))];
            for (const BuchiEdge& e : a.edges[static_cast<std::size_t>(s)])
                bucket.push_back({e.guard, id(e.target, next_layer)});
        }
        if (a.acceptance_sets[k - 1][static_cast<std::size_t>(s)])
            out.acceptance_sets[0][static_cast<std::size_t>(id(s, k - 1))] = true;
    }
    for (int s : a.initial_states) out.initial_states.push_back(id(s, 0));
    return out;
}

}  // namespace retune
