#include "retune/abstraction/atom_map.hpp"

#include <stdexcept>

#include <json.hpp>

#include "retune/fretish/printer.hpp"

namespace retune {

std::string AtomMap::proposition(const Atom& a) {
    const std::string key = canonical_atom(a);
    auto it = by_atom_.find(key);
    if (it != by_atom_.end()) return it->second;
    if (frozen_)
        throw std::logic_error("AtomMap is frozen; unseen atom '" + key + "'");
    std::string name = a.kind == AtomKind::Reference
                           ? a.name
                           : "a" + std::to_string(++counter_);
    by_atom_.emplace(key, name);
    order_.emplace_back(key, name);
    return name;
}

std::vector<std::pair<std::string, std::string>> AtomMap::entries() const {
    return order_;
}

std::string AtomMap::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [atom, prop] : order_) j[prop] = atom;
    return j.dump();
}

BoolExpr propositionalize_expr(const BoolExpr& e, AtomMap& map) {
    switch (e->kind) {
        case BoolKind::AtomNode:
            return bool_var(map.proposition(e->atom));
        case BoolKind::Not:
            return bnot(propositionalize_expr(e->lhs, map));
        case BoolKind::And:
            return band(propositionalize_expr(e->lhs, map),
                        propositionalize_expr(e->rhs, map));
        case BoolKind::Or:
            return bor(propositionalize_expr(e->lhs, map),
                       propositionalize_expr(e->rhs, map));
    }
    throw std::logic_error("propositionalize: unknown node");
}

std::pair<AtomMap, std::vector<BoolExpr>> propositionalize(
    const std::vector<BoolExpr>& exprs) {
    AtomMap map;
    std::vector<BoolExpr> out;
    out.reserve(exprs.size());
    for (const auto& e : exprs) out.push_back(propositionalize_expr(e, map));
    return {std::move(map), std::move(out)};
}

LtlFormula abstract_to_ltl(const BoolExpr& e, AtomMap& map) {
    switch (e->kind) {
        case BoolKind::AtomNode:
            return ltl::prop(map.proposition(e->atom));
        case BoolKind::Not:
            return ltl::lnot(abstract_to_ltl(e->lhs, map));
        case BoolKind::And:
            return ltl::land(abstract_to_ltl(e->lhs, map),
                             abstract_to_ltl(e->rhs, map));
        case BoolKind::Or:
            return ltl::lor(abstract_to_ltl(e->lhs, map),
                            abstract_to_ltl(e->rhs, map));
    }
    throw std::logic_error("abstract_to_ltl: unknown node");
}

}  // namespace retune
