#include "retune/translate/translator.hpp"

#include <stdexcept>

namespace retune {

bool is_fragment_shaped(const Requirement& r) {
    if (!r.has_condition()) return false;
    if (r.scope && !r.scope->empty()) return false;
    return r.response->kind == BoolKind::AtomNode &&
           r.response->atom.kind == AtomKind::BooleanVar;
}

BoolExpr fragment_definition(const Requirement& fragment) {
    const BoolExpr& w = fragment.condition.when_clause;
    const BoolExpr& i = fragment.condition.if_clause;
    if (w && i) return band(w, i);
    return w ? w : i;
}

BoolExpr substitute_references(const BoolExpr& expr, const RequirementSet& set) {
    switch (expr->kind) {
        case BoolKind::AtomNode: {
            if (expr->atom.kind != AtomKind::Reference) return expr;
            const std::string& id = expr->atom.name;
            if (!set.contains(id))
                throw ValidationError({"unresolved reference '" + id + "'"});
            const Requirement& frag = set.get(id);
            if (!is_fragment_shaped(frag))
                throw ValidationError(
                    {"referenced requirement '" + id + "' is not fragment-shaped"});
            return substitute_references(fragment_definition(frag), set);
        }
        case BoolKind::Not:
            return bnot(substitute_references(expr->lhs, set));
        case BoolKind::And:
            return band(substitute_references(expr->lhs, set),
                        substitute_references(expr->rhs, set));
        case BoolKind::Or:
            return bor(substitute_references(expr->lhs, set),
                       substitute_references(expr->rhs, set));
    }
    throw std::logic_error("substitute_references: unknown node");
}

namespace {

BoolExpr resolve(const BoolExpr& e, const FragmentResolution& res) {
    if (!e || res.mode == ResolutionMode::AsAtom) return e;
    if (res.set == nullptr)
        throw std::invalid_argument("Inline resolution needs a requirement set");
    return substitute_references(e, *res.set);
}

}  // namespace

LtlFormula translate(const Requirement& req, const FragmentResolution& res,
                     AtomMap& map) {
    if (req.scope && !req.scope->empty())
        throw ValidationError({"'" + req.id + "': non-empty scope is not supported"});

    BoolExpr when_c = resolve(req.condition.when_clause, res);
    BoolExpr if_c = resolve(req.condition.if_clause, res);
    BoolExpr response = resolve(req.response, res);
    BoolExpr stop = req.timing ? resolve(req.timing->stop, res) : nullptr;

    LtlFormula cond;
    if (when_c && if_c)
        cond = ltl::land(abstract_to_ltl(when_c, map), abstract_to_ltl(if_c, map));
    else if (when_c || if_c)
        cond = abstract_to_ltl(when_c ? when_c : if_c, map);

    LtlFormula body = abstract_to_ltl(response, map);
    if (stop) body = ltl::weak_until(body, abstract_to_ltl(stop, map));

    if (cond) return ltl::globally(ltl::implies(cond, body));
    return ltl::globally(body);
}

}  // namespace retune
