#include "retune/fretish/printer.hpp"

#include <unordered_set>

namespace retune {

std::string render_arith(const ArithExpr& e) {
    switch (e->kind) {
        case ArithKind::NumLiteral: return e->text;
        case ArithKind::NullLiteral: return "null";
        case ArithKind::Var: return e->text;
        case ArithKind::FuncApp: {
            std::string out = e->text + "(";
            for (std::size_t i = 0; i < e->args.size(); ++i) {
                if (i) out += ", ";
                out += render_arith(e->args[i]);
            }
            return out + ")";
        }
        case ArithKind::BinOp:
            return render_arith(e->lhs) + " " + std::string(1, e->op) + " " +
                   render_arith(e->rhs);
    }
    return "?";
}

std::string render_atom(const Atom& a) {
    switch (a.kind) {
        case AtomKind::BooleanVar:
        case AtomKind::Reference:
            return a.name;
        case AtomKind::Comparison:
            return render_arith(a.lhs) + " " + cmp_op_text(a.op) + " " +
                   render_arith(a.rhs);
    }
    return "?";
}

namespace {

// `parent` is the enclosing binary operator (And/Or) or Not; `left_of_same`
// marks the flattenable left spine of a chain.
std::string render_operand(const BoolExpr& e, BoolKind parent, bool left_of_same);

std::string render_binary(const BoolExpr& e) {
    const char* op = e->kind == BoolKind::And ? " & " : " | ";
    return render_operand(e->lhs, e->kind, true) + op +
           render_operand(e->rhs, e->kind, false);
}

std::string render_bare(const BoolExpr& e) {
    switch (e->kind) {
        case BoolKind::AtomNode: return render_atom(e->atom);
        case BoolKind::Not: return render_operand(e, BoolKind::Not, false);
        case BoolKind::And:
        case BoolKind::Or: return render_binary(e);
    }
    return "?";
}

std::string render_operand(const BoolExpr& e, BoolKind parent, bool left_of_same) {
    switch (e->kind) {
        case BoolKind::AtomNode:
            if (e->atom.kind == AtomKind::Comparison && parent != BoolKind::AtomNode)
                return "(" + render_atom(e->atom) + ")";
            return render_atom(e->atom);
        case BoolKind::Not: {
            const BoolExpr& sub = e->lhs;
            if (sub->kind == BoolKind::AtomNode &&
                sub->atom.kind != AtomKind::Comparison)
                return "!" + sub->atom.name;
            return "!(" + render_bare(sub) + ")";
        }
        case BoolKind::And:
        case BoolKind::Or:
            if (left_of_same && e->kind == parent) return render_binary(e);
            return "(" + render_binary(e) + ")";
    }
    return "?";
}

}  // namespace

std::string render_expr(const BoolExpr& e) { return render_bare(e); }

std::string render_requirement(const Requirement& r) {
    std::string out;
    if (r.condition.when_clause)
        out += "when (" + render_expr(r.condition.when_clause) + ") ";
    if (r.condition.if_clause)
        out += "if (" + render_expr(r.condition.if_clause) + ") ";
    out += r.component + " shall ";
    if (r.timing) out += "until (" + render_expr(r.timing->stop) + ") ";
    out += "(" + render_expr(r.response) + ")";
    return out;
}

std::string canonical_atom(const Atom& a) { return render_atom(a); }

bool expr_equal(const BoolExpr& a, const BoolExpr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return render_expr(a) == render_expr(b);
}

namespace {

void collect(const BoolExpr& e, std::vector<Atom>& out,
             std::unordered_set<std::string>& seen) {
    switch (e->kind) {
        case BoolKind::AtomNode:
            if (seen.insert(canonical_atom(e->atom)).second) out.push_back(e->atom);
            break;
        case BoolKind::Not:
            collect(e->lhs, out, seen);
            break;
        case BoolKind::And:
        case BoolKind::Or:
            collect(e->lhs, out, seen);
            collect(e->rhs, out, seen);
            break;
    }
}

}  // namespace

std::vector<Atom> collect_atoms(const BoolExpr& e) {
    std::vector<Atom> out;
    std::unordered_set<std::string> seen;
    if (e) collect(e, out, seen);
    return out;
}

}  // namespace retune
