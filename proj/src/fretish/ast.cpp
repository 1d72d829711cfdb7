#include "retune/fretish/ast.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace retune {

ArithExpr num(std::string lexeme) {
    auto n = std::make_shared<ArithNode>();
    n->kind = ArithKind::NumLiteral;
    n->text = std::move(lexeme);
    return n;
}

ArithExpr null_lit() {
    auto n = std::make_shared<ArithNode>();
    n->kind = ArithKind::NullLiteral;
    return n;
}

ArithExpr var(std::string name) {
    auto n = std::make_shared<ArithNode>();
    n->kind = ArithKind::Var;
    n->text = std::move(name);
    return n;
}

ArithExpr func(std::string name, std::vector<ArithExpr> args) {
    if (args.empty())
        throw std::invalid_argument("function application needs at least one argument");
    auto n = std::make_shared<ArithNode>();
    n->kind = ArithKind::FuncApp;
    n->text = std::move(name);
    n->args = std::move(args);
    return n;
}

ArithExpr arith_bin(char op, ArithExpr lhs, ArithExpr rhs) {
    auto n = std::make_shared<ArithNode>();
    n->kind = ArithKind::BinOp;
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

const char* cmp_op_text(CmpOp op) {
    switch (op) {
        case CmpOp::Lt: return "<";
        case CmpOp::Le: return "<=";
        case CmpOp::Gt: return ">";
        case CmpOp::Ge: return ">=";
        case CmpOp::Eq: return "=";
        case CmpOp::Ne: return "!=";
    }
    return "?";
}

bool is_reference_lexeme(const std::string& name) {
    if (name.empty()) return false;
    bool has_upper = false;
    for (unsigned char c : name) {
        if (std::isupper(c)) has_upper = true;
        else if (!std::isdigit(c) && c != '_') return false;
    }
    return has_upper;
}

BoolExpr atom_expr(Atom a) {
    auto n = std::make_shared<BoolNode>();
    n->kind = BoolKind::AtomNode;
    n->atom = std::move(a);
    return n;
}

BoolExpr bool_var(std::string name) {
    Atom a;
    a.kind = is_reference_lexeme(name) ? AtomKind::Reference : AtomKind::BooleanVar;
    a.name = std::move(name);
    return atom_expr(std::move(a));
}

BoolExpr reference(std::string id) {
    Atom a;
    a.kind = AtomKind::Reference;
    a.name = std::move(id);
    return atom_expr(std::move(a));
}

BoolExpr comparison(ArithExpr lhs, CmpOp op, ArithExpr rhs) {
    Atom a;
    a.kind = AtomKind::Comparison;
    a.lhs = std::move(lhs);
    a.rhs = std::move(rhs);
    a.op = op;
    return atom_expr(std::move(a));
}

BoolExpr bnot(BoolExpr e) {
    auto n = std::make_shared<BoolNode>();
    n->kind = BoolKind::Not;
    n->lhs = std::move(e);
    return n;
}

BoolExpr band(BoolExpr l, BoolExpr r) {
    auto n = std::make_shared<BoolNode>();
    n->kind = BoolKind::And;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
}

BoolExpr bor(BoolExpr l, BoolExpr r) {
    auto n = std::make_shared<BoolNode>();
    n->kind = BoolKind::Or;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
}

const char* field_kind_name(FieldKind f) {
    switch (f) {
        case FieldKind::WhenClause: return "when";
        case FieldKind::IfClause: return "if";
        case FieldKind::Timing: return "until";
        case FieldKind::Response: return "response";
    }
    return "?";
}

BoolExpr field_expr(const Requirement& r, FieldKind field) {
    switch (field) {
        case FieldKind::WhenClause: return r.condition.when_clause;
        case FieldKind::IfClause: return r.condition.if_clause;
        case FieldKind::Timing: return r.timing ? r.timing->stop : nullptr;
        case FieldKind::Response: return r.response;
    }
    return nullptr;
}

Requirement with_field(const Requirement& r, FieldKind field, BoolExpr e) {
    Requirement out = r;
    switch (field) {
        case FieldKind::WhenClause: out.condition.when_clause = std::move(e); break;
        case FieldKind::IfClause: out.condition.if_clause = std::move(e); break;
        case FieldKind::Timing:
            if (e == nullptr) out.timing.reset();
            else out.timing = Timing{TimingKind::Until, std::move(e)};
            break;
        case FieldKind::Response: out.response = std::move(e); break;
    }
    return out;
}

std::vector<FieldKind> present_fields(const Requirement& r) {
    std::vector<FieldKind> out;
    if (r.condition.when_clause) out.push_back(FieldKind::WhenClause);
    if (r.condition.if_clause) out.push_back(FieldKind::IfClause);
    if (r.timing) out.push_back(FieldKind::Timing);
    if (r.response) out.push_back(FieldKind::Response);
    return out;
}

}  // namespace retune
