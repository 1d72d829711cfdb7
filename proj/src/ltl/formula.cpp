#include "retune/ltl/formula.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>
#include <utility>

namespace retune {

namespace ltl {

namespace {

LtlFormula node0(LtlKind k) {
    auto n = std::make_shared<LtlNode>();
    n->kind = k;
    return n;
}

LtlFormula node1(LtlKind k, LtlFormula a) {
    auto n = std::make_shared<LtlNode>();
    n->kind = k;
    n->lhs = std::move(a);
    return n;
}

LtlFormula node2(LtlKind k, LtlFormula a, LtlFormula b) {
    auto n = std::make_shared<LtlNode>();
    n->kind = k;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

}  // namespace

LtlFormula top() { return node0(LtlKind::True); }
LtlFormula bottom() { return node0(LtlKind::False); }

LtlFormula prop(std::string name) {
    auto n = std::make_shared<LtlNode>();
    n->kind = LtlKind::Prop;
    n->prop = std::move(name);
    return n;
}

LtlFormula lnot(LtlFormula a) { return node1(LtlKind::Not, std::move(a)); }
LtlFormula land(LtlFormula a, LtlFormula b) { return node2(LtlKind::And, std::move(a), std::move(b)); }
LtlFormula lor(LtlFormula a, LtlFormula b) { return node2(LtlKind::Or, std::move(a), std::move(b)); }
LtlFormula implies(LtlFormula a, LtlFormula b) { return node2(LtlKind::Implies, std::move(a), std::move(b)); }
LtlFormula next(LtlFormula a) { return node1(LtlKind::Next, std::move(a)); }
LtlFormula until(LtlFormula a, LtlFormula b) { return node2(LtlKind::Until, std::move(a), std::move(b)); }
LtlFormula weak_until(LtlFormula a, LtlFormula b) { return node2(LtlKind::WeakUntil, std::move(a), std::move(b)); }
LtlFormula release(LtlFormula a, LtlFormula b) { return node2(LtlKind::Release, std::move(a), std::move(b)); }
LtlFormula globally(LtlFormula a) { return node1(LtlKind::Globally, std::move(a)); }
LtlFormula finally_(LtlFormula a) { return node1(LtlKind::Finally, std::move(a)); }

}  // namespace ltl

bool ltl_equal(const LtlFormula& a, const LtlFormula& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->prop != b->prop) return false;
    return ltl_equal(a->lhs, b->lhs) && ltl_equal(a->rhs, b->rhs);
}

std::size_t ltl_size(const LtlFormula& f) {
    if (!f) return 0;
    return 1 + ltl_size(f->lhs) + ltl_size(f->rhs);
}

namespace {

void props_into(const LtlFormula& f, std::set<std::string>& out) {
    if (!f) return;
    if (f->kind == LtlKind::Prop) out.insert(f->prop);
    props_into(f->lhs, out);
    props_into(f->rhs, out);
}

}  // namespace

std::set<std::string> ltl_props(const LtlFormula& f) {
    std::set<std::string> out;
    props_into(f, out);
    return out;
}

namespace {

LtlFormula nnf_pos(const LtlFormula& f);
LtlFormula nnf_neg(const LtlFormula& f);

LtlFormula nnf_pos(const LtlFormula& f) {
    using namespace ltl;
    switch (f->kind) {
        case LtlKind::True:
        case LtlKind::False:
        case LtlKind::Prop: return f;
        case LtlKind::Not: return nnf_neg(f->lhs);
        case LtlKind::And: return land(nnf_pos(f->lhs), nnf_pos(f->rhs));
        case LtlKind::Or: return lor(nnf_pos(f->lhs), nnf_pos(f->rhs));
        case LtlKind::Implies: return lor(nnf_neg(f->lhs), nnf_pos(f->rhs));
        case LtlKind::Next: return next(nnf_pos(f->lhs));
        case LtlKind::Until: return until(nnf_pos(f->lhs), nnf_pos(f->rhs));
        case LtlKind::WeakUntil: return weak_until(nnf_pos(f->lhs), nnf_pos(f->rhs));
        case LtlKind::Release: return release(nnf_pos(f->lhs), nnf_pos(f->rhs));
        case LtlKind::Globally: return globally(nnf_pos(f->lhs));
        case LtlKind::Finally: return finally_(nnf_pos(f->lhs));
    }
    return f;
}

LtlFormula nnf_neg(const LtlFormula& f) {
    using namespace ltl;
    switch (f->kind) {
        case LtlKind::True: return bottom();
        case LtlKind::False: return top();
        case LtlKind::Prop: return lnot(f);
        case LtlKind::Not: return nnf_pos(f->lhs);
        case LtlKind::And: return lor(nnf_neg(f->lhs), nnf_neg(f->rhs));
        case LtlKind::Or: return land(nnf_neg(f->lhs), nnf_neg(f->rhs));
        case LtlKind::Implies: return land(nnf_pos(f->lhs), nnf_neg(f->rhs));
        case LtlKind::Next: return next(nnf_neg(f->lhs));
        // !(a U b) = !a R !b ; !(a R b) = !a U !b
        case LtlKind::Until: return release(nnf_neg(f->lhs), nnf_neg(f->rhs));
        case LtlKind::Release: return until(nnf_neg(f->lhs), nnf_neg(f->rhs));
        // !(a W b) = !b U (!a & !b)
        case LtlKind::WeakUntil:
            return until(nnf_neg(f->rhs), land(nnf_neg(f->lhs), nnf_neg(f->rhs)));
        case LtlKind::Globally: return finally_(nnf_neg(f->lhs));
        case LtlKind::Finally: return globally(nnf_neg(f->lhs));
    }
    return f;
}

}  // namespace

LtlFormula to_nnf(const LtlFormula& f) { return nnf_pos(f); }

LtlFormula to_core(const LtlFormula& f) {
    using namespace ltl;
    LtlFormula g = to_nnf(f);
    std::function<LtlFormula(const LtlFormula&)> rw =
        [&](const LtlFormula& e) -> LtlFormula {
        switch (e->kind) {
            case LtlKind::True:
            case LtlKind::False:
            case LtlKind::Prop: return e;
            case LtlKind::Not: return e;  // literal in NNF
            case LtlKind::And: return land(rw(e->lhs), rw(e->rhs));
            case LtlKind::Or: return lor(rw(e->lhs), rw(e->rhs));
            case LtlKind::Next: return next(rw(e->lhs));
            case LtlKind::Until: return until(rw(e->lhs), rw(e->rhs));
            case LtlKind::Release: return release(rw(e->lhs), rw(e->rhs));
            case LtlKind::Globally: return release(bottom(), rw(e->lhs));
            case LtlKind::Finally: return until(top(), rw(e->lhs));
            case LtlKind::WeakUntil: {
                LtlFormula a = rw(e->lhs), b = rw(e->rhs);
                return release(b, lor(a, b));
            }
            case LtlKind::Implies: break;  // eliminated by NNF
        }
        throw std::logic_error("to_core: non-NNF node");
    };
    return rw(g);
}

LtlFormula substitute_prop(const LtlFormula& f, const std::string& name,
                           const LtlFormula& replacement) {
    using namespace ltl;
    if (!f) return f;
    if (f->kind == LtlKind::Prop) return f->prop == name ? replacement : f;
    auto n = std::make_shared<LtlNode>(*f);
    n->lhs = substitute_prop(f->lhs, name, replacement);
    n->rhs = substitute_prop(f->rhs, name, replacement);
    return n;
}

LtlFormula rename_prop(const LtlFormula& f, const std::string& from,
                       const std::string& to) {
    return substitute_prop(f, from, ltl::prop(to));
}

// ── printing ────────────────────────────────────────────────────────────────

namespace {

// precedence: -> 0, | 1, & 2, U/W/R 3, unary/atoms 4
int prec(const LtlNode& n) {
    switch (n.kind) {
        case LtlKind::Implies: return 0;
        case LtlKind::Or: return 1;
        case LtlKind::And: return 2;
        case LtlKind::Until:
        case LtlKind::WeakUntil: return 3;
        case LtlKind::Release: return n.lhs->kind == LtlKind::False ? 4 : 3;
        default: return 4;
    }
}

std::string print(const LtlFormula& f, int min_prec);

std::string print_unary(const char* op, const LtlFormula& sub, bool tight) {
    if (prec(*sub) >= 4)
        return std::string(op) + (tight ? "" : " ") + print(sub, 0);
    return std::string(op) + (tight ? "(" : " (") + print(sub, 0) + ")";
}

std::string print(const LtlFormula& f, int min_prec) {
    const LtlNode& n = *f;
    std::string out;
    int p = prec(n);
    switch (n.kind) {
        case LtlKind::True: return "true";
        case LtlKind::False: return "false";
        case LtlKind::Prop: return n.prop;
        case LtlKind::Not: return print_unary("!", n.lhs, true);
        case LtlKind::Next: return print_unary("X", n.lhs, false);
        case LtlKind::Globally: return print_unary("G", n.lhs, false);
        case LtlKind::Finally: return print_unary("F", n.lhs, false);
        case LtlKind::Implies:  // right-assoc
            out = print(n.lhs, 1) + " -> " + print(n.rhs, 0);
            break;
        case LtlKind::Or:  // assoc: flatten left
            out = print(n.lhs, 1) + " | " + print(n.rhs, 2);
            break;
        case LtlKind::And:
            out = print(n.lhs, 2) + " & " + print(n.rhs, 3);
            break;
        case LtlKind::Until:
            out = print(n.lhs, 4) + " U " + print(n.rhs, 3);
            break;
        case LtlKind::WeakUntil:
            out = print(n.lhs, 4) + " W " + print(n.rhs, 3);
            break;
        case LtlKind::Release:
            if (n.lhs->kind == LtlKind::False) return print_unary("G", n.rhs, false);
            out = print(n.lhs, 4) + " R " + print(n.rhs, 3);
            break;
    }
    if (p < min_prec) return "(" + out + ")";
    return out;
}

}  // namespace

std::string ltl_to_string(const LtlFormula& f) { return print(f, 0); }

// ── text parser ─────────────────────────────────────────────────────────────

namespace {

struct LtlParser {
    explicit LtlParser(const std::string& s) : src(s) {}

    LtlFormula parse() {
        LtlFormula f = impl();
        skip();
        if (pos != src.size())
            throw std::runtime_error("ltl: trailing input at offset " +
                                     std::to_string(pos));
        return f;
    }

    LtlFormula impl() {
        LtlFormula l = or_e();
        skip();
        if (match("->")) return ltl::implies(l, impl());
        return l;
    }

    LtlFormula or_e() {
        LtlFormula e = and_e();
        for (;;) {
            skip();
            if (pos < src.size() && src[pos] == '|') { ++pos; e = ltl::lor(e, and_e()); }
            else return e;
        }
    }

    LtlFormula and_e() {
        LtlFormula e = until_e();
        for (;;) {
            skip();
            if (pos < src.size() && src[pos] == '&') { ++pos; e = ltl::land(e, until_e()); }
            else return e;
        }
    }

    LtlFormula until_e() {
        LtlFormula l = unary_e();
        skip();
        if (match_word("U")) return ltl::until(l, until_e());
        if (match_word("W")) return ltl::weak_until(l, until_e());
        if (match_word("R")) return ltl::release(l, until_e());
        return l;
    }

    LtlFormula unary_e() {
        skip();
        if (pos >= src.size()) throw std::runtime_error("ltl: unexpected end of input");
        if (src[pos] == '!') { ++pos; return ltl::lnot(unary_e()); }
        if (match_word("G")) return ltl::globally(unary_e());
        if (match_word("F")) return ltl::finally_(unary_e());
        if (match_word("X")) return ltl::next(unary_e());
        if (src[pos] == '(') {
            ++pos;
            LtlFormula e = impl();
            skip();
            if (pos >= src.size() || src[pos] != ')')
                throw std::runtime_error("ltl: expected ')'");
            ++pos;
            return e;
        }
        std::string word = ident();
        if (word.empty())
            throw std::runtime_error("ltl: expected proposition at offset " +
                                     std::to_string(pos));
        if (word == "true") return ltl::top();
        if (word == "false") return ltl::bottom();
        return ltl::prop(word);
    }

    void skip() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
            ++pos;
    }

    bool match(const char* s) {
        skip();
        std::size_t n = std::string(s).size();
        if (src.compare(pos, n, s) == 0) { pos += n; return true; }
        return false;
    }

    // Operator letters are only operators when they stand alone.
    bool match_word(const char* s) {
        skip();
        std::size_t n = std::string(s).size();
        if (src.compare(pos, n, s) != 0) return false;
        std::size_t end = pos + n;
        if (end < src.size() &&
            (std::isalnum(static_cast<unsigned char>(src[end])) || src[end] == '_'))
            return false;
        pos = end;
        return true;
    }

    std::string ident() {
        skip();
        std::string out;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
            out += src[pos++];
        }
        if (out == "U" || out == "W" || out == "R" || out == "G" || out == "F" ||
            out == "X")
            throw std::runtime_error("ltl: operator '" + out + "' used as proposition");
        return out;
    }

    const std::string& src;
    std::size_t pos = 0;
};

}  // namespace

LtlFormula parse_ltl(const std::string& text) { return LtlParser(text).parse(); }

}  // namespace retune
