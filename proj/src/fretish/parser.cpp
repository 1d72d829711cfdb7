#include "retune/fretish/parser.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace retune {

namespace {

enum class Tok {
    Ident, Number, LParen, RParen, Comma,
    Lt, Le, Gt, Ge, Eq, Ne,
    Bang, Amp, Pipe, Arrow, Plus, Minus,
    KwWhen, KwIf, KwShall, KwUntil, KwNull,
    End
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Ident: return "identifier";
        case Tok::Number: return "number";
        case Tok::LParen: return "(";
        case Tok::RParen: return ")";
        case Tok::Comma: return ",";
        case Tok::Lt: return "<";
        case Tok::Le: return "<=";
        case Tok::Gt: return ">";
        case Tok::Ge: return ">=";
        case Tok::Eq: return "=";
        case Tok::Ne: return "!=";
        case Tok::Bang: return "!";
        case Tok::Amp: return "&";
        case Tok::Pipe: return "|";
        case Tok::Arrow: return "=>";
        case Tok::Plus: return "+";
        case Tok::Minus: return "-";
        case Tok::KwWhen: return "when";
        case Tok::KwIf: return "if";
        case Tok::KwShall: return "shall";
        case Tok::KwUntil: return "until";
        case Tok::KwNull: return "null";
        case Tok::End: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

std::string format_error(const std::string& msg, int line, int col,
                         const std::vector<std::string>& expected) {
    std::ostringstream os;
    os << line << ":" << col << ": " << msg;
    if (!expected.empty()) {
        os << " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) os << (i + 1 == expected.size() ? " or " : ", ");
            os << expected[i];
        }
        os << ")";
    }
    return os.str();
}

class Lexer {
public:
    explicit Lexer(const std::string& text) : src_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            int line = line_, col = col_;
            if (pos_ >= src_.size()) {
                out.push_back({Tok::End, "", line, col});
                return out;
            }
            char c = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string word;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                        src_[pos_] == '_'))
                    word += advance();
                Tok kind = Tok::Ident;
                if (word == "when") kind = Tok::KwWhen;
                else if (word == "if") kind = Tok::KwIf;
                else if (word == "shall") kind = Tok::KwShall;
                else if (word == "until") kind = Tok::KwUntil;
                else if (word == "null") kind = Tok::KwNull;
                out.push_back({kind, word, line, col});
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string n;
                while (pos_ < src_.size() &&
                       std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    n += advance();
                if (pos_ + 1 < src_.size() && src_[pos_] == '.' &&
                    std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
                    n += advance();
                    while (pos_ < src_.size() &&
                           std::isdigit(static_cast<unsigned char>(src_[pos_])))
                        n += advance();
                }
                out.push_back({Tok::Number, n, line, col});
                continue;
            }
            switch (c) {
                case '(': advance(); out.push_back({Tok::LParen, "(", line, col}); continue;
                case ')': advance(); out.push_back({Tok::RParen, ")", line, col}); continue;
                case ',': advance(); out.push_back({Tok::Comma, ",", line, col}); continue;
                case '&': advance(); out.push_back({Tok::Amp, "&", line, col}); continue;
                case '|': advance(); out.push_back({Tok::Pipe, "|", line, col}); continue;
                case '+': advance(); out.push_back({Tok::Plus, "+", line, col}); continue;
                case '-': advance(); out.push_back({Tok::Minus, "-", line, col}); continue;
                case '<':
                    advance();
                    if (peek() == '=') { advance(); out.push_back({Tok::Le, "<=", line, col}); }
                    else out.push_back({Tok::Lt, "<", line, col});
                    continue;
                case '>':
                    advance();
                    if (peek() == '=') { advance(); out.push_back({Tok::Ge, ">=", line, col}); }
                    else out.push_back({Tok::Gt, ">", line, col});
                    continue;
                case '=':
                    advance();
                    if (peek() == '>') { advance(); out.push_back({Tok::Arrow, "=>", line, col}); }
                    else if (peek() == '=') { advance(); out.push_back({Tok::Eq, "=", line, col}); }
                    else out.push_back({Tok::Eq, "=", line, col});
                    continue;
                case '!':
                    advance();
                    if (peek() == '=') { advance(); out.push_back({Tok::Ne, "!=", line, col}); }
                    else out.push_back({Tok::Bang, "!", line, col});
                    continue;
                default:
                    throw ParseError("unexpected character '" + std::string(1, c) + "'",
                                     line, col, {});
            }
        }
    }

private:
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    char advance() {
        char c = src_[pos_++];
        if (c == '\n') { ++line_; col_ = 1; }
        else ++col_;
        return c;
    }

    void skip_space() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            advance();
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Requirement requirement() {
        Requirement r;
        std::vector<BoolExpr> clauses;
        while (clauses.size() < 2 && (at(Tok::KwWhen) || at(Tok::KwIf))) {
            next();
            expect(Tok::LParen);
            clauses.push_back(expr());
            expect(Tok::RParen);
        }
        if (clauses.size() == 1) {
            r.condition.if_clause = clauses[0];
        } else if (clauses.size() == 2) {
            r.condition.when_clause = clauses[0];
            r.condition.if_clause = clauses[1];
        }
        if (!at(Tok::Ident))
            fail("expected component name", {"identifier"});
        r.component = next().text;
        expect(Tok::KwShall);
        if (at(Tok::KwUntil)) {
            next();
            expect(Tok::LParen);
            r.timing = Timing{TimingKind::Until, expr()};
            expect(Tok::RParen);
        }
        if (at(Tok::End))
            fail("empty response", {"expression"});
        r.response = expr();
        if (!at(Tok::End))
            fail("trailing input after response", {"end of input"});
        return r;
    }

    BoolExpr bare_expr() {
        BoolExpr e = expr();
        if (!at(Tok::End))
            fail("trailing input after expression", {"end of input"});
        return e;
    }

private:
    // expr     = or_expr [ "=>" expr ]         (desugars to !a | b)
    // or_expr  = and_expr { "|" and_expr }
    // and_expr = unary { "&" unary }
    BoolExpr expr() {
        BoolExpr lhs = or_expr();
        if (at(Tok::Arrow)) {
            next();
            return bor(bnot(lhs), expr());
        }
        return lhs;
    }

    BoolExpr or_expr() {
        BoolExpr e = and_expr();
        while (at(Tok::Pipe)) {
            next();
            e = bor(e, and_expr());
        }
        return e;
    }

    BoolExpr and_expr() {
        BoolExpr e = unary();
        while (at(Tok::Amp)) {
            next();
            e = band(e, unary());
        }
        return e;
    }

    BoolExpr unary() {
        if (at(Tok::Bang)) {
            next();
            return bnot(unary());
        }
        if (at(Tok::LParen)) {
            next();
            BoolExpr e = expr();
            expect(Tok::RParen);
            return e;
        }
        return atom();
    }

    // An identifier alone is a boolean variable (or a Reference when written
    // in block capitals); anything arithmetic must form a comparison.
    BoolExpr atom() {
        if (at(Tok::Ident) && !arith_follows())
            return bool_var(next().text);
        if (!at(Tok::Ident) && !at(Tok::Number) && !at(Tok::KwNull))
            fail("expected expression",
                 {"identifier", "number", "null", "(", "!"});
        ArithExpr lhs = arith_expr();
        CmpOp op = cmp_op();
        ArithExpr rhs = arith_expr();
        return comparison(std::move(lhs), op, std::move(rhs));
    }

    bool arith_follows() const {
        Tok t = toks_[pos_ + 1].kind;
        return t == Tok::LParen || t == Tok::Plus || t == Tok::Minus ||
               t == Tok::Lt || t == Tok::Le || t == Tok::Gt || t == Tok::Ge ||
               t == Tok::Eq || t == Tok::Ne;
    }

    CmpOp cmp_op() {
        switch (cur().kind) {
            case Tok::Lt: next(); return CmpOp::Lt;
            case Tok::Le: next(); return CmpOp::Le;
            case Tok::Gt: next(); return CmpOp::Gt;
            case Tok::Ge: next(); return CmpOp::Ge;
            case Tok::Eq: next(); return CmpOp::Eq;
            case Tok::Ne: next(); return CmpOp::Ne;
            default:
                fail("expected comparison operator",
                     {"<", "<=", ">", ">=", "=", "!="});
        }
        return CmpOp::Eq;  // unreachable
    }

    // arith_expr = arith_term { ("+" | "-") arith_term }   (left-assoc; no
    // parenthesised arithmetic groups — '(' after an identifier is a call)
    ArithExpr arith_expr() {
        ArithExpr e = arith_term();
        while (at(Tok::Plus) || at(Tok::Minus)) {
            char op = next().kind == Tok::Plus ? '+' : '-';
            e = arith_bin(op, e, arith_term());
        }
        return e;
    }

    ArithExpr arith_term() {
        if (at(Tok::Number)) return num(next().text);
        if (at(Tok::KwNull)) { next(); return null_lit(); }
        if (!at(Tok::Ident))
            fail("expected arithmetic term", {"identifier", "number", "null"});
        std::string name = next().text;
        if (!at(Tok::LParen)) return var(std::move(name));
        next();
        std::vector<ArithExpr> args;
        args.push_back(arith_expr());
        while (at(Tok::Comma)) {
            next();
            args.push_back(arith_expr());
        }
        expect(Tok::RParen);
        return func(std::move(name), std::move(args));
    }

    const Token& cur() const { return toks_[pos_]; }
    bool at(Tok t) const { return cur().kind == t; }
    Token next() { return toks_[pos_++]; }

    void expect(Tok t) {
        if (!at(t)) fail("unexpected token", {tok_name(t)});
        next();
    }

    [[noreturn]] void fail(const std::string& msg,
                           std::vector<std::string> expected) {
        const Token& t = cur();
        std::string full = msg;
        if (t.kind != Tok::End) full += " at '" + t.text + "'";
        throw ParseError(full, t.line, t.col, std::move(expected));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::string msg, int line_, int col_,
                       std::vector<std::string> expected_)
    : std::runtime_error(format_error(msg, line_, col_, expected_)),
      line(line_), col(col_), expected(std::move(expected_)) {}

Requirement parse_requirement(const std::string& text) {
    return Parser(Lexer(text).run()).requirement();
}

BoolExpr parse_bool_expr(const std::string& text) {
    return Parser(Lexer(text).run()).bare_expr();
}

}  // namespace retune
