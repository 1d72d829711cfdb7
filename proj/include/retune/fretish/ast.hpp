// fretish/ast.hpp — AST for the FRETISH subset: arithmetic terms, boolean
// expressions, and whole requirements.
//
// All nodes are immutable and shared; expressions are plain trees (no
// interning).  Structural identity is decided by canonical rendering
// (see printer.hpp), which is injective on these trees.

#ifndef RETUNE_FRETISH_AST_HPP
#define RETUNE_FRETISH_AST_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace retune {

// ── Arithmetic terms ────────────────────────────────────────────────────────

enum class ArithKind { NumLiteral, NullLiteral, Var, FuncApp, BinOp };

struct ArithNode;
using ArithExpr = std::shared_ptr<const ArithNode>;

struct ArithNode {
    ArithKind kind{};
    std::string text;              // lexeme for NumLiteral, name for Var/FuncApp
    char op{};                     // '+' or '-' for BinOp
    std::vector<ArithExpr> args;   // FuncApp arguments (arity >= 1)
    ArithExpr lhs, rhs;            // BinOp operands
};

ArithExpr num(std::string lexeme);
ArithExpr null_lit();
ArithExpr var(std::string name);
ArithExpr func(std::string name, std::vector<ArithExpr> args);
ArithExpr arith_bin(char op, ArithExpr lhs, ArithExpr rhs);

// ── Atoms ───────────────────────────────────────────────────────────────────

enum class AtomKind { BooleanVar, Comparison, Reference };

enum class CmpOp { Lt, Le, Gt, Ge, Eq, Ne };

const char* cmp_op_text(CmpOp op);

// A boolean-position atom.  All-uppercase identifiers (letters, digits,
// underscores) are References to other requirements; any other identifier is
// a plain boolean variable.
struct Atom {
    AtomKind kind{};
    std::string name;    // BooleanVar / Reference
    ArithExpr lhs, rhs;  // Comparison operands
    CmpOp op{};
};

bool is_reference_lexeme(const std::string& name);

// ── Boolean expressions ─────────────────────────────────────────────────────

enum class BoolKind { AtomNode, Not, And, Or };

struct BoolNode;
using BoolExpr = std::shared_ptr<const BoolNode>;

struct BoolNode {
    BoolKind kind{};
    Atom atom;           // AtomNode
    BoolExpr lhs, rhs;   // Not uses lhs only
};

BoolExpr atom_expr(Atom a);
BoolExpr bool_var(std::string name);   // dispatches to Reference when all-caps
BoolExpr reference(std::string id);
BoolExpr comparison(ArithExpr lhs, CmpOp op, ArithExpr rhs);
BoolExpr bnot(BoolExpr e);
BoolExpr band(BoolExpr l, BoolExpr r);
BoolExpr bor(BoolExpr l, BoolExpr r);

// ── Requirements ────────────────────────────────────────────────────────────

enum class TimingKind { Until };

struct Timing {
    TimingKind kind = TimingKind::Until;
    BoolExpr stop;
};

struct Condition {
    BoolExpr when_clause;  // null when absent
    BoolExpr if_clause;    // null when absent
};

// One FRETISH requirement.  `scope` is reserved but always empty: scoped
// requirements are rejected at parse time.
struct Requirement {
    std::string id;
    std::vector<std::string> parent_ids;
    std::vector<std::string> depends_ids;
    std::optional<std::string> scope;
    Condition condition;
    std::string component;
    std::optional<Timing> timing;
    BoolExpr response;
    std::string rationale;

    bool has_condition() const {
        return condition.when_clause != nullptr || condition.if_clause != nullptr;
    }
};

// The four expression-bearing fields of a requirement.
enum class FieldKind { WhenClause, IfClause, Timing, Response };

const char* field_kind_name(FieldKind f);

// Returns the expression stored in `field`, or null when the field is absent.
BoolExpr field_expr(const Requirement& r, FieldKind field);

// Returns a copy of `r` with `field` replaced by `e` (null clears an optional
// field; clearing the response is rejected by the caller's validation).
Requirement with_field(const Requirement& r, FieldKind field, BoolExpr e);

// All present fields in grammar order (when, if, timing, response).
std::vector<FieldKind> present_fields(const Requirement& r);

}  // namespace retune

#endif
