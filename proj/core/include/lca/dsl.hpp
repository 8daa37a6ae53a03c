/*
 * dsl.hpp
 * -------
 * The `.lsca` source format: a small text language for defining conformal
 * algebras by their lambda-bracket tables, so structures beyond the
 * built-in catalog can be checked.
 *
 *   # The rank-2 Lie algebra with parameters a, b.
 *   algebra wab : lie {
 *     params a, b;
 *     generators L, W;
 *     bracket {
 *       [L _ L] = (del + 2*lam) * L;
 *       [L _ W] = (del + a*lam + b) * W;
 *       [W _ L] = ((a - 1)*del + a*lam - b) * W;
 *       default zero;
 *     }
 *   }
 *
 * `del` and `lam` are reserved for the formal variables; `_` marks the
 * lambda slot of a bracket pair. Expressions use rationals `p/q`,
 * parentheses, and the operators + - * ^ with precedence
 * ^ > unary- > * > (+, -). Comments run from `#` to end of line.
 */
#pragma once

#include "lca/conformal.hpp"
#include "lca/errors.hpp"

#include <memory>
#include <string>
#include <vector>

namespace lca {

/// 1-based position of a token or construct in source text. Columns count
/// bytes from the start of the line.
struct SourceSpan {
    int line = 1;
    int column = 1;
    int length = 0;
};

/// Lexical, syntactic, or semantic error in `.lsca` input. The message
/// quotes the offending source text; `expected` lists the token kinds the
/// parser would have accepted (empty for lexical/semantic errors).
class ParseError : public Error {
public:
    ParseError(SourceSpan span, const std::string& message,
               std::vector<std::string> expected = {});

    const SourceSpan& span() const { return span_; }
    const std::string& message() const { return message_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    static std::string render(const SourceSpan& span,
                              const std::string& message,
                              const std::vector<std::string>& expected);

    SourceSpan span_;
    std::string message_;
    std::vector<std::string> expected_;
};

// ---------------------------------------------------------------------------
// Tokens
// ---------------------------------------------------------------------------

enum class TokenKind {
    Identifier,
    Keyword,
    Integer,
    RationalLit,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Semicolon,
    Colon,
    Equals,
    Underscore,
    EndOfInput,
};

/// Human-readable name used in expected-token sets, e.g. "';'",
/// "identifier".
std::string token_kind_name(TokenKind kind);

struct Token {
    TokenKind kind = TokenKind::EndOfInput;
    std::string text;      // verbatim source text of the token
    Rational value;        // for Integer / RationalLit
    SourceSpan span;
};

/// Split source text into tokens (keywords recognized; comments and
/// whitespace skipped; a trailing EndOfInput token is appended). Throws
/// ParseError on an illegal character or malformed literal.
std::vector<Token> tokenize(const std::string& text);

// ---------------------------------------------------------------------------
// Syntax tree
// ---------------------------------------------------------------------------

/// Arithmetic expression over rationals, `del`, `lam`, parameters, and
/// generator names.
struct Expr {
    enum class Kind { Number, Ident, Neg, Add, Sub, Mul, Pow };

    Kind kind = Kind::Number;
    SourceSpan span;
    Rational number;                     // Number
    std::string name;                    // Ident
    std::unique_ptr<Expr> lhs, rhs;      // children (Neg and Pow use lhs)
    long exponent = 0;                   // Pow
    SourceSpan exponent_span;            // Pow
};

struct ParamDef {
    std::string name;
    bool nonzero = false;
    SourceSpan span;
};

struct GeneratorDef {
    std::string name;
    SourceSpan span;
};

struct BracketClause {
    std::string lhs; // generator in the lambda slot
    std::string rhs;
    SourceSpan span;
    std::unique_ptr<Expr> value;
};

struct AlgebraDef {
    std::string name;
    SourceSpan name_span;
    AlgebraKind kind = AlgebraKind::Lie;
    std::vector<ParamDef> params;
    std::vector<GeneratorDef> generators;
    std::vector<BracketClause> clauses;
    bool default_zero = false;
};

/// Structural equality ignoring source spans.
bool algebra_def_equal(const AlgebraDef& a, const AlgebraDef& b);

/// Parse a full `.lsca` file into an AST. Beyond syntax, this checks the
/// declaration-level invariants: unique names, no reserved-name clashes,
/// declared generators in bracket pairs, declared names in expressions,
/// no duplicate pairs, and full pair coverage unless `default zero;` is
/// present. Throws ParseError.
AlgebraDef parse_algebra(const std::string& text);

/// Fold the expression ASTs into table entries and build the algebra.
/// Expressions must be linear in the generators; exponents must be
/// nonnegative and cannot apply to generators. Throws ParseError.
ConformalAlgebra elaborate(const AlgebraDef& def);

/// parse_algebra + elaborate.
ConformalAlgebra parse_and_elaborate(const std::string& text);

/// Render an algebra back to `.lsca` source. Deterministic and canonical:
/// printing the elaboration of printed output reproduces it byte for
/// byte. Every table coefficient must be a polynomial in the parameters
/// (no fractions); throws Error otherwise.
std::string print_algebra(const ConformalAlgebra& A);

} // namespace lca
