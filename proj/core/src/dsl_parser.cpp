/*
 * dsl_parser.cpp
 * --------------
 * LL(1) recursive-descent parser for the `.lsca` grammar:
 *
 *   file       := algebra EOF
 *   algebra    := "algebra" IDENT ":" ("lie" | "lsc" | "raw") "{" section* "}"
 *   section    := "params" param ("," param)* ";"
 *               | "generators" IDENT ("," IDENT)* ";"
 *               | "bracket" "{" clause* "}"
 *   param      := IDENT ["nonzero"]
 *   clause     := "[" IDENT "_" IDENT "]" "=" expr ";"
 *               | "default" "zero" ";"
 *   expr       := term (("+" | "-") term)*
 *   term       := factor ("*" factor)*
 *   factor     := "-" factor | power
 *   power      := atom ["^" ["-"] INT]
 *   atom       := INT | RATIONAL | IDENT | "(" expr ")"
 *
 * Declaration-level semantic checks run after the syntax pass so every
 * error carries the span of the offending name.
 */
#include "lca/dsl.hpp"

#include <algorithm>
#include <set>

namespace lca {

namespace {

bool is_reserved_name(const std::string& name) {
    return name == "del" || name == "lam" || name == "mu" || name == "nu";
}

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

    AlgebraDef parse_file() {
        AlgebraDef def = parse_algebra_block();
        expect(TokenKind::EndOfInput);
        validate(def);
        return def;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    const Token& advance() { return tokens_[pos_++]; }

    bool at_keyword(const char* word) const {
        return peek().kind == TokenKind::Keyword && peek().text == word;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& tok = peek();
        const std::string got = tok.kind == TokenKind::EndOfInput
                                    ? "end of input"
                                    : "'" + tok.text + "'";
        throw ParseError(tok.span, "unexpected " + got, std::move(expected));
    }

    const Token& expect(TokenKind kind) {
        if (peek().kind != kind) fail({token_kind_name(kind)});
        return advance();
    }

    const Token& expect_keyword(const char* word) {
        if (!at_keyword(word)) fail({"'" + std::string(word) + "'"});
        return advance();
    }

    AlgebraDef parse_algebra_block() {
        AlgebraDef def;
        expect_keyword("algebra");
        const Token& name = expect(TokenKind::Identifier);
        def.name = name.text;
        def.name_span = name.span;
        expect(TokenKind::Colon);
        if (at_keyword("lie")) {
            def.kind = AlgebraKind::Lie;
            advance();
        } else if (at_keyword("lsc")) {
            def.kind = AlgebraKind::LeftSymmetric;
            advance();
        } else if (at_keyword("raw")) {
            def.kind = AlgebraKind::Raw;
            advance();
        } else {
            fail({"'lie'", "'lsc'", "'raw'"});
        }
        expect(TokenKind::LBrace);

        bool have_params = false, have_generators = false,
             have_bracket = false;
        while (peek().kind != TokenKind::RBrace) {
            if (at_keyword("params")) {
                if (have_params) {
                    throw ParseError(peek().span,
                                     "duplicate 'params' section");
                }
                have_params = true;
                parse_params(def);
            } else if (at_keyword("generators")) {
                if (have_generators) {
                    throw ParseError(peek().span,
                                     "duplicate 'generators' section");
                }
                have_generators = true;
                parse_generators(def);
            } else if (at_keyword("bracket")) {
                if (have_bracket) {
                    throw ParseError(peek().span,
                                     "duplicate 'bracket' section");
                }
                have_bracket = true;
                bracket_span_ = peek().span;
                parse_bracket(def);
            } else {
                fail({"'params'", "'generators'", "'bracket'", "'}'"});
            }
        }
        advance(); // '}'

        if (!have_generators) {
            throw ParseError(def.name_span, "algebra '" + def.name +
                                                "' has no generators section");
        }
        if (!have_bracket) {
            throw ParseError(def.name_span, "algebra '" + def.name +
                                                "' has no bracket section");
        }
        return def;
    }

    void parse_params(AlgebraDef& def) {
        advance(); // 'params'
        while (true) {
            const Token& name = expect(TokenKind::Identifier);
            ParamDef p;
            p.name = name.text;
            p.span = name.span;
            if (at_keyword("nonzero")) {
                advance();
                p.nonzero = true;
            }
            def.params.push_back(std::move(p));
            if (peek().kind == TokenKind::Comma) {
                advance();
                continue;
            }
            break;
        }
        expect(TokenKind::Semicolon);
    }

    void parse_generators(AlgebraDef& def) {
        advance(); // 'generators'
        while (true) {
            const Token& name = expect(TokenKind::Identifier);
            def.generators.push_back(GeneratorDef{name.text, name.span});
            if (peek().kind == TokenKind::Comma) {
                advance();
                continue;
            }
            break;
        }
        expect(TokenKind::Semicolon);
    }

    void parse_bracket(AlgebraDef& def) {
        advance(); // 'bracket'
        expect(TokenKind::LBrace);
        while (peek().kind != TokenKind::RBrace) {
            if (at_keyword("default")) {
                const Token& kw = advance();
                if (def.default_zero) {
                    throw ParseError(kw.span, "duplicate 'default zero;'");
                }
                expect_keyword("zero");
                expect(TokenKind::Semicolon);
                def.default_zero = true;
                continue;
            }
            if (peek().kind != TokenKind::LBracket) {
                fail({"'['", "'default'", "'}'"});
            }
            BracketClause clause;
            clause.span = peek().span;
            advance(); // '['
            clause.lhs = expect(TokenKind::Identifier).text;
            expect(TokenKind::Underscore);
            clause.rhs = expect(TokenKind::Identifier).text;
            expect(TokenKind::RBracket);
            expect(TokenKind::Equals);
            clause.value = parse_expr();
            expect(TokenKind::Semicolon);
            def.clauses.push_back(std::move(clause));
        }
        advance(); // '}'
    }

    std::unique_ptr<Expr> parse_expr() {
        if (expr_depth_ >= kMaxExprDepth) {
            throw ParseError(peek().span, "expression is too deeply nested");
        }
        ++expr_depth_;
        std::unique_ptr<Expr> lhs = parse_term();
        while (peek().kind == TokenKind::Plus ||
               peek().kind == TokenKind::Minus) {
            const bool plus = peek().kind == TokenKind::Plus;
            advance();
            auto node = std::make_unique<Expr>();
            node->kind = plus ? Expr::Kind::Add : Expr::Kind::Sub;
            node->span = lhs->span;
            node->lhs = std::move(lhs);
            node->rhs = parse_term();
            lhs = std::move(node);
        }
        --expr_depth_;
        return lhs;
    }

    std::unique_ptr<Expr> parse_term() {
        std::unique_ptr<Expr> lhs = parse_factor();
        while (peek().kind == TokenKind::Star) {
            advance();
            auto node = std::make_unique<Expr>();
            node->kind = Expr::Kind::Mul;
            node->span = lhs->span;
            node->lhs = std::move(lhs);
            node->rhs = parse_factor();
            lhs = std::move(node);
        }
        return lhs;
    }

    std::unique_ptr<Expr> parse_factor() {
        if (peek().kind == TokenKind::Minus) {
            if (expr_depth_ >= kMaxExprDepth) {
                throw ParseError(peek().span,
                                 "expression is too deeply nested");
            }
            ++expr_depth_;
            const Token& minus = advance();
            auto node = std::make_unique<Expr>();
            node->kind = Expr::Kind::Neg;
            node->span = minus.span;
            node->lhs = parse_factor();
            --expr_depth_;
            return node;
        }
        return parse_power();
    }

    std::unique_ptr<Expr> parse_power() {
        std::unique_ptr<Expr> base = parse_atom();
        if (peek().kind != TokenKind::Caret) return base;
        advance(); // '^'
        bool negative = false;
        SourceSpan exp_span = peek().span;
        if (peek().kind == TokenKind::Minus) {
            negative = true;
            advance();
        }
        if (peek().kind != TokenKind::Integer) {
            fail({"integer exponent"});
        }
        const Token& exp = advance();
        if (exp.value > Rational(1000000)) {
            throw ParseError(exp.span,
                             "exponent '" + exp.text + "' is too large");
        }
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::Pow;
        node->span = base->span;
        node->lhs = std::move(base);
        node->exponent = static_cast<long>(rat_num(exp.value));
        if (negative) node->exponent = -node->exponent;
        exp_span.length = exp.span.column + exp.span.length - exp_span.column;
        node->exponent_span = exp_span;
        return node;
    }

    std::unique_ptr<Expr> parse_atom() {
        const Token& tok = peek();
        switch (tok.kind) {
        case TokenKind::Integer:
        case TokenKind::RationalLit: {
            advance();
            auto node = std::make_unique<Expr>();
            node->kind = Expr::Kind::Number;
            node->span = tok.span;
            node->number = tok.value;
            return node;
        }
        case TokenKind::Identifier: {
            advance();
            auto node = std::make_unique<Expr>();
            node->kind = Expr::Kind::Ident;
            node->span = tok.span;
            node->name = tok.text;
            return node;
        }
        case TokenKind::LParen: {
            advance();
            std::unique_ptr<Expr> inner = parse_expr();
            expect(TokenKind::RParen);
            return inner;
        }
        default:
            fail({"number", "identifier", "'('"});
        }
    }

    // -- declaration-level checks --------------------------------------

    void validate(const AlgebraDef& def) const {
        std::set<std::string> names;
        for (const ParamDef& p : def.params) {
            if (is_reserved_name(p.name)) {
                throw ParseError(p.span, "'" + p.name +
                                             "' is reserved and cannot be a "
                                             "parameter name");
            }
            if (!names.insert(p.name).second) {
                throw ParseError(p.span,
                                 "duplicate parameter '" + p.name + "'");
            }
        }
        for (const GeneratorDef& g : def.generators) {
            if (is_reserved_name(g.name)) {
                throw ParseError(g.span, "'" + g.name +
                                             "' is reserved and cannot be a "
                                             "generator name");
            }
            if (!names.insert(g.name).second) {
                throw ParseError(g.span, "name '" + g.name +
                                             "' is already declared");
            }
        }

        std::set<std::string> generators;
        for (const GeneratorDef& g : def.generators) generators.insert(g.name);

        std::set<std::pair<std::string, std::string>> pairs;
        for (const BracketClause& clause : def.clauses) {
            for (const std::string& gen : {clause.lhs, clause.rhs}) {
                if (generators.count(gen) == 0) {
                    throw ParseError(clause.span, "unknown generator '" +
                                                      gen + "' in bracket "
                                                            "pair");
                }
            }
            if (!pairs.insert({clause.lhs, clause.rhs}).second) {
                throw ParseError(clause.span,
                                 "duplicate bracket clause for pair [" +
                                     clause.lhs + " _ " + clause.rhs + "]");
            }
            check_expr_names(*clause.value, names);
        }

        if (!def.default_zero) {
            for (const GeneratorDef& x : def.generators) {
                for (const GeneratorDef& y : def.generators) {
                    if (pairs.count({x.name, y.name}) == 0) {
                        throw ParseError(
                            bracket_span_,
                            "missing bracket clause for pair [" + x.name +
                                " _ " + y.name +
                                "] (add it or declare 'default zero;')");
                    }
                }
            }
        }
    }

    void check_expr_names(const Expr& e,
                          const std::set<std::string>& names) const {
        switch (e.kind) {
        case Expr::Kind::Number:
            return;
        case Expr::Kind::Ident:
            if (e.name != "del" && e.name != "lam" &&
                names.count(e.name) == 0) {
                throw ParseError(e.span, "unknown name '" + e.name + "'");
            }
            return;
        case Expr::Kind::Neg:
        case Expr::Kind::Pow:
            check_expr_names(*e.lhs, names);
            return;
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
        case Expr::Kind::Mul:
            check_expr_names(*e.lhs, names);
            check_expr_names(*e.rhs, names);
            return;
        }
    }

    static constexpr int kMaxExprDepth = 200;

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int expr_depth_ = 0;
    SourceSpan bracket_span_;
};

bool expr_equal(const Expr* a, const Expr* b) {
    if (a == nullptr || b == nullptr) return a == b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
    case Expr::Kind::Number: return a->number == b->number;
    case Expr::Kind::Ident: return a->name == b->name;
    case Expr::Kind::Neg: return expr_equal(a->lhs.get(), b->lhs.get());
    case Expr::Kind::Pow:
        return a->exponent == b->exponent &&
               expr_equal(a->lhs.get(), b->lhs.get());
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul:
        return expr_equal(a->lhs.get(), b->lhs.get()) &&
               expr_equal(a->rhs.get(), b->rhs.get());
    }
    return false;
}

} // namespace

AlgebraDef parse_algebra(const std::string& text) {
    Parser parser(text);
    return parser.parse_file();
}

bool algebra_def_equal(const AlgebraDef& a, const AlgebraDef& b) {
    if (a.name != b.name || a.kind != b.kind ||
        a.default_zero != b.default_zero ||
        a.params.size() != b.params.size() ||
        a.generators.size() != b.generators.size() ||
        a.clauses.size() != b.clauses.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.params.size(); ++i) {
        if (a.params[i].name != b.params[i].name ||
            a.params[i].nonzero != b.params[i].nonzero) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.generators.size(); ++i) {
        if (a.generators[i].name != b.generators[i].name) return false;
    }
    for (std::size_t i = 0; i < a.clauses.size(); ++i) {
        if (a.clauses[i].lhs != b.clauses[i].lhs ||
            a.clauses[i].rhs != b.clauses[i].rhs ||
            !expr_equal(a.clauses[i].value.get(), b.clauses[i].value.get())) {
            return false;
        }
    }
    return true;
}

} // namespace lca
