#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lca/catalog.hpp"
#include "lca/dsl.hpp"
#include "lca/errors.hpp"

#include "support/random_gen.hpp"

#include <string>
#include <vector>

using namespace lca;
using lca::testing::Rng;

namespace {

/// Parse-and-elaborate that reports the rendered ParseError text
/// ("line:column: message") for golden comparison, or "OK".
std::string diagnose(const std::string& source) {
    try {
        parse_and_elaborate(source);
        return "OK";
    } catch (const ParseError& e) {
        return e.what();
    }
}

std::string wrap(const std::string& clause) {
    return "algebra A : raw { generators L; bracket { " + clause + " } }";
}

/// The printable catalog exports. Two families carry fractional
/// coefficients in their fully-symbolic tables, which the printer refuses;
/// pinning the denominators makes them printable without losing shape.
const std::vector<ConformalAlgebra>& exported_algebras() {
    static const std::vector<ConformalAlgebra> all = [] {
        std::vector<ConformalAlgebra> v{make_virasoro(), make_vir_lsc(),
                                        make_W()};
        for (const Family& f : families()) {
            if (f.id == "T5") {
                v.push_back(family_algebra(
                    f, {{"b", Rational(1)}, {"d", Rational(1)}}));
            } else if (f.id == "T8") {
                v.push_back(family_algebra(f, {{"c", Rational(1)},
                                               {"h1", Rational(1)},
                                               {"k2", Rational(2)}}));
            } else {
                v.push_back(family_algebra(f));
            }
        }
        return v;
    }();
    return all;
}

} // namespace

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

TEST_CASE("tokenizing expressions") {
    const auto tokens = tokenize("del + 2*lam");
    REQUIRE(tokens.size() == 6);
    CHECK(tokens[0].kind == TokenKind::Identifier);
    CHECK(tokens[0].text == "del");
    CHECK(tokens[1].kind == TokenKind::Plus);
    CHECK(tokens[2].kind == TokenKind::Integer);
    CHECK(tokens[2].value == Rational(2));
    CHECK(tokens[3].kind == TokenKind::Star);
    CHECK(tokens[4].kind == TokenKind::Identifier);
    CHECK(tokens[5].kind == TokenKind::EndOfInput);
}

TEST_CASE("rational literals are single tokens") {
    const auto tokens = tokenize("1/2 * del^2");
    REQUIRE(tokens.size() == 6);
    CHECK(tokens[0].kind == TokenKind::RationalLit);
    CHECK(tokens[0].value == Rational(1, 2));
    CHECK(tokens[0].text == "1/2");
    CHECK(tokens[3].kind == TokenKind::Caret);
    CHECK(tokens[4].kind == TokenKind::Integer);

    // Without digits after '/' there is no rational literal (and no
    // division operator either, so the '/' itself is rejected).
    CHECK_THROWS_AS(tokenize("1/"), ParseError);
}

TEST_CASE("bracket pairs use a standalone underscore") {
    const auto tokens = tokenize("[L _ W]");
    REQUIRE(tokens.size() == 6);
    CHECK(tokens[0].kind == TokenKind::LBracket);
    CHECK(tokens[1].kind == TokenKind::Identifier);
    CHECK(tokens[2].kind == TokenKind::Underscore);
    CHECK(tokens[3].kind == TokenKind::Identifier);
    CHECK(tokens[4].kind == TokenKind::RBracket);

    // Underscores glue onto identifier tails, so the slot marker needs
    // surrounding whitespace: "[L_W]" holds a single identifier.
    const auto glued = tokenize("[L_W]");
    REQUIRE(glued.size() == 4);
    CHECK(glued[1].kind == TokenKind::Identifier);
    CHECK(glued[1].text == "L_W");
}

TEST_CASE("keywords and comments") {
    const auto tokens = tokenize("bracket # trailing comment\nzero");
    REQUIRE(tokens.size() == 3);
    CHECK(tokens[0].kind == TokenKind::Keyword);
    CHECK(tokens[0].text == "bracket");
    CHECK(tokens[1].kind == TokenKind::Keyword);
    CHECK(tokens[1].span.line == 2);
    CHECK(tokens[1].span.column == 1);
}

TEST_CASE("token spans are 1-based") {
    const auto tokens = tokenize("a\n  bb");
    CHECK(tokens[0].span.line == 1);
    CHECK(tokens[0].span.column == 1);
    CHECK(tokens[1].span.line == 2);
    CHECK(tokens[1].span.column == 3);
    CHECK(tokens[1].span.length == 2);
}

// ---------------------------------------------------------------------------
// Parser diagnostics (message + position frozen)
// ---------------------------------------------------------------------------

TEST_CASE("structural diagnostics") {
    CHECK(diagnose("algebra A : raw { generators L, W; "
                   "bracket { [L _ L] = del*L; } }") ==
          "1:36: missing bracket clause for pair [L _ W] (add it or declare "
          "'default zero;')");
    CHECK(diagnose(wrap("[L _ L] = del*L; [L _ L] = del*L;")) ==
          "1:60: duplicate bracket clause for pair [L _ L]");
    CHECK(diagnose(wrap("[L _ X] = del*L; default zero;")) ==
          "1:43: unknown generator 'X' in bracket pair");
    CHECK(diagnose(wrap("[L _ L] = q*L;")) == "1:53: unknown name 'q'");
    CHECK(diagnose("algebra A : raw { params del; generators L; "
                   "bracket { default zero; } }") ==
          "1:26: 'del' is reserved and cannot be a parameter name");
    CHECK(diagnose("algebra A : raw { generators lam; "
                   "bracket { default zero; } }") ==
          "1:30: 'lam' is reserved and cannot be a generator name");
    CHECK(diagnose("algebra A : raw { params a, a; generators L; "
                   "bracket { default zero; } }") ==
          "1:29: duplicate parameter 'a'");
    CHECK(diagnose("algebra A : raw { params a; generators a; "
                   "bracket { default zero; } }") ==
          "1:40: name 'a' is already declared");
    CHECK(diagnose("algebra A : raw { params a; params b; generators L; "
                   "bracket { default zero; } }") ==
          "1:29: duplicate 'params' section");
    CHECK(diagnose("algebra A : raw { bracket { default zero; } }") ==
          "1:9: algebra 'A' has no generators section");
    CHECK(diagnose("algebra A : raw { generators L; }") ==
          "1:9: algebra 'A' has no bracket section");
    CHECK(diagnose(wrap("default zero; default zero;")) ==
          "1:57: duplicate 'default zero;'");
    CHECK(diagnose("algebra A : ring { generators L; "
                   "bracket { default zero; } }") ==
          "1:13: unexpected 'ring' (expected 'lie', 'lsc' or 'raw')");
    CHECK(diagnose(wrap("[L _ L] = del*L")) ==
          "1:59: unexpected '}' (expected ';')");
    CHECK(diagnose(wrap("[L_L] = del*L;")) ==
          "1:47: unexpected ']' (expected '_')");
}

TEST_CASE("literal and character diagnostics") {
    CHECK(diagnose(wrap("[L _ L] = 1/0*L;")) ==
          "1:53: rational literal '1/0' has a zero denominator");
    CHECK(diagnose(wrap("[L _ L] = 'del*L;")) ==
          "1:53: unexpected character '''");
    // Multi-byte characters are quoted whole, not byte by byte.
    CHECK(diagnose(wrap("[L _ L] = \xC3\xA9*L;")) ==
          "1:53: unexpected character '\xC3\xA9'");
}

TEST_CASE("exponent diagnostics") {
    CHECK(diagnose(wrap("[L _ L] = lam^;*L")) ==
          "1:57: unexpected ';' (expected integer exponent)");
    CHECK(diagnose("algebra A : raw { generators L; bracket { [L _ L] = "
                   "lam^") ==
          "1:57: unexpected end of input (expected integer exponent)");
    CHECK(diagnose(wrap("[L _ L] = lam^9999999*L;")) ==
          "1:57: exponent '9999999' is too large");
    CHECK(diagnose(wrap("[L _ L] = del^-2*L;")) ==
          "1:57: negative exponents are not allowed");
}

TEST_CASE("deeply nested expressions are refused, not crashed on") {
    std::string deep = "algebra A : raw { generators L; bracket { [L _ L] = ";
    for (int i = 0; i < 300; ++i) deep += "(";
    deep += "del";
    for (int i = 0; i < 300; ++i) deep += ")";
    deep += "*L; } }";
    CHECK(diagnose(deep) == "1:253: expression is too deeply nested");
}

TEST_CASE("elaboration diagnostics") {
    CHECK(diagnose(wrap("[L _ L] = L*L;")) ==
          "1:53: a product of generators is not a module element");
    CHECK(diagnose(wrap("[L _ L] = L^2;")) ==
          "1:55: cannot raise a generator to a power");
    CHECK(diagnose(wrap("[L _ L] = del + L;")) ==
          "1:53: bracket value for [L _ L] has a term with no generator "
          "factor");
    // Exponent 1 on a generator is the generator itself.
    CHECK(diagnose(wrap("[L _ L] = L^1;")) == "OK");
}

// ---------------------------------------------------------------------------
// Elaboration semantics
// ---------------------------------------------------------------------------

TEST_CASE("parenthesized scalars fold") {
    const ConformalAlgebra A =
        parse_and_elaborate(wrap("[L _ L] = ((del)) * L;"));
    Element expected(1);
    expected.components[0] = fp_del();
    CHECK(A.entry(0, 0) == expected);
    CHECK(A.kind() == AlgebraKind::Raw);
}

TEST_CASE("a full clause elaborates to the expected entry") {
    const ConformalAlgebra A = parse_and_elaborate(
        "algebra M : lie {\n"
        "  params a, b;\n"
        "  generators L, W;\n"
        "  bracket {\n"
        "    [L _ L] = (del + 2*lam)*L;\n"
        "    [L _ W] = (del + a*lam + b) * W;\n"
        "    [W _ L] = ((a - 1)*del + a*lam - b)*W;\n"
        "    default zero;\n"
        "  }\n"
        "}\n");
    const ConformalAlgebra reference = make_W();
    CHECK(A.kind() == AlgebraKind::Lie);
    CHECK(A.table() == reference.table());
    REQUIRE(A.params().size() == 2);
    CHECK(A.params()[0].nonzero == false);

    // Linear combinations distribute over generators.
    const ConformalAlgebra B = parse_and_elaborate(
        "algebra N : raw { generators L, W; bracket {\n"
        "  [L _ W] = 1/2*del*L - lam^2*W + 3*W;\n"
        "  default zero;\n"
        "} }");
    Element expected(2);
    expected.components[0] = FormalPoly(Rational(1, 2)) * fp_del();
    expected.components[1] = -fp_lam().pow(2) + FormalPoly(3L);
    CHECK(B.entry(0, 1) == expected);
}

TEST_CASE("nonzero markers carry into the algebra") {
    const ConformalAlgebra A = parse_and_elaborate(
        "algebra P : raw { params a nonzero, b; generators L; "
        "bracket { default zero; } }");
    REQUIRE(A.params().size() == 2);
    CHECK(A.params()[0].nonzero);
    CHECK_FALSE(A.params()[1].nonzero);
    CHECK_THROWS_AS(A.specialize("a", Rational(0)), InvalidParameterError);
}

// ---------------------------------------------------------------------------
// Printing and round trips
// ---------------------------------------------------------------------------

TEST_CASE("printing the rank-2 Lie algebra") {
    CHECK(print_algebra(make_W()) ==
          "algebra wab : lie {\n"
          "  params a, b;\n"
          "  generators L, W;\n"
          "  bracket {\n"
          "    [L _ L] = (del + 2*lam)*L;\n"
          "    [L _ W] = (del + a*lam + b)*W;\n"
          "    [W _ L] = ((a - 1)*del + a*lam - b)*W;\n"
          "    default zero;\n"
          "  }\n"
          "}\n");
}

TEST_CASE("fractional coefficients refuse to print") {
    CHECK_THROWS_WITH_AS(
        print_algebra(family_algebra(family("T5"))),
        "table entry for [W _ W] of algebra 'T5' uses the parameter "
        "fraction '(-d^2)/(b)', which has no source form; specialize the "
        "parameters first",
        Error);
}

TEST_CASE("every exported structure survives a round trip") {
    for (const ConformalAlgebra& A : exported_algebras()) {
        INFO(A.name());
        const std::string first = print_algebra(A);
        const ConformalAlgebra back = parse_and_elaborate(first);

        CHECK(back.name() == A.name());
        CHECK(back.kind() == A.kind());
        CHECK(back.generator_names() == A.generator_names());
        REQUIRE(back.params().size() == A.params().size());
        for (std::size_t i = 0; i < A.params().size(); ++i) {
            CHECK(back.params()[i].id == A.params()[i].id);
            CHECK(back.params()[i].nonzero == A.params()[i].nonzero);
        }
        CHECK(back.table() == A.table());

        // Printing is canonical: a second pass is byte-identical, and the
        // parse trees agree.
        const std::string second = print_algebra(back);
        CHECK(second == first);
        CHECK(algebra_def_equal(parse_algebra(first), parse_algebra(second)));
    }
}

// ---------------------------------------------------------------------------
// Fuzzing: mutated sources never escape ParseError
// ---------------------------------------------------------------------------

TEST_CASE("mutated sources fail cleanly with in-bounds positions") {
    std::vector<std::string> seeds;
    for (const ConformalAlgebra& A : exported_algebras()) {
        seeds.push_back(print_algebra(A));
    }

    Rng rng(0x5eedf002);
    const std::string pool =
        "ablmwLW019/*+-^_#(){}[];:=., \n\t'\"\\"
        "\xC3\xA9\x80\xFF";
    auto pick_byte = [&]() { return pool[rng() % pool.size()]; };

    int parsed_ok = 0, rejected = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        std::string text = seeds[rng() % seeds.size()];
        const int edits = 1 + static_cast<int>(rng() % 4);
        for (int e = 0; e < edits; ++e) {
            if (text.empty()) break;
            const std::size_t pos = rng() % text.size();
            switch (rng() % 3) {
            case 0: text[pos] = pick_byte(); break;
            case 1: text.insert(pos, 1, pick_byte()); break;
            case 2: text.erase(pos, 1); break;
            }
        }

        try {
            parse_and_elaborate(text);
            ++parsed_ok;
        } catch (const ParseError& err) {
            ++rejected;
            // Position must point into the mutated source.
            const SourceSpan& span = err.span();
            std::vector<std::size_t> line_lengths;
            std::size_t run = 0;
            for (char c : text) {
                if (c == '\n') {
                    line_lengths.push_back(run);
                    run = 0;
                } else {
                    ++run;
                }
            }
            line_lengths.push_back(run);
            REQUIRE(span.line >= 1);
            REQUIRE(static_cast<std::size_t>(span.line) <=
                    line_lengths.size());
            REQUIRE(span.column >= 1);
            REQUIRE(static_cast<std::size_t>(span.column) <=
                    line_lengths[static_cast<std::size_t>(span.line) - 1] + 1);
        }
        // Any other exception type escapes and fails the test case.
    }
    // Both outcomes occur: some edits are harmless, most are not.
    CHECK(parsed_ok > 0);
    CHECK(rejected > 5000);
}
