#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lca/errors.hpp"
#include "lca/formal_poly.hpp"

#include "support/random_gen.hpp"

using namespace lca;
using lca::testing::Rng;

// ---------------------------------------------------------------------------
// Rational helpers
// ---------------------------------------------------------------------------

TEST_CASE("generalized binomial handles negative upper argument") {
    CHECK(binomial_generalized(5, 2) == Rational(10));
    CHECK(binomial_generalized(5, 0) == Rational(1));
    CHECK(binomial_generalized(-3, 2) == Rational(6));
    CHECK(binomial_generalized(-1, 3) == Rational(-1));
    CHECK(binomial_generalized(2, 5) == Rational(0));
}

TEST_CASE("falling factorial") {
    CHECK(falling_factorial(4, 2) == Rational(12));
    CHECK(falling_factorial(4, 0) == Rational(1));
    CHECK(falling_factorial(-2, 3) == Rational(-24));
    CHECK(falling_factorial(0, 2) == Rational(0));
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(5) == Rational(120));
}

TEST_CASE("parse_rational accepts p and p/q") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("0") == Rational(0));
    CHECK(rat_to_string(parse_rational("10/4")) == "5/2");
}

TEST_CASE("parse_rational rejects malformed input") {
    for (const char* bad : {"", "3/", "/4", "q", "1/0", "2/-3", "--1", "1.5",
                            " 1", "1 ", "1/2/3", "-"}) {
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
    }
}

// ---------------------------------------------------------------------------
// ParamPoly
// ---------------------------------------------------------------------------

TEST_CASE("param poly arithmetic normal forms") {
    const ParamPoly a = ParamPoly::symbol("a");
    const ParamPoly b = ParamPoly::symbol("b");

    CHECK((a + b) * (a - b) == a * a - b * b);
    CHECK((a + b).pow(2) == a * a + ParamPoly(Rational(2)) * a * b + b * b);
    CHECK((a - a).is_zero());
    CHECK(a.degree_in(intern_symbol("a")) == 1);
    CHECK((a * a * b).degree_in(intern_symbol("a")) == 2);
    CHECK(ParamPoly(Rational(0)).to_string() == "0");
    CHECK((a * a - b).to_string() == "a^2 - b");
}

TEST_CASE("param poly substitution and evaluation") {
    const ParamPoly a = ParamPoly::symbol("a");
    const ParamPoly b = ParamPoly::symbol("b");
    const ParamPoly p = a * a + b;

    CHECK(p.substitute(intern_symbol("a"), b + ParamPoly(Rational(1))) ==
          (b + ParamPoly(Rational(1))).pow(2) + b);

    std::map<SymbolId, Rational> point;
    point[intern_symbol("a")] = Rational(3);
    point[intern_symbol("b")] = Rational(-2);
    CHECK(p.eval(point) == Rational(7));
}

TEST_CASE("param poly exact division and gcd") {
    const ParamPoly a = ParamPoly::symbol("a");
    const ParamPoly b = ParamPoly::symbol("b");

    const ParamPoly product = (a + b) * (a - b);
    auto quotient = product.divided_exactly_by(a + b);
    REQUIRE(quotient.has_value());
    CHECK(*quotient == a - b);
    CHECK_FALSE((a * a + b).divided_exactly_by(a + b).has_value());

    const ParamPoly g = ParamPoly::gcd((a + b) * (a + b), a * a - b * b);
    CHECK((a + b).divided_exactly_by(g).has_value());
    CHECK(g.divided_exactly_by(a + b).has_value());
}

TEST_CASE("param poly ring axioms hold on random inputs") {
    Rng rng(0x5eed0001);
    for (int trial = 0; trial < 1000; ++trial) {
        const ParamPoly p = lca::testing::random_param_poly(rng);
        const ParamPoly q = lca::testing::random_param_poly(rng);
        const ParamPoly r = lca::testing::random_param_poly(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("param poly gcd divides both arguments on random inputs") {
    Rng rng(0x5eed0002);
    for (int trial = 0; trial < 200; ++trial) {
        const ParamPoly p = lca::testing::random_param_poly(rng, 3, 1);
        const ParamPoly q = lca::testing::random_param_poly(rng, 3, 1);
        const ParamPoly g = ParamPoly::gcd(p, q);
        if (g.is_zero()) {
            CHECK(p.is_zero());
            CHECK(q.is_zero());
            continue;
        }
        CHECK(p.divided_exactly_by(g).has_value());
        CHECK(q.divided_exactly_by(g).has_value());
    }
}

// ---------------------------------------------------------------------------
// Scalar (fraction field)
// ---------------------------------------------------------------------------

TEST_CASE("scalar reduces to normal form") {
    const ParamPoly a = ParamPoly::symbol("a");
    const ParamPoly b = ParamPoly::symbol("b");

    CHECK(Scalar(a * a - b * b, a + b) == Scalar(a - b));
    CHECK(Scalar(a * a - b * b, a + b).is_polynomial());
    CHECK(Scalar(ParamPoly(Rational(2)) * b, ParamPoly(Rational(4))) ==
          Scalar(Rational(1, 2)) * Scalar(b));

    // Monic denominator: 1/(2a) carries the 2 into the numerator.
    const Scalar s(ParamPoly(Rational(1)), ParamPoly(Rational(2)) * a);
    CHECK(s.den() == a);
    CHECK(s.num() == ParamPoly(Rational(1, 2)));
}

TEST_CASE("scalar arithmetic") {
    const Scalar a = Scalar::symbol("a");
    const Scalar b = Scalar::symbol("b");
    const Scalar one(1L);

    CHECK(one / a + one / b ==
          Scalar(ParamPoly::symbol("a") + ParamPoly::symbol("b"),
                 ParamPoly::symbol("a") * ParamPoly::symbol("b")));
    CHECK(a / a == one);
    CHECK((a / b) * (b / a) == one);
    CHECK(a - a == Scalar());
    CHECK((a / b).to_string() == "(a)/(b)");
}

TEST_CASE("scalar pole handling") {
    const ParamPoly a = ParamPoly::symbol("a");
    CHECK_THROWS_AS(Scalar(a, ParamPoly()), PoleError);
    CHECK_THROWS_AS(Scalar(Scalar(1L) / Scalar::symbol("a")).substitute(
                        intern_symbol("a"), ParamPoly()),
                    PoleError);
    std::map<SymbolId, Rational> origin;
    origin[intern_symbol("a")] = Rational(0);
    CHECK_THROWS_AS((Scalar(1L) / Scalar::symbol("a")).eval(origin),
                    PoleError);
}

TEST_CASE("scalar field axioms hold on random inputs") {
    Rng rng(0x5eed0003);
    int effective = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const Scalar p(lca::testing::random_param_poly(rng, 2, 1));
        const Scalar q(lca::testing::random_param_poly(rng, 2, 1));
        const Scalar r(lca::testing::random_param_poly(rng, 2, 1));
        if (q.is_zero()) continue;
        ++effective;
        const Scalar frac = p / q;
        CHECK(frac * q == p);
        CHECK((p / q) + (r / q) == (p + r) / q);
        CHECK(frac - frac == Scalar());
    }
    CHECK(effective > 200);
}

// ---------------------------------------------------------------------------
// FormalPoly
// ---------------------------------------------------------------------------

TEST_CASE("formal poly construction and inspection") {
    const FormalPoly p = fp_del() + FormalPoly(2L) * fp_lam();
    CHECK(p.degree_in(FormalVar::Del) == 1);
    CHECK(p.degree_in(FormalVar::Mu) == 0);
    CHECK(p.uses_only({FormalVar::Del, FormalVar::Lam}));
    CHECK_FALSE(p.uses_only({FormalVar::Del}));
    CHECK(FormalPoly().is_zero());
    CHECK(FormalPoly().degree_in(FormalVar::Del) == -1);
    CHECK(p.coeff_in(FormalVar::Lam, 1) == FormalPoly(2L));
    CHECK(p.coeff_in(FormalVar::Lam, 0) == fp_del());
    CHECK(p.coeff_in(FormalVar::Lam, 2).is_zero());
}

TEST_CASE("substitution is single-pass") {
    const FormalPoly lam = fp_lam(), del = fp_del();

    // The canonical reflection lam -> -lam-del.
    CHECK(lam.pow(2).substitute(FormalVar::Lam, -lam - del) ==
          lam * lam + FormalPoly(2L) * lam * del + del * del);

    // The replacement may mention the variable without cascading.
    const FormalPoly shifted =
        lam.substitute(FormalVar::Lam, lam + FormalPoly(1L));
    CHECK(shifted == lam + FormalPoly(1L));
}

TEST_CASE("simultaneous substitution swaps variables") {
    const FormalPoly lam = fp_lam(), mu = fp_mu();
    std::array<std::optional<FormalPoly>, kFormalVarCount> replacements;
    replacements[static_cast<int>(FormalVar::Lam)] = mu;
    replacements[static_cast<int>(FormalVar::Mu)] = lam;
    const FormalPoly p = lam * lam + mu;
    CHECK(p.substitute_many(replacements) == mu * mu + lam);
}

TEST_CASE("rename enforces freshness") {
    const FormalPoly p = fp_lam() + fp_del();
    CHECK(p.rename(FormalVar::Lam, FormalVar::Nu) == fp_nu() + fp_del());
    CHECK_THROWS_AS(p.rename(FormalVar::Lam, FormalVar::Del), RenameError);
    CHECK(p.rename(FormalVar::Lam, FormalVar::Lam) == p);
}

TEST_CASE("evaluation requires a complete assignment") {
    const FormalPoly p = fp_del() * FormalPoly::param("a") + fp_lam();
    std::map<std::string, Rational> point = {{"del", Rational(2)},
                                             {"lam", Rational(3)},
                                             {"mu", Rational(0)},
                                             {"nu", Rational(0)},
                                             {"a", Rational(5)}};
    CHECK(p.eval(point) == Rational(13));
    point.erase("del");
    CHECK_THROWS_AS(p.eval(point), IncompleteAssignmentError);
}

TEST_CASE("rendering goldens") {
    const FormalPoly p = fp_del() * fp_del() +
                         FormalPoly(2L) * fp_lam() * fp_mu() -
                         FormalPoly::param("c");
    CHECK(p.to_string() == "del^2 + 2*lam*mu - c");

    RenderOptions unicode;
    unicode.unicode_vars = true;
    CHECK((fp_del() + FormalPoly(2L) * fp_lam()).to_string(unicode) ==
          "∂ + 2*λ");

    RenderOptions capped;
    capped.max_terms = 2;
    CHECK(p.to_string(capped) == "del^2 + 2*lam*mu + ... (3 terms)");

    CHECK(FormalPoly().to_string() == "0");
    CHECK((-fp_del()).to_string() == "-del");
    CHECK((fp_del() - fp_lam()).to_string() == "del - lam");
}

TEST_CASE("formal poly ring axioms hold on random inputs") {
    Rng rng(0x5eed0004);
    for (int trial = 0; trial < 1000; ++trial) {
        const FormalPoly p = lca::testing::random_formal_poly(rng, true);
        const FormalPoly q = lca::testing::random_formal_poly(rng, true);
        const FormalPoly r = lca::testing::random_formal_poly(rng, true);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p - p).is_zero());
        CHECK((p * FormalPoly(1L)) == p);
    }
}

TEST_CASE("substitution commutes with evaluation on random inputs") {
    Rng rng(0x5eed0005);
    const std::array<FormalVar, 4> vars = {FormalVar::Del, FormalVar::Lam,
                                           FormalVar::Mu, FormalVar::Nu};
    for (int trial = 0; trial < 1000; ++trial) {
        const FormalPoly p = lca::testing::random_formal_poly(rng, true);
        const FormalPoly replacement =
            lca::testing::random_formal_poly(rng, true);
        const FormalVar v = vars[trial % vars.size()];

        auto point = lca::testing::random_assignment(rng);
        const Rational direct = p.substitute(v, replacement).eval(point);

        auto shifted = point;
        shifted[formal_var_name(v)] = replacement.eval(point);
        CHECK(direct == p.eval(shifted));
    }
}

TEST_CASE("coefficient extraction reconstructs the polynomial") {
    Rng rng(0x5eed0006);
    for (int trial = 0; trial < 200; ++trial) {
        const FormalPoly p = lca::testing::random_formal_poly(rng, true);
        FormalPoly rebuilt;
        for (int k = 0; k <= p.degree_in(FormalVar::Lam); ++k) {
            rebuilt = rebuilt + fp_lam().pow(k) * p.coeff_in(FormalVar::Lam, k);
        }
        CHECK(rebuilt == p);
    }
}
