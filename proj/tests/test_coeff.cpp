#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lca/catalog.hpp"
#include "lca/coeff.hpp"
#include "lca/conformal.hpp"
#include "lca/errors.hpp"

#include "support/random_gen.hpp"

using namespace lca;

namespace {

CoeffElement L(long i) { return CoeffElement::basis(0, i); }
CoeffElement W(long i) { return CoeffElement::basis(1, i); }

Scalar sym(const char* name) { return Scalar::symbol(name); }

} // namespace

// ---------------------------------------------------------------------------
// Mode expansion
// ---------------------------------------------------------------------------

TEST_CASE("mode expansion of polynomial actions") {
    // (del a)_n = -n a_(n-1), applied repeatedly:
    // (del^2 a)_n = n(n-1) a_(n-2).
    CHECK(coeff_expand_mode(fp_del(), 0, 4) == -(L(3) * Scalar(4L)));
    CHECK(coeff_expand_mode(fp_del(), 0, 0).is_zero());
    CHECK(coeff_expand_mode(fp_del() * fp_del(), 0, 4) ==
          L(2) * Scalar(12L));
    CHECK(coeff_expand_mode(fp_del() * fp_del(), 0, -1) == L(-3) * Scalar(2L));
    CHECK(coeff_expand_mode(FormalPoly::param("c"), 0, 2) ==
          L(2) * sym("c"));
    CHECK(coeff_expand_mode(FormalPoly(), 1, 5).is_zero());
    CHECK_THROWS_AS(coeff_expand_mode(fp_lam(), 0, 0), Error);
}

// ---------------------------------------------------------------------------
// Raw products (shift 0) against hand-expanded oracles
// ---------------------------------------------------------------------------

TEST_CASE("raw mode products of the rank-1 structure") {
    // L_m o L_n = c L_{m+n} - n L_{m+n-1} in the raw basis.
    const ConformalAlgebra A = make_vir_lsc();
    const ShiftConvention raw = ShiftConvention::uniform(1, 0);
    for (long m = -4; m <= 4; ++m) {
        for (long n = -4; n <= 4; ++n) {
            const CoeffElement expected =
                L(m + n) * sym("c") - L(m + n - 1) * Scalar(Rational(n));
            CHECK(coeff_product(A, CoeffBasisVector{0, m},
                                CoeffBasisVector{0, n}, raw) == expected);
        }
    }
}

TEST_CASE("raw mode brackets of the rank-2 Lie algebra") {
    // [L_m, W_n] = ((a-1) m - n) W_{m+n-1} + b W_{m+n} in the raw basis.
    const ConformalAlgebra A = make_W();
    const ShiftConvention raw = ShiftConvention::uniform(2, 0);
    const Scalar a = sym("a"), b = sym("b");
    for (long m = -3; m <= 3; ++m) {
        for (long n = -3; n <= 3; ++n) {
            const CoeffElement expected =
                W(m + n - 1) *
                    ((a - Scalar(1L)) * Scalar(Rational(m)) -
                     Scalar(Rational(n))) +
                W(m + n) * b;
            CHECK(coeff_commutator(A, CoeffBasisVector{0, m},
                                   CoeffBasisVector{1, n}) ==
                  witt_closed_commutator(a, b, 0, m, 1, n));
            CHECK(coeff_product(A, CoeffBasisVector{0, m},
                                CoeffBasisVector{1, n}, raw) == expected);
        }
    }
}

TEST_CASE("shift conventions relabel products consistently") {
    // With presentation x_m = raw x_{m+t}, the shifted product at (m, n)
    // is the raw product at (m+t, n+t) with every index lowered by t.
    const ConformalAlgebra A = make_W();
    const ShiftConvention raw = ShiftConvention::uniform(2, 0);
    for (long t : {1L, 2L, -1L}) {
        const ShiftConvention shifted = ShiftConvention::uniform(2, t);
        for (GeneratorId gx = 0; gx < 2; ++gx) {
            for (GeneratorId gy = 0; gy < 2; ++gy) {
                for (long m = -2; m <= 2; ++m) {
                    for (long n = -2; n <= 2; ++n) {
                        const CoeffElement lifted = coeff_product(
                            A, CoeffBasisVector{gx, m + t},
                            CoeffBasisVector{gy, n + t}, raw);
                        CoeffElement relabeled;
                        for (const auto& [v, coeff] : lifted.terms()) {
                            relabeled.add_term(
                                CoeffBasisVector{v.gen, v.index - t}, coeff);
                        }
                        CHECK(coeff_product(A, CoeffBasisVector{gx, m},
                                            CoeffBasisVector{gy, n},
                                            shifted) == relabeled);
                    }
                }
            }
        }
    }
}

TEST_CASE("product indices stay within the homogeneity range") {
    // Raw result indices lie in [p+q-D, p+q] where D bounds the total
    // degree of the bracket entry in (del, lam).
    const ConformalAlgebra A = make_W();
    const ShiftConvention raw = ShiftConvention::uniform(2, 0);
    for (long p = -3; p <= 3; ++p) {
        for (long q = -3; q <= 3; ++q) {
            const CoeffElement prod = coeff_product(
                A, CoeffBasisVector{0, p}, CoeffBasisVector{1, q}, raw);
            for (const auto& [v, coeff] : prod.terms()) {
                (void)coeff;
                CHECK(v.index <= p + q);
                CHECK(v.index >= p + q - 1);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

TEST_CASE("closed rank-2 commutators match the engine on a window") {
    const WindowReport report =
        verify_lie_window(make_W(), sym("a"), sym("b"), 4);
    CHECK(report.ok);
    CHECK(report.window == 4);
    CHECK(report.checked == 4 * 9 * 9);
    CHECK(report.mismatches.empty());
}

TEST_CASE("closed rank-1 products match the engine on a window") {
    const ConformalAlgebra A = make_vir_lsc();
    for (long i = -5; i <= 5; ++i) {
        for (long j = -5; j <= 5; ++j) {
            CHECK(coeff_product(A, CoeffBasisVector{0, i},
                                CoeffBasisVector{0, j}) ==
                  vir_lsc_closed_product(sym("c"), i, j));
        }
    }
}

TEST_CASE("closed commutator satisfies antisymmetry and Jacobi") {
    const Scalar a = sym("a"), b = sym("b");
    for (long m = -3; m <= 3; ++m) {
        for (long n = -3; n <= 3; ++n) {
            CHECK(witt_closed_commutator(a, b, 0, m, 1, n) ==
                  -witt_closed_commutator(a, b, 1, n, 0, m));
            CHECK(witt_closed_commutator(a, b, 1, m, 1, n).is_zero());
            // [L_m, L_n] = (m - n) L_{m+n}
            CHECK(witt_closed_commutator(a, b, 0, m, 0, n) ==
                  L(m + n) * Scalar(Rational(m - n)));
        }
    }
}

TEST_CASE("two commutator routes agree at concrete parameters") {
    // Route 1: commutator of the structure's mode products. Route 2: mode
    // bracket of its sub-adjacent Lie table. Same answer, entry by entry.
    const ConformalAlgebra structure =
        family_algebra(family("T1"), {{"a", Rational(2)},
                                      {"b", Rational(3)},
                                      {"c", Rational(5)}});
    const ConformalAlgebra lie = sub_adjacent(structure);
    for (GeneratorId gx = 0; gx < 2; ++gx) {
        for (GeneratorId gy = 0; gy < 2; ++gy) {
            for (long m = -3; m <= 3; ++m) {
                for (long n = -3; n <= 3; ++n) {
                    CHECK(coeff_commutator(structure,
                                           CoeffBasisVector{gx, m},
                                           CoeffBasisVector{gy, n}) ==
                          coeff_commutator(lie, CoeffBasisVector{gx, m},
                                           CoeffBasisVector{gy, n}));
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Family product tables
// ---------------------------------------------------------------------------

TEST_CASE("family closed products match the engine") {
    for (const Family& f : families()) {
        INFO(f.id);
        const WindowReport report = verify_corollary(f, {}, 2);
        CHECK(report.ok);
        CHECK(report.mismatches.empty());
    }
}

TEST_CASE("closed product spot values") {
    // W_m o L_n vanishes identically in the base family.
    CHECK(corollary_product(family("T1"), 1, 2, 0, -1).is_zero());

    // In the W-deformed family at b = 1, d = 1:
    // W_m o W_n = -L_{m+n+1} - W_{m+n+1}.
    for (long m = -2; m <= 2; ++m) {
        for (long n = -2; n <= 2; ++n) {
            const CoeffElement pinned =
                corollary_product(family("T5"), 1, m, 1, n)
                    .substitute_param("b", Rational(1))
                    .substitute_param("d", Rational(1));
            CHECK(pinned == -(L(m + n + 1) + W(m + n + 1)));
        }
    }
}

TEST_CASE("mode left-symmetry holds for specialized families") {
    const ConformalAlgebra A = family_algebra(
        family("T9"), {{"h1", Rational(1)}, {"k1", Rational(1)}});
    const WindowReport report = verify_left_symmetry_window(A, 2);
    CHECK(report.ok);
    CHECK(report.checked == 8 * 5 * 5 * 5);
}

TEST_CASE("mode left-symmetry detects a broken table") {
    // The Lie table is not left-symmetric (its associator is the Jacobi
    // defect), so the window check must report mismatches.
    const WindowReport report =
        verify_left_symmetry_window(make_W(Rational(2), Rational(0)), 1);
    CHECK_FALSE(report.ok);
    CHECK_FALSE(report.mismatches.empty());
    const WindowMismatch& first = report.mismatches.front();
    CHECK_FALSE(first.label.empty());
    CHECK(first.expected == "0");
    CHECK_FALSE(first.actual.empty());
}

// ---------------------------------------------------------------------------
// Validation and rendering
// ---------------------------------------------------------------------------

TEST_CASE("window verifications validate their inputs") {
    CHECK_THROWS_AS(verify_left_symmetry_window(make_W(), -1),
                    InvalidParameterError);
    CHECK_THROWS_AS(verify_corollary(family("T1"), {}, -2),
                    InvalidParameterError);

    // Lie window checks need generators (L) or (L, W).
    Element zero1(1);
    const ConformalAlgebra wrong("wrong", AlgebraKind::Raw, {"X"}, {},
                                 {zero1});
    CHECK_THROWS_AS(verify_lie_window(wrong, Scalar(1L), Scalar(), 1),
                    GeneratorMismatchError);

    // Shift conventions must cover every generator.
    CHECK_THROWS_AS(coeff_product(make_W(), CoeffBasisVector{0, 0},
                                  CoeffBasisVector{1, 0},
                                  ShiftConvention::uniform(1, 0)),
                    Error);
}

TEST_CASE("coefficient element rendering") {
    const ConformalAlgebra A = make_W();
    CHECK((L(-1) * Scalar(2L) - W(3)).to_string(A) == "2*L[-1] - W[3]");
    CHECK(CoeffElement().to_string(A) == "0");
    CHECK((W(0) * sym("b")).to_string(A) == "b*W[0]");
    CHECK((L(2) * (sym("a") - Scalar(1L))).to_string(A) == "(a - 1)*L[2]");
    CHECK((L(0) * (Scalar(1L) / sym("b"))).to_string(A) == "(1)/(b)*L[0]");
}

TEST_CASE("zero coefficients are erased") {
    CoeffElement e = L(1);
    e -= L(1);
    CHECK(e.is_zero());
    CHECK(e.terms().empty());
    e = L(1) * Scalar(0L);
    CHECK(e.is_zero());
}
