/*
 * witnesses.cpp
 * -------------
 * Frozen refutation witnesses. Each witness pins a tempting candidate
 * structure from an excluded parameter region to a concrete identity it
 * violates: the residual polynomial is built through the same engine that
 * verifies the genuine families, then evaluated at a fixed rational point
 * whose nonzero value was verified independently by hand before being
 * frozen here. verify_refutation_witnesses() recomputes everything from
 * scratch, so any drift in the engine or in the transcribed equations
 * surfaces as a StaleWitnessError.
 *
 * Branch naming: candidates are grouped by the shape of the W-action
 * component h2 of W lam L — "trivial" (h2 = 0), "constant" (h2 = c) and
 * "shifted" (h2 = del + lam + c).
 */
#include "lca/catalog.hpp"

#include "lca/errors.hpp"

namespace lca {

namespace {

FormalPoly P(const std::string& name) { return FormalPoly::param(name); }

FormalPoly h_at(const FormalPoly& h, const FormalPoly& arg) {
    return h.substitute(FormalVar::Nu, arg);
}

FormalPoly equation_residual_of(const AnsatzStructure& s, const FormalPoly& a,
                                const FormalPoly& b, const std::string& label) {
    for (const EquationResidual& r : equation_residuals(s, a, b)) {
        if (r.label == label) return r.value;
    }
    throw CatalogError("unknown equation label '" + label + "'");
}

} // namespace

FormalPoly h_consistency_general(const FormalPoly& a, const FormalPoly& c,
                                 const FormalPoly& h) {
    const FormalPoly D = fp_del();
    const FormalPoly Lm = fp_lam();
    const FormalPoly M = fp_mu();
    const FormalPoly one(1);
    const FormalPoly am1 = a - one;
    const FormalPoly tot = D + Lm + M + c;

    FormalPoly r = ((am1 * Lm - M) * (am1 * D - Lm - M) -
                    (D + c) * (am1 * (Lm + D) - M)) *
                   h_at(h, Lm + M + D);
    r -= c * (D + a * Lm) * h_at(h, -D);
    r += tot * (am1 * Lm - M) * h_at(h, Lm + M);
    r += c * (D + Lm) * h_at(h, -Lm - D);
    r += M * tot * h_at(h, M);
    r -= c * (a * D + Lm) * h_at(h, -Lm);
    r += tot * (am1 * D - M) * h_at(h, M + D);
    return r;
}

FormalPoly h_consistency_univariate(const FormalPoly& a, const FormalPoly& c,
                                    const FormalPoly& h) {
    const FormalPoly D = fp_del();
    const FormalPoly one(1);
    const FormalPoly two(2);
    const FormalPoly three(3);

    FormalPoly r =
        ((a * a - three * a + one) * D - (two * a - one) * c) * h_at(h, D);
    r += a * (D + c) * h_at(h, FormalPoly());
    r -= (two * a + three) * (D + c) * h_at(h, -D);
    r += two * (D + c) * h_at(h, FormalPoly(-2) * D);
    return r;
}

FormalPoly h1_numerator(const FormalPoly& a, const FormalPoly& c,
                        const FormalPoly& h) {
    const FormalPoly D = fp_del();
    const FormalPoly Lm = fp_lam();
    const FormalPoly one(1);
    return ((a - one) * D - Lm) * h_at(h, Lm + D) - c * h_at(h, -D) +
           (Lm + D + c) * h_at(h, Lm);
}

FormalPoly h1_divisibility_remainder(const FormalPoly& a, const FormalPoly& c,
                                     const FormalPoly& h) {
    return h1_numerator(a, c, h).substitute(FormalVar::Del, -c);
}

namespace {

std::vector<RefutationWitness> build_witnesses() {
    const FormalPoly D = fp_del();
    const FormalPoly Lm = fp_lam();
    const FormalPoly one(1);
    const FormalPoly nu = fp_nu();

    std::vector<RefutationWitness> out;

    {
        // The skew-forced W-action alone (g2 dropped) is not a structure.
        AnsatzStructure s;
        s.f = D + Lm + P("c");
        s.h2 = (P("a") - one) * D + P("a") * Lm - P("b");
        out.push_back(
            {"W1",
             "vanishing g2 with the skew-forced W-action "
             "h2 = (a-1)*del + a*lam - b",
             "f2", equation_residual_of(s, P("a"), P("b"), "f2"),
             {{"a", 0}, {"b", 0}, {"c", 0}, {"lam", 1}, {"mu", 1}, {"del", 1}},
             Rational(-1)});
    }
    {
        // Constant k1 survives on the b = 0, c = 0 line only when a = 1
        // or a = 1/2; elsewhere it violates f5.
        AnsatzStructure s;
        s.f = D + Lm;
        s.g2 = D + P("a") * Lm;
        s.k1 = P("e0") * (FormalPoly(2) * P("a") - one);
        out.push_back({"W2",
                       "constant k1 = e0*(2a - 1) on the b = 0, c = 0 line "
                       "with trivial W-action",
                       "f5",
                       equation_residual_of(s, P("a"), FormalPoly(), "f5"),
                       {{"a", 0}, {"e0", 1}, {"lam", 1}, {"mu", 1}, {"del", 1}},
                       Rational(2)});
    }
    out.push_back({"W3",
                   "cubic datum h(x) = x^3 at a = 2 in the constant-W-action "
                   "branch",
                   "h_consistency_general",
                   h_consistency_general(FormalPoly(2), one, nu.pow(3)),
                   {{"lam", 1}, {"mu", 1}, {"del", 1}},
                   Rational(-60)});
    out.push_back({"W4",
                   "quadratic datum h(x) = x^2 at a = 1 in the "
                   "constant-W-action branch",
                   "h_consistency_general",
                   h_consistency_general(one, one, nu.pow(2)),
                   {{"lam", 1}, {"mu", 1}, {"del", 1}},
                   Rational(12)});
    {
        // Constant-W-action forced components at a = 3, b = 0 with the
        // free quadratic tail of k2 set to zero.
        AnsatzStructure s;
        s.f = D + Lm + one;
        s.g2 = D + FormalPoly(3) * Lm + one;
        s.h2 = one;
        s.h1 = FormalPoly(2) * D * D + FormalPoly(3) * D + FormalPoly(3) * Lm +
               FormalPoly(3) * D * Lm + Lm * Lm;
        s.g1 = Lm * Lm - FormalPoly(3) * Lm - Lm * D;
        s.k2 = -(Lm * Lm) - D * Lm;
        out.push_back({"W5",
                       "constant-W-action candidate at a = 3, b = 0 with the "
                       "free quadratic tail of k2 set to zero",
                       "f6",
                       equation_residual_of(s, FormalPoly(3), FormalPoly(),
                                            "f6"),
                       {{"lam", 1}, {"mu", 1}, {"del", 1}},
                       Rational(-7)});
    }
    out.push_back({"W6",
                   "linear datum h(x) = h1*x at a = 1: the forced "
                   "L-component of W lam L has a pole at del = -c",
                   "h1_divisibility",
                   h1_divisibility_remainder(one, P("c"), P("h1") * nu),
                   {{"c", 1}, {"h1", 1}, {"lam", 2}},
                   Rational(1)});
    {
        // Constant-W-action candidate at a = 2, b = 0; the symmetric
        // quadratic k1 satisfies f13 but not f5.
        AnsatzStructure s;
        s.f = D + Lm + one;
        s.g2 = D + FormalPoly(2) * Lm + one;
        s.h2 = one;
        s.h1 = Lm + D;
        s.g1 = -Lm;
        s.k2 = one;
        s.k1 = -(Lm * Lm) - Lm * D - D * D;
        out.push_back({"W7",
                       "constant-W-action candidate at a = 2, b = 0 with "
                       "symmetric quadratic k1 and constant k2",
                       "f5",
                       equation_residual_of(s, FormalPoly(2), FormalPoly(),
                                            "f5"),
                       {{"lam", 1}, {"mu", 0}, {"del", 0}},
                       Rational(2)});
    }
    {
        // Shifted-W-action candidate at a = 1, c = b with linear datum d0;
        // the forced k2 is not reflection symmetric.
        AnsatzStructure s;
        s.f = D + Lm + P("b");
        s.g2 = D + FormalPoly(2) * P("b");
        s.h2 = D + Lm + P("b");
        s.h1 = P("d0") * (Lm + D + P("b"));
        s.g1 = P("d0") * (P("b") - Lm);
        s.k2 = -P("d0") * (Lm + D + P("b"));
        s.k1 = -(P("d0") * P("d0")) * (Lm + D + P("b"));
        out.push_back(
            {"W8",
             "shifted-W-action candidate at a = 1, c = b with linear datum "
             "d0, before the symmetry constraints",
             "f14", equation_residual_of(s, one, P("b"), "f14"),
             {{"b", 1}, {"d0", 1}, {"lam", 1}, {"mu", 0}, {"del", 1}},
             Rational(-3)});
    }
    out.push_back({"W9",
                   "quartic datum h(x) = x^4 at a = 5 in the shifted-W-action "
                   "branch",
                   "h_consistency_univariate",
                   h_consistency_univariate(FormalPoly(5), P("c"), nu.pow(4)),
                   {{"c", 1}, {"del", 1}},
                   Rational(40)});
    out.push_back({"W10",
                   "cubic datum h(x) = x^3 at a = 4 in the shifted-W-action "
                   "branch",
                   "h_consistency_univariate",
                   h_consistency_univariate(FormalPoly(4), P("c"), nu.pow(3)),
                   {{"c", 1}, {"del", 1}},
                   Rational(-12)});
    {
        // Shifted-W-action candidate at a = 3, b = 0 with the free tail of
        // k2 set to zero.
        AnsatzStructure s;
        s.f = D + Lm + one;
        s.g2 = D + FormalPoly(2) * Lm + one;
        s.h2 = D + Lm + one;
        s.h1 = (Lm + D) * (Lm + D + one);
        s.g1 = Lm * (Lm - one);
        s.k2 = -(Lm * Lm) - Lm * D;
        out.push_back({"W11",
                       "shifted-W-action candidate at a = 3, b = 0 with the "
                       "free tail of k2 set to zero",
                       "f6",
                       equation_residual_of(s, FormalPoly(3), FormalPoly(),
                                            "f6"),
                       {{"lam", 1}, {"mu", 2}, {"del", 1}},
                       Rational(-4)});
    }
    {
        // Extending the boundary value k2(lam, 0) = k0 - h1*lam as a
        // del-independent polynomial breaks reflection symmetry.
        AnsatzStructure s;
        s.f = D + Lm;
        s.g2 = D;
        s.h2 = D + Lm;
        s.h1 = P("h1") * (Lm + D);
        s.g1 = -P("h1") * Lm;
        s.k2 = P("k0") - P("h1") * Lm;
        s.k1 = -P("h1");
        out.push_back(
            {"W12",
             "boundary extension k2 = k0 - h1*lam independent of del at "
             "a = 1, b = 0, c = 0",
             "f14", equation_residual_of(s, one, FormalPoly(), "f14"),
             {{"h1", 1}, {"k0", 1}, {"lam", 1}, {"mu", 0}, {"del", 0}},
             Rational(-2)});
    }
    return out;
}

} // namespace

const std::vector<RefutationWitness>& refutation_witnesses() {
    static const std::vector<RefutationWitness> table = build_witnesses();
    return table;
}

std::vector<WitnessCheck> verify_refutation_witnesses() {
    std::vector<WitnessCheck> out;
    for (const RefutationWitness& w : refutation_witnesses()) {
        const Rational actual = w.residual.eval(w.point);
        if (actual == 0) {
            throw StaleWitnessError(
                "witness " + w.id +
                " no longer refutes: its residual evaluates to zero at the "
                "frozen point");
        }
        if (actual != w.expected) {
            throw StaleWitnessError("witness " + w.id +
                                    " is stale: expected " +
                                    rat_to_string(w.expected) + ", got " +
                                    rat_to_string(actual));
        }
        out.push_back(WitnessCheck{w.id, actual, w.expected, true});
    }
    return out;
}

} // namespace lca
