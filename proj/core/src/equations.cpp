/*
 * equations.cpp
 * -------------
 * The fourteen functional equations f1..f14 on the rank-2 structure
 * ansatz, written as residuals (left side minus right side). Their
 * simultaneous vanishing characterizes left-symmetric structures whose
 * commutator is the rank-2 Lie bracket with parameters (a, b); the
 * meta_consistency check compares that characterization against the
 * generic axiom machinery on every call.
 *
 * Components are stored as functions of (lam, del); `at(p, x, y)`
 * instantiates a component at argument pair (x, y) by simultaneous
 * substitution, e.g. at(h1, mu, lam + del) for h1(mu, lam + del).
 */
#include "lca/catalog.hpp"

#include "lca/errors.hpp"

namespace lca {

namespace {

FormalPoly at(const FormalPoly& component, const FormalPoly& first,
              const FormalPoly& second) {
    std::array<std::optional<FormalPoly>, kFormalVarCount> repl;
    repl[static_cast<int>(FormalVar::Lam)] = first;
    repl[static_cast<int>(FormalVar::Del)] = second;
    return component.substitute_many(repl);
}

void require_scalar_coefficient(const FormalPoly& p, const char* what) {
    if (!p.is_scalar()) {
        throw CatalogError(std::string(what) +
                           " must be a scalar polynomial in the parameters "
                           "(no formal variables)");
    }
}

} // namespace

const std::vector<std::string>& equation_labels() {
    static const std::vector<std::string> labels = {
        "f1", "f2", "f3", "f4", "f5", "f6", "f7",
        "f8", "f9", "f10", "f11", "f12", "f13", "f14"};
    return labels;
}

std::vector<EquationResidual> equation_residuals(const AnsatzStructure& s,
                                                 const FormalPoly& a,
                                                 const FormalPoly& b) {
    require_scalar_coefficient(a, "the Lie-bracket parameter a");
    require_scalar_coefficient(b, "the Lie-bracket parameter b");

    const FormalPoly D = fp_del();
    const FormalPoly Lm = fp_lam();
    const FormalPoly M = fp_mu();

    const FormalPoly c = s.f - D - Lm;
    if (!c.is_scalar()) {
        throw CatalogError(
            "the ansatz L-L product must have the form (del + lam + c) L "
            "with a scalar c");
    }

    const FormalPoly& g1 = s.g1;
    const FormalPoly& g2 = s.g2;
    const FormalPoly& h1 = s.h1;
    const FormalPoly& h2 = s.h2;
    const FormalPoly& k1 = s.k1;
    const FormalPoly& k2 = s.k2;

    // Recurring coefficient polynomials.
    const FormalPoly w_lhs = -Lm - M + a * Lm + b; // (a-1)lam - mu + b
    const FormalPoly fc_l = D + Lm + c;            // f(lam, del)
    const FormalPoly fc_lm = D + M + Lm + c;       // f at total argument
    const FormalPoly fc_m = D + M + c;             // f(mu, del)
    const FormalPoly reflect = -Lm - D;            // lam -> -lam-del

    std::vector<EquationResidual> out;
    out.reserve(14);

    out.push_back({"f1", w_lhs * at(h1, Lm + M, D) -
                             (at(h1, M, Lm + D) * fc_l +
                              at(h2, M, Lm + D) * at(g1, Lm, D) -
                              fc_lm * at(h1, M, D))});

    out.push_back({"f2", w_lhs * at(h2, Lm + M, D) -
                             (at(h2, M, Lm + D) * at(g2, Lm, D) -
                              fc_lm * at(h2, M, D))});

    out.push_back({"f3", (Lm - M) * at(g1, Lm + M, D) -
                             (at(g1, M, Lm + D) * fc_l +
                              at(g2, M, Lm + D) * at(g1, Lm, D) -
                              at(g1, Lm, M + D) * fc_m -
                              at(g2, Lm, M + D) * at(g1, M, D))});

    out.push_back({"f4", (Lm - M) * at(g2, Lm + M, D) -
                             (at(g2, M, Lm + D) * at(g2, Lm, D) -
                              at(g2, Lm, M + D) * at(g2, M, D))});

    out.push_back({"f5", w_lhs * at(k1, Lm + M, D) -
                             (at(k1, M, Lm + D) * fc_l +
                              at(k2, M, Lm + D) * at(g1, Lm, D) -
                              at(g1, Lm, M + D) * at(h1, M, D) -
                              at(g2, Lm, M + D) * at(k1, M, D))});

    out.push_back({"f6", w_lhs * at(k2, Lm + M, D) -
                             (at(k2, M, Lm + D) * at(g2, Lm, D) -
                              at(g1, Lm, M + D) * at(h2, M, D) -
                              at(g2, Lm, M + D) * at(k2, M, D))});

    out.push_back({"f7", at(h1, M, Lm + D) * at(h1, Lm, D) +
                             at(h2, M, Lm + D) * at(k1, Lm, D) -
                             at(h1, Lm, M + D) * at(h1, M, D) -
                             at(h2, Lm, M + D) * at(k1, M, D)});

    out.push_back({"f8", at(h1, M, Lm + D) * at(h2, Lm, D) +
                             at(h2, M, Lm + D) * at(k2, Lm, D) -
                             at(h1, Lm, M + D) * at(h2, M, D) -
                             at(h2, Lm, M + D) * at(k2, M, D)});

    out.push_back({"f9", at(k1, M, Lm + D) * at(h1, Lm, D) +
                             at(k2, M, Lm + D) * at(k1, Lm, D) -
                             at(k1, Lm, M + D) * at(h1, M, D) -
                             at(k2, Lm, M + D) * at(k1, M, D)});

    out.push_back({"f10", at(k1, M, Lm + D) * at(h2, Lm, D) +
                              at(k2, M, Lm + D) * at(k2, Lm, D) -
                              at(k1, Lm, M + D) * at(h2, M, D) -
                              at(k2, Lm, M + D) * at(k2, M, D)});

    out.push_back({"f11", g1 - at(h1, reflect, D)});

    out.push_back({"f12", g2 - at(h2, reflect, D) - (D + a * Lm + b)});

    out.push_back({"f13", k1 - at(k1, reflect, D)});

    out.push_back({"f14", k2 - at(k2, reflect, D)});

    return out;
}

MetaConsistency meta_consistency(const AnsatzStructure& s, const FormalPoly& a,
                                 const FormalPoly& b,
                                 const std::vector<ParamDecl>& params) {
    MetaConsistency result;

    result.equations_zero = true;
    for (const EquationResidual& r : equation_residuals(s, a, b)) {
        if (!r.is_zero()) {
            result.equations_zero = false;
            break;
        }
    }

    const ConformalAlgebra A =
        ansatz_to_algebra(s, "ansatz", params, AlgebraKind::Raw);

    result.identities_zero = true;
    for (const Residual& r : residuals_left_symmetric(A)) {
        if (!r.is_zero()) {
            result.identities_zero = false;
            break;
        }
    }

    require_scalar_coefficient(a, "the Lie-bracket parameter a");
    require_scalar_coefficient(b, "the Lie-bracket parameter b");
    const Scalar sa = a.scalar_value();
    const Scalar sb = b.scalar_value();
    if (!sa.is_polynomial() || !sb.is_polynomial()) {
        throw CatalogError(
            "the Lie-bracket parameters (a, b) must be polynomial scalars");
    }
    const ConformalAlgebra target = make_W(sa.num(), sb.num(), params);
    result.commutator_matches = is_compatible_structure(target, A).compatible;

    result.consistent =
        result.equations_zero ==
        (result.identities_zero && result.commutator_matches);
    return result;
}

} // namespace lca
