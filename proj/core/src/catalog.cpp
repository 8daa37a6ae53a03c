/*
 * catalog.cpp
 * -----------
 * Built-in algebra factories, ansatz <-> table conversion, and the eleven
 * solution families with their parameter constraints.
 */
#include "lca/catalog.hpp"

#include "lca/errors.hpp"

#include <utility>

namespace lca {

namespace {

FormalPoly P(const std::string& name) { return FormalPoly::param(name); }

Element elem1(FormalPoly l) {
    Element e(1);
    e.components[0] = std::move(l);
    return e;
}

Element elem2(FormalPoly l, FormalPoly w) {
    Element e(2);
    e.components[0] = std::move(l);
    e.components[1] = std::move(w);
    return e;
}

} // namespace

ConformalAlgebra make_virasoro() {
    const FormalPoly entry = fp_del() + FormalPoly(2) * fp_lam();
    return ConformalAlgebra("vir", AlgebraKind::Lie, {"L"}, {},
                            {elem1(entry)});
}

ConformalAlgebra make_vir_lsc() {
    const FormalPoly entry = fp_del() + fp_lam() + P("c");
    return ConformalAlgebra("vir_lsc", AlgebraKind::LeftSymmetric, {"L"},
                            {param_decl("c")}, {elem1(entry)});
}

ConformalAlgebra make_W(const ParamPoly& a, const ParamPoly& b,
                        std::vector<ParamDecl> params) {
    const FormalPoly D = fp_del();
    const FormalPoly Lm = fp_lam();
    const FormalPoly fa{Scalar(a)};
    const FormalPoly fb{Scalar(b)};
    std::vector<Element> table;
    table.push_back(elem2(D + FormalPoly(2) * Lm, FormalPoly()));
    table.push_back(elem2(FormalPoly(), D + fa * Lm + fb));
    table.push_back(
        elem2(FormalPoly(), (fa - FormalPoly(1)) * D + fa * Lm - fb));
    table.push_back(elem2(FormalPoly(), FormalPoly()));
    return ConformalAlgebra("wab", AlgebraKind::Lie, {"L", "W"},
                            std::move(params), std::move(table));
}

ConformalAlgebra make_W() {
    return make_W(ParamPoly::symbol("a"), ParamPoly::symbol("b"),
                  {param_decl("a"), param_decl("b")});
}

ConformalAlgebra make_W(const Rational& a, const Rational& b) {
    return make_W(ParamPoly(a), ParamPoly(b), {});
}

ConformalAlgebra ansatz_to_algebra(const AnsatzStructure& s, std::string name,
                                   std::vector<ParamDecl> params,
                                   AlgebraKind kind) {
    std::vector<Element> table;
    table.push_back(elem2(s.f, FormalPoly()));
    table.push_back(elem2(s.g1, s.g2));
    table.push_back(elem2(s.h1, s.h2));
    table.push_back(elem2(s.k1, s.k2));
    return ConformalAlgebra(std::move(name), kind, {"L", "W"},
                            std::move(params), std::move(table));
}

AnsatzStructure ansatz_from_algebra(const ConformalAlgebra& A) {
    if (A.rank() != 2 || A.generator_name(0) != "L" ||
        A.generator_name(1) != "W") {
        throw CatalogError("algebra '" + A.name() +
                           "' is not a rank-2 table over generators (L, W)");
    }
    if (!A.entry(0, 0).components[1].is_zero()) {
        throw CatalogError("algebra '" + A.name() +
                           "' has a W component in its L-L product; the "
                           "structure ansatz requires L lam L = f * L");
    }
    AnsatzStructure s;
    s.f = A.entry(0, 0).components[0];
    s.g1 = A.entry(0, 1).components[0];
    s.g2 = A.entry(0, 1).components[1];
    s.h1 = A.entry(1, 0).components[0];
    s.h2 = A.entry(1, 0).components[1];
    s.k1 = A.entry(1, 1).components[0];
    s.k2 = A.entry(1, 1).components[1];
    return s;
}

namespace {

std::vector<Family> build_families() {
    const FormalPoly D = fp_del();
    const FormalPoly Lm = fp_lam();
    const FormalPoly one(1);
    const ParamPoly pb = ParamPoly::symbol("b");
    const ParamPoly pc = ParamPoly::symbol("c");
    const ParamPoly pd = ParamPoly::symbol("d");
    const ParamPoly ph1 = ParamPoly::symbol("h1");
    const ParamPoly pk2 = ParamPoly::symbol("k2");

    std::vector<Family> out;

    {
        Family f;
        f.id = "T1";
        f.summary = "g2 = del + a*lam + b; every other mixed product zero "
                    "(a, b, c free)";
        f.free_params = {param_decl("a"), param_decl("b"), param_decl("c")};
        f.components.f = D + Lm + P("c");
        f.components.g2 = D + P("a") * Lm + P("b");
        f.witt_a = P("a");
        f.witt_b = P("b");
        out.push_back(std::move(f));
    }
    {
        Family f;
        f.id = "T2";
        f.summary = "g2 = del + a*lam + b + c, h2 = c (c nonzero)";
        f.free_params = {param_decl("a"), param_decl("b"),
                         param_decl("c", true)};
        f.components.f = D + Lm + P("c");
        f.components.g2 = D + P("a") * Lm + P("b") + P("c");
        f.components.h2 = P("c");
        f.witt_a = P("a");
        f.witt_b = P("b");
        out.push_back(std::move(f));
    }
    {
        Family f;
        f.id = "T3";
        f.summary = "g2 = del + (a-1)*lam + b + c, h2 = del + lam + c";
        f.free_params = {param_decl("a"), param_decl("b"), param_decl("c")};
        f.components.f = D + Lm + P("c");
        f.components.g2 = D + (P("a") - one) * Lm + P("b") + P("c");
        f.components.h2 = D + Lm + P("c");
        f.witt_a = P("a");
        f.witt_b = P("b");
        out.push_back(std::move(f));
    }
    {
        Family f;
        f.id = "T4";
        f.summary = "a = 1, c = 2b: g2 = del + lam + b, constant k1 (nonzero)";
        f.free_params = {param_decl("b"), param_decl("k1", true)};
        f.components.f = D + Lm + FormalPoly(2) * P("b");
        f.components.g2 = D + Lm + P("b");
        f.components.k1 = P("k1");
        f.witt_a = one;
        f.witt_b = P("b");
        out.push_back(std::move(f));
    }
    {
        Family f;
        f.id = "T5";
        f.summary = "a = 1, c = b (nonzero): g1 = h1 = d, g2 = del + lam + 2b, "
                    "h2 = b, k1 = -d^2/b, k2 = -d (d nonzero)";
        f.free_params = {param_decl("b", true), param_decl("d", true)};
        f.components.f = D + Lm + P("b");
        f.components.g1 = P("d");
        f.components.g2 = D + Lm + FormalPoly(2) * P("b");
        f.components.h1 = P("d");
        f.components.h2 = P("b");
        f.components.k1 = FormalPoly(Scalar(-(pd * pd), pb));
        f.components.k2 = -P("d");
        f.witt_a = one;
        f.witt_b = P("b");
        out.push_back(std::move(f));
    }
    {
        Family f;
        f.id = "T6";
        f.summary = "a = 1, b = 0: g2 = del + lam, constant k2 (nonzero)";
        f.free_params = {param_decl("c"), param_decl("k2", true)};
        f.components.f = D + Lm + P("c");
        f.components.g2 = D + Lm;
        f.components.k2 = P("k2");
        f.witt_a = one;
        f.witt_b = FormalPoly();
        out.push_back(std::move(f));
    }
    {
        Family f;
        f.id = "T7";
        f.summary = "a = 1, b = 0, c = 0: g2 = del + lam, constant k1 and k2 "
                    "(both nonzero)";
        f.free_params = {param_decl("k1", true), param_decl("k2", true)};
        f.components.f = D + Lm;
        f.components.g2 = D + Lm;
        f.components.k1 = P("k1");
        f.components.k2 = P("k2");
        f.witt_a = one;
        f.witt_b = FormalPoly();
        out.push_back(std::move(f));
    }
    {
        Family f;
        f.id = "T8";
        f.summary = "a = 1, b = 0, c nonzero: g1 = h1 constant (nonzero), "
                    "g2 = del + lam, k1 = h1*(h1 - k2)/c, constant k2";
        f.free_params = {param_decl("c", true), param_decl("h1", true),
                         param_decl("k2")};
        f.components.f = D + Lm + P("c");
        f.components.g1 = P("h1");
        f.components.g2 = D + Lm;
        f.components.h1 = P("h1");
        f.components.k1 = FormalPoly(Scalar(ph1 * (ph1 - pk2), pc));
        f.components.k2 = P("k2");
        f.witt_a = one;
        f.witt_b = FormalPoly();
        out.push_back(std::move(f));
    }
    {
        Family f;
        f.id = "T9";
        f.summary = "a = 1, b = 0, c = 0: g1 = h1 constant, g2 = del + lam, "
                    "constant k1 (h1, k1 nonzero), k2 = h1";
        f.free_params = {param_decl("h1", true), param_decl("k1", true)};
        f.components.f = D + Lm;
        f.components.g1 = P("h1");
        f.components.g2 = D + Lm;
        f.components.h1 = P("h1");
        f.components.k1 = P("k1");
        f.components.k2 = P("h1");
        f.witt_a = one;
        f.witt_b = FormalPoly();
        out.push_back(std::move(f));
    }
    {
        Family f;
        f.id = "T10";
        f.summary = "a = 1, b = 0, c nonzero: g2 = del + lam + c, h2 = c, "
                    "constant k1 and k2 (not both zero)";
        f.free_params = {param_decl("c", true), param_decl("k1"),
                         param_decl("k2")};
        f.not_both_zero = {{"k1", "k2"}};
        f.components.f = D + Lm + P("c");
        f.components.g2 = D + Lm + P("c");
        f.components.h2 = P("c");
        f.components.k1 = P("k1");
        f.components.k2 = P("k2");
        f.witt_a = one;
        f.witt_b = FormalPoly();
        out.push_back(std::move(f));
    }
    {
        Family f;
        f.id = "T11";
        f.summary = "a = 1, b = 0: g2 = del + c, h2 = del + lam + c, "
                    "constant k2 (nonzero)";
        f.free_params = {param_decl("c"), param_decl("k2", true)};
        f.components.f = D + Lm + P("c");
        f.components.g2 = D + P("c");
        f.components.h2 = D + Lm + P("c");
        f.components.k2 = P("k2");
        f.witt_a = one;
        f.witt_b = FormalPoly();
        out.push_back(std::move(f));
    }
    return out;
}

/// Check an assignment against a family's declared parameters and
/// constraints.
void validate_assignment(const Family& f,
                         const std::map<std::string, Rational>& values) {
    for (const auto& [name, value] : values) {
        const SymbolId id = intern_symbol(name);
        bool found = false;
        for (const ParamDecl& p : f.free_params) {
            if (p.id != id) continue;
            found = true;
            if (p.nonzero && value == 0) {
                throw InvalidParameterError("parameter '" + name +
                                            "' of family '" + f.id +
                                            "' must be nonzero");
            }
        }
        if (!found) {
            throw InvalidParameterError("family '" + f.id +
                                        "' has no parameter '" + name + "'");
        }
    }
    for (const auto& [first, second] : f.not_both_zero) {
        auto i = values.find(first);
        auto j = values.find(second);
        if (i != values.end() && j != values.end() && i->second == 0 &&
            j->second == 0) {
            throw InvalidParameterError("parameters '" + first + "' and '" +
                                        second + "' of family '" + f.id +
                                        "' must not both be zero");
        }
    }
}

ConformalAlgebra apply_assignment(ConformalAlgebra A,
                                  const std::map<std::string, Rational>& values) {
    for (const auto& [name, value] : values) {
        A = A.specialize(name, value);
    }
    return A;
}

} // namespace

const std::vector<Family>& families() {
    static const std::vector<Family> table = build_families();
    return table;
}

const Family& family(const std::string& id) {
    for (const Family& f : families()) {
        if (f.id == id) return f;
    }
    throw CatalogError("unknown family '" + id +
                       "'; expected one of T1..T11");
}

ConformalAlgebra family_algebra(const Family& f) {
    return ansatz_to_algebra(f.components, f.id, f.free_params,
                             AlgebraKind::LeftSymmetric);
}

ConformalAlgebra family_algebra(const Family& f,
                                const std::map<std::string, Rational>& values) {
    validate_assignment(f, values);
    return apply_assignment(family_algebra(f), values);
}

ConformalAlgebra family_witt_target(const Family& f) {
    const Scalar a = f.witt_a.scalar_value();
    const Scalar b = f.witt_b.scalar_value();
    if (!f.witt_a.is_scalar() || !f.witt_b.is_scalar() || !a.is_polynomial() ||
        !b.is_polynomial()) {
        throw CatalogError("family '" + f.id +
                           "' has a non-polynomial Lie-bracket target");
    }
    return make_W(a.num(), b.num(), f.free_params);
}

ConformalAlgebra family_witt_target(
    const Family& f, const std::map<std::string, Rational>& values) {
    validate_assignment(f, values);
    return apply_assignment(family_witt_target(f), values);
}

} // namespace lca
