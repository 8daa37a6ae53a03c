/*
 * corollary.cpp
 * -------------
 * Closed-form coefficient product tables for the eleven families, under
 * the uniform +1 shift, and the window verification comparing them
 * against mode products expanded from the lambda-bracket tables.
 */
#include "lca/coeff.hpp"

#include "lca/errors.hpp"

#include <sstream>

namespace lca {

namespace {

constexpr GeneratorId kL = 0;
constexpr GeneratorId kW = 1;

Scalar sym(const char* name) { return Scalar::symbol(name); }
Scalar num(long v) { return Scalar(Rational(v)); }

/// c L_{m+n+1} - (n+1) L_{m+n}: the L-L product shared by most families.
CoeffElement ll_product(const Scalar& c, long m, long n) {
    CoeffElement out;
    out.add_term(CoeffBasisVector{kL, m + n + 1}, c);
    out.add_term(CoeffBasisVector{kL, m + n}, num(-(n + 1)));
    return out;
}

CoeffElement term(GeneratorId g, long index, const Scalar& coeff) {
    CoeffElement out;
    out.add_term(CoeffBasisVector{g, index}, coeff);
    return out;
}

} // namespace

CoeffElement corollary_product(const Family& f, GeneratorId x, long m,
                               GeneratorId y, long n) {
    if (x > 1 || y > 1) {
        throw Error("closed-form products are defined for generators L (0) "
                    "and W (1)");
    }
    const long lo = m + n;     // index of the degree-preserving coefficient
    const long hi = m + n + 1; // index of the degree-raising coefficient
    const Scalar nn = num(-(n + 1));
    CoeffElement out;

    if (f.id == "T1") {
        if (x == kL && y == kL) return ll_product(sym("c"), m, n);
        if (x == kL && y == kW) {
            out += term(kW, lo,
                        num(m + 1) * (sym("a") - num(1)) - num(n + 1));
            out += term(kW, hi, sym("b"));
        }
        return out; // W o L = W o W = 0
    }
    if (f.id == "T2") {
        if (x == kL && y == kL) return ll_product(sym("c"), m, n);
        if (x == kL && y == kW) {
            out += term(kW, lo,
                        num(m + 1) * (sym("a") - num(1)) - num(n + 1));
            out += term(kW, hi, sym("b") + sym("c"));
        }
        if (x == kW && y == kL) out += term(kW, hi, sym("c"));
        return out;
    }
    if (f.id == "T3") {
        if (x == kL && y == kL) return ll_product(sym("c"), m, n);
        if (x == kL && y == kW) {
            out += term(kW, lo,
                        num(m + 1) * (sym("a") - num(2)) - num(n + 1));
            out += term(kW, hi, sym("b") + sym("c"));
        }
        if (x == kW && y == kL) {
            out += term(kW, lo, nn);
            out += term(kW, hi, sym("c"));
        }
        return out;
    }
    if (f.id == "T4") {
        if (x == kL && y == kL) return ll_product(num(2) * sym("b"), m, n);
        if (x == kL && y == kW) {
            out += term(kW, lo, nn);
            out += term(kW, hi, sym("b"));
        }
        if (x == kW && y == kW) out += term(kL, hi, sym("k1"));
        return out;
    }
    if (f.id == "T5") {
        if (x == kL && y == kL) return ll_product(sym("b"), m, n);
        if (x == kL && y == kW) {
            out += term(kL, hi, sym("d"));
            out += term(kW, lo, nn);
            out += term(kW, hi, num(2) * sym("b"));
        }
        if (x == kW && y == kL) {
            out += term(kL, hi, sym("d"));
            out += term(kW, hi, sym("b"));
        }
        if (x == kW && y == kW) {
            const ParamPoly pb = ParamPoly::symbol("b");
            const ParamPoly pd = ParamPoly::symbol("d");
            out += term(kL, hi, Scalar(-(pd * pd), pb));
            out += term(kW, hi, -sym("d"));
        }
        return out;
    }
    if (f.id == "T6") {
        if (x == kL && y == kL) return ll_product(sym("c"), m, n);
        if (x == kL && y == kW) out += term(kW, lo, nn);
        if (x == kW && y == kW) out += term(kW, hi, sym("k2"));
        return out;
    }
    if (f.id == "T7") {
        if (x == kL && y == kL) return ll_product(Scalar(), m, n);
        if (x == kL && y == kW) out += term(kW, lo, nn);
        if (x == kW && y == kW) {
            out += term(kL, hi, sym("k1"));
            out += term(kW, hi, sym("k2"));
        }
        return out;
    }
    if (f.id == "T8") {
        if (x == kL && y == kL) return ll_product(sym("c"), m, n);
        if (x == kL && y == kW) {
            out += term(kL, hi, sym("h1"));
            out += term(kW, lo, nn);
        }
        if (x == kW && y == kL) out += term(kL, hi, sym("h1"));
        if (x == kW && y == kW) {
            const ParamPoly pc = ParamPoly::symbol("c");
            const ParamPoly ph1 = ParamPoly::symbol("h1");
            const ParamPoly pk2 = ParamPoly::symbol("k2");
            out += term(kL, hi, Scalar(ph1 * (ph1 - pk2), pc));
            out += term(kW, hi, sym("k2"));
        }
        return out;
    }
    if (f.id == "T9") {
        if (x == kL && y == kL) return ll_product(Scalar(), m, n);
        if (x == kL && y == kW) {
            out += term(kL, hi, sym("h1"));
            out += term(kW, lo, nn);
        }
        if (x == kW && y == kL) out += term(kL, hi, sym("h1"));
        if (x == kW && y == kW) {
            out += term(kL, hi, sym("k1"));
            out += term(kW, hi, sym("h1"));
        }
        return out;
    }
    if (f.id == "T10") {
        if (x == kL && y == kL) return ll_product(sym("c"), m, n);
        if (x == kL && y == kW) {
            out += term(kW, lo, nn);
            out += term(kW, hi, sym("c"));
        }
        if (x == kW && y == kL) out += term(kW, hi, sym("c"));
        if (x == kW && y == kW) {
            out += term(kL, hi, sym("k1"));
            out += term(kW, hi, sym("k2"));
        }
        return out;
    }
    if (f.id == "T11") {
        if (x == kL && y == kL) return ll_product(sym("c"), m, n);
        if (x == kL && y == kW) {
            out += term(kW, lo, num(-(m + n + 2)));
            out += term(kW, hi, sym("c"));
        }
        if (x == kW && y == kL) {
            out += term(kW, lo, nn);
            out += term(kW, hi, sym("c"));
        }
        if (x == kW && y == kW) out += term(kW, hi, sym("k2"));
        return out;
    }
    throw CatalogError("unknown family id '" + f.id + "'");
}

WindowReport verify_corollary(const Family& f,
                              const std::map<std::string, Rational>& values,
                              long window) {
    if (window < 0) {
        throw InvalidParameterError("window radius must be nonnegative");
    }
    const ConformalAlgebra A = family_algebra(f, values);

    WindowReport rep;
    rep.window = window;
    for (GeneratorId gx = 0; gx < 2; ++gx) {
        for (GeneratorId gy = 0; gy < 2; ++gy) {
            for (long m = -window; m <= window; ++m) {
                for (long n = -window; n <= window; ++n) {
                    const CoeffElement actual = coeff_product(
                        A, CoeffBasisVector{gx, m}, CoeffBasisVector{gy, n});
                    CoeffElement expected =
                        corollary_product(f, gx, m, gy, n);
                    for (const auto& [name, value] : values) {
                        expected = expected.substitute_param(name, value);
                    }
                    ++rep.checked;
                    if (actual != expected) {
                        std::ostringstream label;
                        label << A.generator_name(gx) << "[" << m << "] * "
                              << A.generator_name(gy) << "[" << n << "]";
                        rep.mismatches.push_back({label.str(),
                                                  expected.to_string(A),
                                                  actual.to_string(A)});
                    }
                }
            }
        }
    }
    rep.ok = rep.mismatches.empty();
    return rep;
}

} // namespace lca
