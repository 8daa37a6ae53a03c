/*
 * dsl_print.cpp
 * -------------
 * Canonical `.lsca` rendering of a conformal algebra. The output parses
 * and elaborates back to the same table; printing that elaboration
 * reproduces the text byte for byte.
 */
#include "lca/dsl.hpp"

#include <sstream>

namespace lca {

namespace {

const char* kind_keyword(AlgebraKind kind) {
    switch (kind) {
    case AlgebraKind::Lie: return "lie";
    case AlgebraKind::LeftSymmetric: return "lsc";
    case AlgebraKind::Raw: return "raw";
    }
    return "raw";
}

/// "" for coefficient 1, "-" for -1, otherwise "<poly>*" with the
/// polynomial parenthesized when it has several terms.
std::string poly_factor(const FormalPoly& p) {
    if (p.is_scalar()) {
        const Scalar s = p.scalar_value();
        if (s.is_one()) return "";
        if ((-s).is_one()) return "-";
    }
    RenderOptions options;
    options.unicode_vars = false;
    options.max_terms = 0;
    std::string text = p.to_string(options);
    if (p.term_count() > 1) text = "(" + text + ")";
    return text + "*";
}

void check_printable(const ConformalAlgebra& A, const FormalPoly& p,
                     const std::string& pair) {
    for (const auto& [exps, coeff] : p.terms()) {
        (void)exps;
        if (!coeff.is_polynomial()) {
            throw Error("table entry for " + pair + " of algebra '" +
                        A.name() + "' uses the parameter fraction '" +
                        coeff.to_string() +
                        "', which has no source form; specialize the "
                        "parameters first");
        }
    }
}

std::string entry_source(const ConformalAlgebra& A, const Element& e,
                         const std::string& pair) {
    std::vector<std::string> pieces;
    for (GeneratorId k = 0; k < A.rank(); ++k) {
        const FormalPoly& component = e.components[k];
        if (component.is_zero()) continue;
        check_printable(A, component, pair);
        pieces.push_back(poly_factor(component) + A.generator_name(k));
    }
    if (pieces.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i == 0) {
            out = pieces[i];
        } else if (pieces[i].front() == '-') {
            out += " - " + pieces[i].substr(1);
        } else {
            out += " + " + pieces[i];
        }
    }
    return out;
}

} // namespace

std::string print_algebra(const ConformalAlgebra& A) {
    std::ostringstream out;
    out << "algebra " << A.name() << " : " << kind_keyword(A.kind())
        << " {\n";

    if (!A.params().empty()) {
        out << "  params ";
        for (std::size_t i = 0; i < A.params().size(); ++i) {
            if (i != 0) out << ", ";
            out << symbol_name(A.params()[i].id);
            if (A.params()[i].nonzero) out << " nonzero";
        }
        out << ";\n";
    }

    out << "  generators ";
    for (std::size_t i = 0; i < A.rank(); ++i) {
        if (i != 0) out << ", ";
        out << A.generator_name(i);
    }
    out << ";\n";

    out << "  bracket {\n";
    bool any_zero = false;
    for (GeneratorId x = 0; x < A.rank(); ++x) {
        for (GeneratorId y = 0; y < A.rank(); ++y) {
            const Element& e = A.entry(x, y);
            if (e.is_zero()) {
                any_zero = true;
                continue;
            }
            const std::string pair =
                "[" + A.generator_name(x) + " _ " + A.generator_name(y) + "]";
            out << "    " << pair << " = " << entry_source(A, e, pair)
                << ";\n";
        }
    }
    if (any_zero) out << "    default zero;\n";
    out << "  }\n";
    out << "}\n";
    return out.str();
}

} // namespace lca
