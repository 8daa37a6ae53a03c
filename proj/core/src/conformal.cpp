/*
 * conformal.cpp
 * -------------
 * Table validation, bracket evaluation, nested composition and the axiom
 * residuals for finite-rank conformal algebras.
 */
#include "lca/conformal.hpp"

#include "lca/errors.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace lca {

namespace {

void require_same_rank(const Element& a, const Element& b) {
    assert(a.rank() == b.rank() && "element rank mismatch");
    (void)a;
    (void)b;
}

/// Module elements (bracket operands) must have components in del only.
void require_module_element(const Element& e, const char* role) {
    for (const FormalPoly& c : e.components) {
        if (!c.uses_only({FormalVar::Del})) {
            throw Error(std::string("the ") + role +
                        " operand of a bracket must be a module element "
                        "with components in del only");
        }
    }
}

} // namespace

const char* algebra_kind_name(AlgebraKind kind) {
    switch (kind) {
    case AlgebraKind::Lie: return "lie";
    case AlgebraKind::LeftSymmetric: return "left_symmetric";
    case AlgebraKind::Raw: return "raw";
    }
    return "?";
}

ParamDecl param_decl(const std::string& name, bool nonzero) {
    return ParamDecl{intern_symbol(name), nonzero};
}

bool Element::is_zero() const {
    return std::all_of(components.begin(), components.end(),
                       [](const FormalPoly& p) { return p.is_zero(); });
}

Element Element::operator-() const {
    Element out(rank());
    for (std::size_t i = 0; i < rank(); ++i) out.components[i] = -components[i];
    return out;
}

Element Element::operator+(const Element& rhs) const {
    Element out = *this;
    out += rhs;
    return out;
}

Element Element::operator-(const Element& rhs) const {
    Element out = *this;
    out -= rhs;
    return out;
}

Element& Element::operator+=(const Element& rhs) {
    require_same_rank(*this, rhs);
    for (std::size_t i = 0; i < rank(); ++i) components[i] += rhs.components[i];
    return *this;
}

Element& Element::operator-=(const Element& rhs) {
    require_same_rank(*this, rhs);
    for (std::size_t i = 0; i < rank(); ++i) components[i] -= rhs.components[i];
    return *this;
}

Element Element::operator*(const FormalPoly& factor) const {
    Element out(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        out.components[i] = components[i] * factor;
    }
    return out;
}

Element Element::substitute(FormalVar var, const FormalPoly& replacement) const {
    Element out(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        out.components[i] = components[i].substitute(var, replacement);
    }
    return out;
}

Element Element::rename(FormalVar from, FormalVar to) const {
    Element out(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        out.components[i] = components[i].rename(from, to);
    }
    return out;
}

SymbolSet Element::symbols() const {
    SymbolSet out;
    for (const FormalPoly& c : components) {
        out = symbol_set_union(out, c.symbols());
    }
    return out;
}

ConformalAlgebra::ConformalAlgebra(std::string name, AlgebraKind kind,
                                   std::vector<std::string> generators,
                                   std::vector<ParamDecl> params,
                                   std::vector<Element> table)
    : name_(std::move(name)),
      kind_(kind),
      generators_(std::move(generators)),
      params_(std::move(params)),
      table_(std::move(table)) {
    if (generators_.empty()) {
        throw Error("algebra '" + name_ + "' declares no generators");
    }
    {
        std::set<std::string> seen;
        for (const std::string& g : generators_) {
            if (!seen.insert(g).second) {
                throw Error("algebra '" + name_ + "' declares generator '" + g +
                            "' twice");
            }
        }
    }
    {
        std::set<SymbolId> seen;
        for (const ParamDecl& p : params_) {
            if (!seen.insert(p.id).second) {
                throw Error("algebra '" + name_ + "' declares parameter '" +
                            symbol_name(p.id) + "' twice");
            }
        }
    }
    const std::size_t n = generators_.size();
    if (table_.size() != n * n) {
        throw Error("algebra '" + name_ + "' has " +
                    std::to_string(table_.size()) + " table entries; expected " +
                    std::to_string(n * n));
    }
    const SymbolSet allowed = universe();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Element& e = table_[i * n + j];
            if (e.rank() != n) {
                throw Error("algebra '" + name_ + "': bracket [" +
                            generators_[i] + " _ " + generators_[j] +
                            "] has wrong component count");
            }
            for (const FormalPoly& c : e.components) {
                if (!c.uses_only({FormalVar::Del, FormalVar::Lam})) {
                    throw Error("algebra '" + name_ + "': bracket [" +
                                generators_[i] + " _ " + generators_[j] +
                                "] uses a formal variable other than del/lam");
                }
            }
            for (SymbolId s : e.symbols()) {
                if (!symbol_set_contains(allowed, s)) {
                    throw SymbolUniverseError(
                        "algebra '" + name_ + "': bracket [" + generators_[i] +
                        " _ " + generators_[j] + "] uses undeclared parameter '" +
                        symbol_name(s) + "'");
                }
            }
        }
    }
}

GeneratorId ConformalAlgebra::generator(const std::string& name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i] == name) return static_cast<GeneratorId>(i);
    }
    throw UnknownGeneratorError("algebra '" + name_ + "' has no generator '" +
                                name + "'");
}

SymbolSet ConformalAlgebra::universe() const {
    SymbolSet out;
    for (const ParamDecl& p : params_) symbol_set_insert(out, p.id);
    return out;
}

const Element& ConformalAlgebra::entry(GeneratorId i, GeneratorId j) const {
    const std::size_t n = rank();
    assert(i < n && j < n);
    return table_[static_cast<std::size_t>(i) * n + j];
}

Element ConformalAlgebra::unit(GeneratorId g) const {
    assert(g < rank());
    Element out(rank());
    out.components[g] = FormalPoly(Scalar(1L));
    return out;
}

ConformalAlgebra ConformalAlgebra::specialize(const std::string& param,
                                              const Rational& value) const {
    const SymbolId id = intern_symbol(param);
    auto it = std::find_if(params_.begin(), params_.end(),
                           [&](const ParamDecl& p) { return p.id == id; });
    if (it == params_.end()) {
        throw InvalidParameterError("algebra '" + name_ +
                                    "' has no parameter '" + param + "'");
    }
    if (it->nonzero && value == 0) {
        throw InvalidParameterError("parameter '" + param + "' of algebra '" +
                                    name_ + "' must be nonzero");
    }
    std::vector<ParamDecl> remaining;
    for (const ParamDecl& p : params_) {
        if (p.id != id) remaining.push_back(p);
    }
    std::vector<Element> table;
    table.reserve(table_.size());
    for (const Element& e : table_) {
        Element mapped(e.rank());
        for (std::size_t i = 0; i < e.rank(); ++i) {
            mapped.components[i] =
                e.components[i].substitute_param(id, ParamPoly(value));
        }
        table.push_back(std::move(mapped));
    }
    return ConformalAlgebra(name_, kind_, generators_, std::move(remaining),
                            std::move(table));
}

Element bracket(const ConformalAlgebra& A, const Element& x, const Element& y) {
    assert(x.rank() == A.rank() && y.rank() == A.rank());
    require_module_element(x, "left");
    require_module_element(y, "right");

    const FormalPoly minus_lam = -fp_lam();
    const FormalPoly del_plus_lam = fp_del() + fp_lam();

    Element out(A.rank());
    for (GeneratorId i = 0; i < A.rank(); ++i) {
        const FormalPoly& p = x.components[i];
        if (p.is_zero()) continue;
        const FormalPoly p_at = p.substitute(FormalVar::Del, minus_lam);
        for (GeneratorId j = 0; j < A.rank(); ++j) {
            const FormalPoly& q = y.components[j];
            if (q.is_zero()) continue;
            const FormalPoly q_at = q.substitute(FormalVar::Del, del_plus_lam);
            out += A.entry(i, j) * (p_at * q_at);
        }
    }
    return out;
}

Element bracket_shifted(const ConformalAlgebra& A, const Element& x,
                        const Element& y, FormalVar out) {
    Element value = bracket(A, x, y);
    if (out == FormalVar::Lam) return value;
    return value.rename(FormalVar::Lam, out);
}

Element compose_left(const ConformalAlgebra& A, const Element& inner,
                     const Element& c, const FormalPoly& total) {
    assert(inner.rank() == A.rank() && c.rank() == A.rank());
    require_module_element(c, "right");

    Element out(A.rank());
    for (GeneratorId k = 0; k < A.rank(); ++k) {
        const FormalPoly& f = inner.components[k];
        if (f.is_zero()) continue;
        const FormalPoly coeff = f.substitute(FormalVar::Del, -total);
        const Element br =
            bracket(A, A.unit(k), c).substitute(FormalVar::Lam, total);
        out += br * coeff;
    }
    return out;
}

Element compose_right(const ConformalAlgebra& A, const Element& x,
                      FormalVar out, const Element& inner) {
    assert(x.rank() == A.rank() && inner.rank() == A.rank());
    require_module_element(x, "left");

    const FormalPoly del_plus_out = fp_del() + FormalPoly::variable(out);
    Element result(A.rank());
    for (GeneratorId k = 0; k < A.rank(); ++k) {
        const FormalPoly& f = inner.components[k];
        if (f.is_zero()) continue;
        const FormalPoly coeff = f.substitute(FormalVar::Del, del_plus_out);
        const Element br = bracket_shifted(A, x, A.unit(k), out);
        result += br * coeff;
    }
    return result;
}

Element nth_product(const ConformalAlgebra& A, const Element& x,
                    const Element& y, int n) {
    assert(n >= 0);
    const Element br = bracket(A, x, y);
    Element out(A.rank());
    const Scalar scale{factorial(n)};
    for (std::size_t i = 0; i < br.rank(); ++i) {
        out.components[i] = br.components[i].coeff_in(FormalVar::Lam, n) * scale;
    }
    return out;
}

std::vector<Residual> residuals_skew(const ConformalAlgebra& A) {
    const FormalPoly reflected = -fp_lam() - fp_del();
    std::vector<Residual> out;
    for (GeneratorId i = 0; i < A.rank(); ++i) {
        for (GeneratorId j = 0; j < A.rank(); ++j) {
            Element value =
                bracket(A, A.unit(i), A.unit(j)) +
                bracket(A, A.unit(j), A.unit(i)).substitute(FormalVar::Lam,
                                                            reflected);
            out.push_back(Residual{"skew(" + A.generator_name(i) + "," +
                                       A.generator_name(j) + ")",
                                   std::move(value)});
        }
    }
    return out;
}

std::vector<Residual> residuals_jacobi(const ConformalAlgebra& A) {
    const FormalPoly total = fp_lam() + fp_mu();
    std::vector<Residual> out;
    for (GeneratorId i = 0; i < A.rank(); ++i) {
        const Element a = A.unit(i);
        for (GeneratorId j = 0; j < A.rank(); ++j) {
            const Element b = A.unit(j);
            for (GeneratorId k = 0; k < A.rank(); ++k) {
                const Element c = A.unit(k);
                Element value =
                    compose_right(A, a, FormalVar::Lam,
                                  bracket_shifted(A, b, c, FormalVar::Mu)) -
                    compose_left(A, bracket(A, a, b), c, total) -
                    compose_right(A, b, FormalVar::Mu, bracket(A, a, c));
                out.push_back(Residual{"jacobi(" + A.generator_name(i) + "," +
                                           A.generator_name(j) + "," +
                                           A.generator_name(k) + ")",
                                       std::move(value)});
            }
        }
    }
    return out;
}

std::vector<Residual> residuals_left_symmetric(const ConformalAlgebra& A) {
    const FormalPoly total = fp_lam() + fp_mu();
    std::vector<Residual> out;
    for (GeneratorId i = 0; i < A.rank(); ++i) {
        const Element a = A.unit(i);
        for (GeneratorId j = 0; j < A.rank(); ++j) {
            const Element b = A.unit(j);
            for (GeneratorId k = 0; k < A.rank(); ++k) {
                const Element c = A.unit(k);
                Element value =
                    compose_left(A, bracket(A, a, b), c, total) -
                    compose_right(A, a, FormalVar::Lam,
                                  bracket_shifted(A, b, c, FormalVar::Mu)) -
                    compose_left(A, bracket_shifted(A, b, a, FormalVar::Mu), c,
                                 total) +
                    compose_right(A, b, FormalVar::Mu, bracket(A, a, c));
                out.push_back(Residual{"left_symmetry(" + A.generator_name(i) +
                                           "," + A.generator_name(j) + "," +
                                           A.generator_name(k) + ")",
                                       std::move(value)});
            }
        }
    }
    return out;
}

std::vector<Residual> residuals_for_kind(const ConformalAlgebra& A) {
    switch (A.kind()) {
    case AlgebraKind::Lie: {
        std::vector<Residual> out = residuals_skew(A);
        std::vector<Residual> jac = residuals_jacobi(A);
        out.insert(out.end(), std::make_move_iterator(jac.begin()),
                   std::make_move_iterator(jac.end()));
        return out;
    }
    case AlgebraKind::LeftSymmetric:
        return residuals_left_symmetric(A);
    case AlgebraKind::Raw:
        return {};
    }
    return {};
}

ConformalAlgebra sub_adjacent(const ConformalAlgebra& A) {
    const FormalPoly reflected = -fp_lam() - fp_del();
    const std::size_t n = A.rank();
    std::vector<Element> table;
    table.reserve(n * n);
    for (GeneratorId i = 0; i < n; ++i) {
        for (GeneratorId j = 0; j < n; ++j) {
            table.push_back(bracket(A, A.unit(i), A.unit(j)) -
                            bracket(A, A.unit(j), A.unit(i))
                                .substitute(FormalVar::Lam, reflected));
        }
    }
    return ConformalAlgebra(A.name() + ".commutator", AlgebraKind::Lie,
                            A.generator_names(), A.params(), std::move(table));
}

CompatibilityReport is_compatible_structure(const ConformalAlgebra& lie,
                                            const ConformalAlgebra& structure) {
    if (lie.generator_names() != structure.generator_names()) {
        std::ostringstream msg;
        msg << "generator lists differ: '" << lie.name() << "' has {";
        for (std::size_t i = 0; i < lie.rank(); ++i) {
            msg << (i ? "," : "") << lie.generator_name(i);
        }
        msg << "} while '" << structure.name() << "' has {";
        for (std::size_t i = 0; i < structure.rank(); ++i) {
            msg << (i ? "," : "") << structure.generator_name(i);
        }
        msg << "}";
        throw GeneratorMismatchError(msg.str());
    }

    const ConformalAlgebra commutator = sub_adjacent(structure);
    CompatibilityReport report;
    for (GeneratorId i = 0; i < lie.rank(); ++i) {
        for (GeneratorId j = 0; j < lie.rank(); ++j) {
            const Element& expected = lie.entry(i, j);
            const Element& actual = commutator.entry(i, j);
            if (expected != actual) {
                report.diffs.push_back(
                    CompatibilityDiff{i, j, expected, actual});
            }
        }
    }
    report.compatible = report.diffs.empty();
    return report;
}

std::string element_to_string(const ConformalAlgebra& A, const Element& e,
                              const RenderOptions& options) {
    assert(e.rank() == A.rank());
    std::string out;
    for (std::size_t i = 0; i < e.rank(); ++i) {
        const FormalPoly& c = e.components[i];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (c.is_scalar() && c.scalar_value().is_one()) {
            out += A.generator_name(static_cast<GeneratorId>(i));
            continue;
        }
        const std::string text = c.to_string(options);
        const bool simple = c.term_count() == 1 &&
                            text.find(' ') == std::string::npos &&
                            text[0] != '-';
        if (simple) {
            out += text + "*" + A.generator_name(static_cast<GeneratorId>(i));
        } else {
            out += "(" + text + ")*" +
                   A.generator_name(static_cast<GeneratorId>(i));
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace lca
