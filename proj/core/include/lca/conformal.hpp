/*
 * conformal.hpp
 * -------------
 * Finite-rank conformal algebras over the polynomial ring in del. An
 * algebra is a list of generators, a list of (optionally nonzero)
 * parameters, and a full table of lambda-brackets: for every ordered
 * generator pair an element whose components are polynomials in
 * (del, lam). The same representation serves Lie algebras, left-symmetric
 * algebras, and raw tables with no axioms attached.
 *
 * On top of the table this header provides the composition machinery
 * (brackets of module elements, nested brackets with shifted output
 * variables) and the axiom residuals: sesquilinearity is built into the
 * evaluation rules, while skew symmetry, the Jacobi identity and left
 * symmetry are computed as explicit residual elements that must vanish.
 */
#pragma once

#include "lca/formal_poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lca {

using GeneratorId = std::uint32_t;

enum class AlgebraKind { Lie, LeftSymmetric, Raw };

const char* algebra_kind_name(AlgebraKind kind);

/// A declared parameter of an algebra, with its nonzero constraint.
struct ParamDecl {
    SymbolId id = 0;
    bool nonzero = false;
};

ParamDecl param_decl(const std::string& name, bool nonzero = false);

/// A finite sum  sum_i components[i] * e_i  over the generators of an
/// algebra. Module elements proper use only del in their components;
/// bracket values also use lam, and nested compositions use mu as well.
struct Element {
    std::vector<FormalPoly> components;

    Element() = default;
    explicit Element(std::size_t rank) : components(rank) {}

    std::size_t rank() const { return components.size(); }
    bool is_zero() const;

    Element operator-() const;
    Element operator+(const Element& rhs) const;
    Element operator-(const Element& rhs) const;
    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    /// Componentwise multiplication by a polynomial factor.
    Element operator*(const FormalPoly& factor) const;

    bool operator==(const Element& rhs) const {
        return components == rhs.components;
    }
    bool operator!=(const Element& rhs) const { return !(*this == rhs); }

    /// Componentwise single-pass substitution (see FormalPoly::substitute).
    Element substitute(FormalVar var, const FormalPoly& replacement) const;
    /// Componentwise rename; throws RenameError if the target occurs.
    Element rename(FormalVar from, FormalVar to) const;
    /// Union of parameter symbols over all components.
    SymbolSet symbols() const;
};

inline Element operator*(const FormalPoly& factor, const Element& e) {
    return e * factor;
}

class ConformalAlgebra {
public:
    /// Validating constructor. `table` is row-major of size rank^2; entry
    /// (i, j) is the bracket of generator i with generator j and may use
    /// only the formal variables del and lam. Every parameter symbol
    /// appearing in the table must be declared in `params`, otherwise a
    /// SymbolUniverseError identifies the offender.
    ConformalAlgebra(std::string name, AlgebraKind kind,
                     std::vector<std::string> generators,
                     std::vector<ParamDecl> params,
                     std::vector<Element> table);

    const std::string& name() const { return name_; }
    AlgebraKind kind() const { return kind_; }
    std::size_t rank() const { return generators_.size(); }

    const std::vector<std::string>& generator_names() const {
        return generators_;
    }
    const std::string& generator_name(GeneratorId g) const {
        return generators_.at(g);
    }
    /// Index of a generator by name; throws UnknownGeneratorError.
    GeneratorId generator(const std::string& name) const;

    const std::vector<ParamDecl>& params() const { return params_; }
    /// Declared parameter universe as a symbol set.
    SymbolSet universe() const;

    const Element& entry(GeneratorId i, GeneratorId j) const;
    const std::vector<Element>& table() const { return table_; }

    /// The module element consisting of a single generator.
    Element unit(GeneratorId g) const;

    /// Specialize one declared parameter to an exact rational value,
    /// removing it from the parameter list. Throws InvalidParameterError
    /// when the parameter is undeclared or a nonzero constraint is
    /// violated.
    ConformalAlgebra specialize(const std::string& param,
                                const Rational& value) const;

private:
    std::string name_;
    AlgebraKind kind_;
    std::vector<std::string> generators_;
    std::vector<ParamDecl> params_;
    std::vector<Element> table_;
};

/// The bracket of two module elements (components in del only). The
/// result components live in (del, lam):
///   [x_lam y] = sum_{i,j} p_i(-lam) q_j(del + lam) [e_i lam e_j].
Element bracket(const ConformalAlgebra& A, const Element& x, const Element& y);

/// Same bracket with the output variable renamed from lam to `out`.
Element bracket_shifted(const ConformalAlgebra& A, const Element& x,
                        const Element& y, FormalVar out);

/// Left composition: apply an already-computed bracket value
/// inner = sum_k f_k e_k (f_k may involve del and passthrough variables)
/// to a module element c at the total variable `total`:
///   (inner)_total c = sum_k f_k|_{del -> -total} * [e_k total c].
Element compose_left(const ConformalAlgebra& A, const Element& inner,
                     const Element& c, const FormalPoly& total);

/// Right composition: bracket a module element x (at output variable
/// `out`) with an inner bracket value inner = sum_k f_k e_k:
///   x_out(inner) = sum_k f_k|_{del -> del + out} * [x out e_k].
Element compose_right(const ConformalAlgebra& A, const Element& x,
                      FormalVar out, const Element& inner);

/// n-th product x_(n) y = n! * (coefficient of lam^n in [x_lam y]).
Element nth_product(const ConformalAlgebra& A, const Element& x,
                    const Element& y, int n);

/// One named residual of an axiom check; zero means the axiom holds for
/// that generator tuple.
struct Residual {
    std::string label;
    Element value;

    bool is_zero() const { return value.is_zero(); }
};

/// Skew-symmetry residuals [e_i lam e_j] + [e_j (-lam-del) e_i] for all
/// ordered pairs, sorted by (i, j).
std::vector<Residual> residuals_skew(const ConformalAlgebra& A);

/// Jacobi residuals
///   [e_i lam [e_j mu e_k]] - [[e_i lam e_j] (lam+mu) e_k]
///                          - [e_j mu [e_i lam e_k]]
/// for all ordered triples, sorted by (i, j, k).
std::vector<Residual> residuals_jacobi(const ConformalAlgebra& A);

/// Left-symmetry residuals
///   ((e_i lam e_j) (lam+mu) e_k) - (e_i lam (e_j mu e_k))
/// - ((e_j mu e_i) (lam+mu) e_k) + (e_j mu (e_i lam e_k))
/// for all ordered triples, sorted by (i, j, k).
std::vector<Residual> residuals_left_symmetric(const ConformalAlgebra& A);

/// Residuals for the axioms implied by an algebra's kind: skew + Jacobi
/// for Lie, left symmetry for LeftSymmetric, empty for Raw.
std::vector<Residual> residuals_for_kind(const ConformalAlgebra& A);

/// The commutator algebra of a left-symmetric (or raw) table:
///   [x lam y] = x lam y - y (-lam-del) x,  kind Lie.
ConformalAlgebra sub_adjacent(const ConformalAlgebra& A);

/// One table-entry mismatch between an expected and an actual algebra.
struct CompatibilityDiff {
    GeneratorId left = 0;
    GeneratorId right = 0;
    Element expected;
    Element actual;
};

struct CompatibilityReport {
    bool compatible = false;
    std::vector<CompatibilityDiff> diffs;
};

/// Check that the commutator of `structure` reproduces the bracket table
/// of `lie` entry by entry. Throws GeneratorMismatchError when the two
/// algebras do not share the same ordered generator list.
CompatibilityReport is_compatible_structure(const ConformalAlgebra& lie,
                                            const ConformalAlgebra& structure);

/// Render an element against an algebra's generator names, e.g.
/// "(del + 2*lam)*L" or "0".
std::string element_to_string(const ConformalAlgebra& A, const Element& e,
                              const RenderOptions& options = {});

} // namespace lca
