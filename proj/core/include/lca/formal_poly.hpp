/*
 * formal_poly.hpp
 * ---------------
 * Sparse polynomials in the fixed formal variables {del, lam, mu, nu}
 * (rendered ∂, λ, μ, ν) with Scalar coefficients. This is the value type
 * of every lambda-bracket computation: bracket tables live in (del, lam),
 * identity residuals in (del, lam, mu), and nu is reserved for internal
 * renaming.
 *
 * Equality is normal-form equality: no zero coefficients are stored and
 * every Scalar is reduced, so two polynomials are equal exactly when their
 * term maps coincide. The monomial order is graded lexicographic with
 * del > lam > mu > nu priority; degree queries are exact and the zero
 * polynomial has degree -1 by convention.
 */
#pragma once

#include "lca/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace lca {

enum class FormalVar : int { Del = 0, Lam = 1, Mu = 2, Nu = 3 };

inline constexpr int kFormalVarCount = 4;

/// ASCII names as used by the text format and JSON reports.
const char* formal_var_name(FormalVar v);
/// Unicode names for human-facing rendering.
const char* formal_var_symbol(FormalVar v);
/// Parse an ASCII name ("del", "lam", "mu", "nu"); nullopt otherwise.
std::optional<FormalVar> formal_var_from_name(const std::string& name);

/// Exponent vector indexed by FormalVar.
using FormalExponents = std::array<int, kFormalVarCount>;

/// Graded lexicographic order (total degree, then del > lam > mu > nu).
struct FormalMonomialOrder {
    bool operator()(const FormalExponents& a, const FormalExponents& b) const;
};

/// Rendering controls shared by reports and error messages.
struct RenderOptions {
    bool unicode_vars = false;
    /// Cap on printed terms; 0 means unlimited. Truncated output ends in
    /// "+ ... (k terms)" with the total term count.
    std::size_t max_terms = 0;
};

class FormalPoly {
public:
    using TermMap = std::map<FormalExponents, Scalar, FormalMonomialOrder>;

    FormalPoly() = default;
    explicit FormalPoly(Scalar constant);
    explicit FormalPoly(const Rational& constant) : FormalPoly(Scalar(constant)) {}
    explicit FormalPoly(long constant) : FormalPoly(Scalar(constant)) {}

    /// The polynomial consisting of one formal variable.
    static FormalPoly variable(FormalVar v);
    /// The polynomial consisting of one parameter symbol.
    static FormalPoly param(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// True when no formal variable occurs (a pure Scalar).
    bool is_scalar() const;
    /// The constant-term Scalar (the whole value when is_scalar()).
    Scalar scalar_value() const;

    /// True when only `allowed` variables occur.
    bool uses_only(std::initializer_list<FormalVar> allowed) const;

    /// Exact degree in one variable; -1 for the zero polynomial.
    int degree_in(FormalVar v) const;

    /// Parameter symbols occurring in any coefficient.
    SymbolSet symbols() const;

    FormalPoly operator-() const;
    FormalPoly operator+(const FormalPoly& rhs) const;
    FormalPoly operator-(const FormalPoly& rhs) const;
    FormalPoly operator*(const FormalPoly& rhs) const;
    FormalPoly& operator+=(const FormalPoly& rhs);
    FormalPoly& operator-=(const FormalPoly& rhs);
    FormalPoly& operator*=(const FormalPoly& rhs);
    FormalPoly operator*(const Scalar& rhs) const;
    FormalPoly pow(int exponent) const;

    bool operator==(const FormalPoly& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const FormalPoly& rhs) const { return !(*this == rhs); }

    /// Single-pass substitution: every var^k of *this* polynomial becomes
    /// replacement^k; the replacement may mention var (λ -> -λ-∂ is the
    /// canonical use). The result is re-normalized.
    FormalPoly substitute(FormalVar var, const FormalPoly& replacement) const;

    /// Simultaneous substitution of several variables (needed for
    /// instantiations like h1(mu, lam+del) where both slots move at once).
    FormalPoly substitute_many(
        const std::array<std::optional<FormalPoly>, kFormalVarCount>&
            replacements) const;

    /// Rename `from` to `to`. Throws RenameError when `to` already occurs
    /// (and differs from `from`).
    FormalPoly rename(FormalVar from, FormalVar to) const;

    /// Coefficient polynomial of var^k (var eliminated from the result).
    FormalPoly coeff_in(FormalVar var, int k) const;

    /// Exact full evaluation. Keys are formal-variable names ("del",
    /// "lam", "mu", "nu") and parameter names. Throws
    /// IncompleteAssignmentError / PoleError as appropriate.
    Rational eval(const std::map<std::string, Rational>& assignment) const;

    /// Substitute a parameter symbol in every coefficient (PoleError when
    /// a denominator vanishes).
    FormalPoly substitute_param(SymbolId id, const ParamPoly& replacement) const;
    FormalPoly substitute_param(const std::string& name,
                                const Rational& value) const;

    /// Render in descending monomial order, e.g. "del^2 + 2*lam*mu - c".
    std::string to_string(const RenderOptions& options = {}) const;

    /// Internal: add `coeff * exponents`, keeping invariants.
    void add_term(const FormalExponents& exponents, const Scalar& coeff);

private:
    TermMap terms_;
};

inline FormalPoly operator*(const Scalar& lhs, const FormalPoly& rhs) {
    return rhs * lhs;
}

/// Convenience builders used throughout tests and the catalog.
FormalPoly fp_del();
FormalPoly fp_lam();
FormalPoly fp_mu();
FormalPoly fp_nu();

} // namespace lca
