/*
 * param_poly.hpp
 * --------------
 * Sparse multivariate polynomials in parameter symbols (a, b, c, d, h1,
 * k1, k2, ...) with exact rational coefficients. These are the coefficient
 * ring for everything else: Scalars are fractions of ParamPolys and formal
 * polynomials in (del, lam, mu, nu) carry Scalar coefficients.
 *
 * Representation: a map from monomials to nonzero Rational coefficients.
 * A monomial is a sorted vector of (symbol id, positive exponent) pairs.
 * The map is ordered by graded lexicographic order (total degree first,
 * then lexicographically with lower symbol ids taking priority), which is
 * the fixed monomial order used for leading-term normalization.
 *
 * Invariants: no zero coefficients are stored; exponents are positive;
 * monomial pair lists are sorted by symbol id.
 */
#pragma once

#include "lca/rational.hpp"
#include "lca/symbol.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lca {

/// Sorted (symbol, exponent) pairs; the empty vector is the unit monomial.
using Monomial = std::vector<std::pair<SymbolId, int>>;

int monomial_total_degree(const Monomial& m);

/// Graded lexicographic order on monomials.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class ParamPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    ParamPoly() = default;
    explicit ParamPoly(const Rational& value);
    explicit ParamPoly(long value) : ParamPoly(Rational(value)) {}

    /// The polynomial consisting of the single symbol `name`.
    static ParamPoly symbol(const std::string& name);
    static ParamPoly symbol(SymbolId id);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term value (the whole value if is_constant()).
    Rational constant_value() const;
    bool is_one() const { return is_constant() && constant_value() == 1; }

    const TermMap& terms() const { return terms_; }

    /// Total degree; -1 for the zero polynomial by convention.
    int total_degree() const;
    /// Degree in one symbol; -1 for the zero polynomial.
    int degree_in(SymbolId id) const;

    /// Sorted set of symbols occurring with nonzero exponent.
    SymbolSet symbols() const;

    /// Leading (monomial, coefficient) under the graded-lex order.
    /// Precondition: not zero.
    std::pair<Monomial, Rational> leading_term() const;

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& rhs) const;
    ParamPoly operator-(const ParamPoly& rhs) const;
    ParamPoly operator*(const ParamPoly& rhs) const;
    ParamPoly& operator+=(const ParamPoly& rhs);
    ParamPoly& operator-=(const ParamPoly& rhs);
    ParamPoly& operator*=(const ParamPoly& rhs);
    ParamPoly operator*(const Rational& rhs) const;
    ParamPoly pow(int exponent) const;

    bool operator==(const ParamPoly& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const ParamPoly& rhs) const { return !(*this == rhs); }

    /// Exact evaluation; every occurring symbol must be assigned.
    Rational eval(const std::map<SymbolId, Rational>& assignment) const;

    /// Substitute one symbol by a polynomial (other symbols untouched).
    ParamPoly substitute(SymbolId id, const ParamPoly& replacement) const;

    /// Positive rational c such that (*this)/c has coprime integer
    /// coefficients; 1 for the zero polynomial.
    Rational rational_content() const;

    /// Quotient when `divisor` divides exactly; nullopt otherwise.
    std::optional<ParamPoly> divided_exactly_by(const ParamPoly& divisor) const;

    /// Greatest common divisor (primitive PRS; result is primitive with
    /// positive leading coefficient, or a positive rational constant).
    static ParamPoly gcd(const ParamPoly& f, const ParamPoly& g);

    /// Render, e.g. "2*a^2*b - 3/2*c + 1"; "0" for zero. Terms print in
    /// descending graded-lex order.
    std::string to_string() const;

    /// Internal: add `coeff * mono`, keeping invariants.
    void add_term(const Monomial& mono, const Rational& coeff);

private:
    TermMap terms_;
};

inline ParamPoly operator*(const Rational& lhs, const ParamPoly& rhs) {
    return rhs * lhs;
}

} // namespace lca
