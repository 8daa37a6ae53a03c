/*
 * scalar.hpp
 * ----------
 * Scalars are normalized fractions num/den of parameter polynomials: the
 * coefficient field for formal polynomials. Fractions arise only in the
 * parameters (never in the formal variables del/lam/mu/nu); the
 * classification this toolkit checks divides only by parameter
 * expressions such as c or b.
 *
 * Invariants maintained by every constructor and operation:
 *   - den is not the zero polynomial;
 *   - gcd(num, den) is a unit;
 *   - den's leading coefficient under the graded-lex monomial order is 1;
 *   - zero is canonically 0/1, and den == 1 embeds ParamPoly.
 */
#pragma once

#include "lca/param_poly.hpp"

#include <map>
#include <string>

namespace lca {

class Scalar {
public:
    Scalar() : num_(), den_(Rational(1)) {}
    explicit Scalar(const Rational& value)
        : num_(value), den_(Rational(1)) {}
    explicit Scalar(long value) : Scalar(Rational(value)) {}
    /// Embed a polynomial (den = 1).
    explicit Scalar(ParamPoly poly);
    /// General fraction; reduces to normal form. den must be nonzero.
    Scalar(ParamPoly num, ParamPoly den);

    static Scalar symbol(const std::string& name) {
        return Scalar(ParamPoly::symbol(name));
    }

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// True when den == 1 (the ParamPoly embedding).
    bool is_polynomial() const { return den_.is_one(); }
    /// True when the value is a plain rational (no parameters).
    bool is_rational() const { return num_.is_constant() && den_.is_one(); }
    Rational rational_value() const { return num_.constant_value(); }

    SymbolSet symbols() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    /// Division; rhs must be nonzero (PoleError otherwise).
    Scalar operator/(const Scalar& rhs) const;
    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

    bool operator==(const Scalar& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    /// Exact evaluation. Throws IncompleteAssignmentError for unassigned
    /// symbols and PoleError when the denominator vanishes.
    Rational eval(const std::map<SymbolId, Rational>& assignment) const;

    /// Substitute a parameter symbol by a polynomial in both num and den;
    /// throws PoleError when the substituted denominator becomes zero.
    Scalar substitute(SymbolId id, const ParamPoly& replacement) const;

    /// "num", or "(num)/(den)" when den != 1.
    std::string to_string() const;

private:
    void reduce();
    ParamPoly num_;
    ParamPoly den_;
};

} // namespace lca
