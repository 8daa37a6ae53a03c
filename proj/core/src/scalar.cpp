/*
 * scalar.cpp
 * ----------
 * Normalized parameter-fraction arithmetic. reduce() is the single place
 * where the Scalar invariants are established: divide by the gcd, then
 * rescale so the denominator's leading coefficient is 1.
 */
#include "lca/scalar.hpp"

#include "lca/errors.hpp"

namespace lca {

Scalar::Scalar(ParamPoly poly) : num_(std::move(poly)), den_(Rational(1)) {}

Scalar::Scalar(ParamPoly num, ParamPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw PoleError("scalar constructed with zero denominator");
    reduce();
}

void Scalar::reduce() {
    if (num_.is_zero()) {
        den_ = ParamPoly(Rational(1));
        return;
    }
    const ParamPoly g = ParamPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *num_.divided_exactly_by(g);
        den_ = *den_.divided_exactly_by(g);
    }
    const Rational lead = den_.leading_term().second;
    if (lead != 1) {
        const Rational inv = Rational(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

SymbolSet Scalar::symbols() const {
    return symbol_set_union(num_.symbols(), den_.symbols());
}

Scalar Scalar::operator-() const {
    Scalar out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    return Scalar(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    return Scalar(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    return Scalar(num_ * rhs.num_, den_ * rhs.den_);
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    if (rhs.is_zero()) throw PoleError("scalar division by zero");
    return Scalar(num_ * rhs.den_, den_ * rhs.num_);
}

Rational Scalar::eval(const std::map<SymbolId, Rational>& assignment) const {
    const Rational denValue = den_.eval(assignment);
    if (denValue == 0)
        throw PoleError("denominator '" + den_.to_string() +
                        "' vanishes under the assignment");
    return num_.eval(assignment) / denValue;
}

Scalar Scalar::substitute(SymbolId id, const ParamPoly& replacement) const {
    ParamPoly newDen = den_.substitute(id, replacement);
    if (newDen.is_zero())
        throw PoleError("denominator '" + den_.to_string() +
                        "' vanishes when substituting " + symbol_name(id));
    return Scalar(num_.substitute(id, replacement), std::move(newDen));
}

std::string Scalar::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace lca
