/*
 * coeff.cpp
 * ---------
 * Mode products on the Z-indexed coefficient basis, their bilinear
 * extension, the Lie bracket on coefficients, and the window
 * verifications (left symmetry and closed-form Lie structure).
 */
#include "lca/coeff.hpp"

#include "lca/errors.hpp"

#include <cassert>
#include <sstream>

namespace lca {

CoeffElement CoeffElement::basis(GeneratorId g, long index) {
    CoeffElement e;
    e.add_term(CoeffBasisVector{g, index}, Scalar(1L));
    return e;
}

void CoeffElement::add_term(const CoeffBasisVector& v, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(v, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CoeffElement CoeffElement::operator-() const {
    CoeffElement out;
    for (const auto& [v, c] : terms_) out.terms_.emplace(v, -c);
    return out;
}

CoeffElement CoeffElement::operator+(const CoeffElement& rhs) const {
    CoeffElement out = *this;
    out += rhs;
    return out;
}

CoeffElement CoeffElement::operator-(const CoeffElement& rhs) const {
    CoeffElement out = *this;
    out -= rhs;
    return out;
}

CoeffElement& CoeffElement::operator+=(const CoeffElement& rhs) {
    for (const auto& [v, c] : rhs.terms_) add_term(v, c);
    return *this;
}

CoeffElement& CoeffElement::operator-=(const CoeffElement& rhs) {
    for (const auto& [v, c] : rhs.terms_) add_term(v, -c);
    return *this;
}

CoeffElement CoeffElement::operator*(const Scalar& rhs) const {
    CoeffElement out;
    for (const auto& [v, c] : terms_) out.add_term(v, c * rhs);
    return out;
}

CoeffElement CoeffElement::substitute_param(SymbolId id,
                                            const ParamPoly& replacement) const {
    CoeffElement out;
    for (const auto& [v, c] : terms_) out.add_term(v, c.substitute(id, replacement));
    return out;
}

CoeffElement CoeffElement::substitute_param(const std::string& name,
                                            const Rational& value) const {
    return substitute_param(intern_symbol(name), ParamPoly(value));
}

std::string CoeffElement::to_string(const ConformalAlgebra& A) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [v, c] : terms_) {
        // Sign-aware join, mirroring FormalPoly rendering.
        bool negative = false;
        Scalar magnitude = c;
        if (c.is_rational()) {
            if (c.rational_value() < 0) {
                negative = true;
                magnitude = -c;
            }
        } else if (c.num().leading_term().second < 0) {
            negative = true;
            magnitude = -c;
        }
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const std::string base =
            A.generator_name(v.gen) + "[" + std::to_string(v.index) + "]";
        if (magnitude.is_rational() && magnitude.rational_value() == 1) {
            out << base;
            continue;
        }
        std::string text = magnitude.to_string();
        const bool needs_parens = text.find(' ') != std::string::npos ||
                                  text.find('/') != std::string::npos;
        if (needs_parens && text.front() != '(') text = "(" + text + ")";
        out << text << "*" << base;
    }
    return out.str();
}

ShiftConvention ShiftConvention::uniform(std::size_t rank, long t) {
    ShiftConvention s;
    s.offsets.assign(rank, t);
    return s;
}

CoeffElement coeff_expand_mode(const FormalPoly& p, GeneratorId g, long n) {
    if (!p.uses_only({FormalVar::Del})) {
        throw Error("coefficient-mode expansion takes a polynomial in del "
                    "only");
    }
    CoeffElement out;
    for (const auto& [exps, coeff] : p.terms()) {
        const int s = exps[static_cast<int>(FormalVar::Del)];
        Rational factor = falling_factorial(n, s);
        if (s % 2 != 0) factor = -factor;
        out.add_term(CoeffBasisVector{g, n - s}, coeff * Scalar(factor));
    }
    return out;
}

CoeffElement coeff_product(const ConformalAlgebra& A, const CoeffBasisVector& x,
                           const CoeffBasisVector& y,
                           const ShiftConvention& shift) {
    if (shift.offsets.size() != A.rank()) {
        throw Error("shift convention rank does not match algebra '" +
                    A.name() + "'");
    }
    assert(x.gen < A.rank() && y.gen < A.rank());

    const long p = x.index + shift.offsets[x.gen];
    const long q = y.index + shift.offsets[y.gen];
    const Element& entry = A.entry(x.gen, y.gen);

#ifndef NDEBUG
    // Index homogeneity: raw result indices lie in [p+q-D, p+q] where D is
    // the entry's maximal lam-degree + del-degree.
    int max_total = 0;
    for (const FormalPoly& component : entry.components) {
        for (const auto& [exps, coeff] : component.terms()) {
            (void)coeff;
            max_total = std::max(max_total,
                                 exps[static_cast<int>(FormalVar::Lam)] +
                                     exps[static_cast<int>(FormalVar::Del)]);
        }
    }
#endif

    CoeffElement out;
    for (GeneratorId k = 0; k < A.rank(); ++k) {
        const FormalPoly& component = entry.components[k];
        for (const auto& [exps, coeff] : component.terms()) {
            const int r = exps[static_cast<int>(FormalVar::Lam)];
            const int s = exps[static_cast<int>(FormalVar::Del)];
            Rational factor = binomial_generalized(p, r) * factorial(r);
            factor *= falling_factorial(p + q - r, s);
            if (s % 2 != 0) factor = -factor;
            const long raw = p + q - r - s;
            assert(raw <= p + q && raw >= p + q - max_total);
            out.add_term(CoeffBasisVector{k, raw - shift.offsets[k]},
                         coeff * Scalar(factor));
        }
    }
    return out;
}

CoeffElement coeff_product(const ConformalAlgebra& A, const CoeffBasisVector& x,
                           const CoeffBasisVector& y) {
    return coeff_product(A, x, y, ShiftConvention::uniform(A.rank(), 1));
}

CoeffElement coeff_product(const ConformalAlgebra& A, const CoeffElement& x,
                           const CoeffElement& y,
                           const ShiftConvention& shift) {
    CoeffElement out;
    for (const auto& [vx, cx] : x.terms()) {
        for (const auto& [vy, cy] : y.terms()) {
            out += coeff_product(A, vx, vy, shift) * (cx * cy);
        }
    }
    return out;
}

CoeffElement coeff_product(const ConformalAlgebra& A, const CoeffElement& x,
                           const CoeffElement& y) {
    return coeff_product(A, x, y, ShiftConvention::uniform(A.rank(), 1));
}

CoeffElement coeff_commutator(const ConformalAlgebra& A,
                              const CoeffBasisVector& x,
                              const CoeffBasisVector& y) {
    if (A.kind() == AlgebraKind::Lie) return coeff_product(A, x, y);
    return coeff_product(A, x, y) - coeff_product(A, y, x);
}

CoeffElement coeff_commutator(const ConformalAlgebra& A, const CoeffElement& x,
                              const CoeffElement& y) {
    if (A.kind() == AlgebraKind::Lie) return coeff_product(A, x, y);
    return coeff_product(A, x, y) - coeff_product(A, y, x);
}

CoeffElement witt_closed_commutator(const Scalar& a, const Scalar& b,
                                    GeneratorId x, long m, GeneratorId y,
                                    long n) {
    CoeffElement out;
    if (x == 0 && y == 0) {
        out.add_term(CoeffBasisVector{0, m + n}, Scalar(Rational(m - n)));
        return out;
    }
    if (x == 0 && y == 1) {
        const Scalar coeff =
            Scalar(Rational(m + 1)) * (a - Scalar(1L)) - Scalar(Rational(n + 1));
        out.add_term(CoeffBasisVector{1, m + n}, coeff);
        out.add_term(CoeffBasisVector{1, m + n + 1}, b);
        return out;
    }
    if (x == 1 && y == 0) {
        return -witt_closed_commutator(a, b, 0, n, 1, m);
    }
    return out; // [W_m, W_n] = 0
}

CoeffElement vir_lsc_closed_product(const Scalar& c, long i, long j) {
    CoeffElement out;
    out.add_term(CoeffBasisVector{0, i + j + 1}, c);
    out.add_term(CoeffBasisVector{0, i + j}, Scalar(Rational(-(j + 1))));
    return out;
}

WindowReport verify_left_symmetry_window(const ConformalAlgebra& A,
                                         long window) {
    if (window < 0) {
        throw InvalidParameterError("window radius must be nonnegative");
    }
    WindowReport rep;
    rep.window = window;
    const std::size_t rank = A.rank();
    for (GeneratorId gx = 0; gx < rank; ++gx) {
        for (GeneratorId gy = 0; gy < rank; ++gy) {
            for (GeneratorId gz = 0; gz < rank; ++gz) {
                for (long m = -window; m <= window; ++m) {
                    for (long n = -window; n <= window; ++n) {
                        for (long p = -window; p <= window; ++p) {
                            const CoeffElement x = CoeffElement::basis(gx, m);
                            const CoeffElement y = CoeffElement::basis(gy, n);
                            const CoeffElement z = CoeffElement::basis(gz, p);
                            const CoeffElement residual =
                                coeff_product(A, coeff_product(A, x, y), z) -
                                coeff_product(A, x, coeff_product(A, y, z)) -
                                coeff_product(A, coeff_product(A, y, x), z) +
                                coeff_product(A, y, coeff_product(A, x, z));
                            ++rep.checked;
                            if (!residual.is_zero()) {
                                std::ostringstream label;
                                label << "(" << A.generator_name(gx) << "[" << m
                                      << "], " << A.generator_name(gy) << "["
                                      << n << "], " << A.generator_name(gz)
                                      << "[" << p << "])";
                                rep.mismatches.push_back(
                                    {label.str(), "0",
                                     residual.to_string(A)});
                            }
                        }
                    }
                }
            }
        }
    }
    rep.ok = rep.mismatches.empty();
    return rep;
}

WindowReport verify_lie_window(const ConformalAlgebra& A, const Scalar& a,
                               const Scalar& b, long window) {
    if (window < 0) {
        throw InvalidParameterError("window radius must be nonnegative");
    }
    const bool rank1 = A.rank() == 1 && A.generator_name(0) == "L";
    const bool rank2 = A.rank() == 2 && A.generator_name(0) == "L" &&
                       A.generator_name(1) == "W";
    if (!rank1 && !rank2) {
        throw GeneratorMismatchError(
            "closed-form Lie comparison needs generators (L) or (L, W); "
            "algebra '" +
            A.name() + "' has neither");
    }

    WindowReport rep;
    rep.window = window;
    for (GeneratorId gx = 0; gx < A.rank(); ++gx) {
        for (GeneratorId gy = 0; gy < A.rank(); ++gy) {
            for (long m = -window; m <= window; ++m) {
                for (long n = -window; n <= window; ++n) {
                    const CoeffElement actual = coeff_commutator(
                        A, CoeffBasisVector{gx, m}, CoeffBasisVector{gy, n});
                    const CoeffElement expected =
                        witt_closed_commutator(a, b, gx, m, gy, n);
                    ++rep.checked;
                    if (actual != expected) {
                        std::ostringstream label;
                        label << "[" << A.generator_name(gx) << "[" << m
                              << "], " << A.generator_name(gy) << "[" << n
                              << "]]";
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
