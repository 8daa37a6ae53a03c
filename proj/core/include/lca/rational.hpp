/*
 * rational.hpp
 * ------------
 * Exact arbitrary-precision rationals. Backed by Boost.Multiprecision's
 * cpp_rational, which maintains the canonical form this toolkit relies on
 * everywhere: gcd(|numerator|, denominator) = 1, denominator > 0, and the
 * canonical zero 0/1. The helpers below add the small pieces the rest of
 * the kernel needs (string round trip, binomials and falling factorials
 * for the coefficient algebra, hashing-free ordered use in maps).
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lca {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Numerator in canonical form (sign lives here).
inline BigInt rat_num(const Rational& r) { return numerator(r); }

/// Denominator in canonical form (always positive).
inline BigInt rat_den(const Rational& r) { return denominator(r); }

/// Render as "p" or "p/q" with q > 1.
inline std::string rat_to_string(const Rational& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) {
        s += "/";
        s += rat_den(r).str();
    }
    return s;
}

/// Parse "p" or "p/q" (optional leading '-' on p; q > 0) into an exact
/// Rational. Throws std::invalid_argument on any other shape, including
/// a zero denominator.
inline Rational parse_rational(const std::string& text) {
    const auto fail = [&]() -> Rational {
        throw std::invalid_argument("'" + text +
                                    "' is not a rational of the form p or "
                                    "p/q");
    };
    const auto digits = [](const std::string& s, std::size_t from,
                           std::size_t to) {
        if (from >= to) return false;
        for (std::size_t i = from; i < to; ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
        }
        return true;
    };
    const std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
        if (!digits(text, start, text.size())) return fail();
        return Rational(BigInt(text));
    }
    if (!digits(text, start, slash) ||
        !digits(text, slash + 1, text.size())) {
        return fail();
    }
    const BigInt den(text.substr(slash + 1));
    if (den == 0) return fail();
    return Rational(BigInt(text.substr(0, slash)), den);
}

/// Generalized binomial coefficient C(m, j) = m(m-1)...(m-j+1) / j! for any
/// integer m (including negative) and j >= 0. Always an exact integer, but
/// returned as Rational for direct use in coefficient arithmetic.
inline Rational binomial_generalized(std::int64_t m, std::int64_t j) {
    Rational acc(1);
    for (std::int64_t i = 0; i < j; ++i) {
        acc *= Rational(m - i);
        acc /= Rational(i + 1);
    }
    return acc;
}

/// Falling factorial x(x-1)...(x-s+1); equals 1 when s = 0.
inline Rational falling_factorial(std::int64_t x, std::int64_t s) {
    Rational acc(1);
    for (std::int64_t i = 0; i < s; ++i) acc *= Rational(x - i);
    return acc;
}

/// n! as a Rational (small n only; used for n-th products).
inline Rational factorial(std::int64_t n) {
    Rational acc(1);
    for (std::int64_t i = 2; i <= n; ++i) acc *= Rational(i);
    return acc;
}

} // namespace lca
