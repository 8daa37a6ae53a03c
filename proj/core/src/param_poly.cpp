/*
 * param_poly.cpp
 * --------------
 * Arithmetic, evaluation, exact division and gcd for parameter
 * polynomials. The gcd is a primitive polynomial remainder sequence:
 * recurse on a main variable, split content/primitive part, and reduce
 * with pseudo-remainders. Inputs here are small (a handful of symbols,
 * low degree), so the classical algorithm is more than fast enough.
 */
#include "lca/param_poly.hpp"

#include "lca/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace lca {

int monomial_total_degree(const Monomial& m) {
    int deg = 0;
    for (const auto& [id, exp] : m) deg += exp;
    return deg;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const int da = monomial_total_degree(a);
    const int db = monomial_total_degree(b);
    if (da != db) return da < db;
    // Lexicographic tie-break: walk symbols in increasing id; the monomial
    // with the larger exponent on the first differing symbol is larger.
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const auto& [ida, expa] = a[i];
        const auto& [idb, expb] = b[j];
        if (ida == idb) {
            if (expa != expb) return expa < expb;
            ++i;
            ++j;
        } else if (ida < idb) {
            // a has positive exponent on a smaller id where b has zero.
            return false;
        } else {
            return true;
        }
    }
    if (i < a.size()) return false; // a still has a positive exponent
    if (j < b.size()) return true;
    return false; // equal
}

namespace {

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        } else if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else {
            out.push_back(b[j++]);
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
}

/// a / b when every exponent of b is covered by a; nullopt otherwise.
std::optional<Monomial> monomial_div(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::size_t i = 0;
    for (const auto& [id, exp] : b) {
        while (i < a.size() && a[i].first < id) out.push_back(a[i++]);
        if (i == a.size() || a[i].first != id || a[i].second < exp)
            return std::nullopt;
        if (a[i].second > exp) out.emplace_back(id, a[i].second - exp);
        ++i;
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    return out;
}

int monomial_degree_in(const Monomial& m, SymbolId id) {
    for (const auto& [sym, exp] : m) {
        if (sym == id) return exp;
    }
    return 0;
}

/// Remove `id` from the monomial, returning (exponent, residual monomial).
std::pair<int, Monomial> monomial_split(const Monomial& m, SymbolId id) {
    Monomial rest;
    int exp = 0;
    for (const auto& entry : m) {
        if (entry.first == id) {
            exp = entry.second;
        } else {
            rest.push_back(entry);
        }
    }
    return {exp, rest};
}

} // namespace

ParamPoly::ParamPoly(const Rational& value) {
    if (value != 0) terms_.emplace(Monomial{}, value);
}

ParamPoly ParamPoly::symbol(const std::string& name) {
    return symbol(intern_symbol(name));
}

ParamPoly ParamPoly::symbol(SymbolId id) {
    ParamPoly p;
    p.terms_.emplace(Monomial{{id, 1}}, Rational(1));
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational ParamPoly::constant_value() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

int ParamPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // Graded order: the last key has maximal total degree.
    return monomial_total_degree(terms_.rbegin()->first);
}

int ParamPoly::degree_in(SymbolId id) const {
    if (terms_.empty()) return -1;
    int deg = 0;
    for (const auto& [mono, coeff] : terms_)
        deg = std::max(deg, monomial_degree_in(mono, id));
    return deg;
}

SymbolSet ParamPoly::symbols() const {
    SymbolSet out;
    for (const auto& [mono, coeff] : terms_)
        for (const auto& [id, exp] : mono) symbol_set_insert(out, id);
    return out;
}

std::pair<Monomial, Rational> ParamPoly::leading_term() const {
    assert(!terms_.empty() && "leading_term of zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

void ParamPoly::add_term(const Monomial& mono, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly out;
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
    return out;
}

ParamPoly ParamPoly::operator+(const ParamPoly& rhs) const {
    ParamPoly out = *this;
    out += rhs;
    return out;
}

ParamPoly ParamPoly::operator-(const ParamPoly& rhs) const {
    ParamPoly out = *this;
    out -= rhs;
    return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& rhs) {
    for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, coeff);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& rhs) {
    for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, -coeff);
    return *this;
}

ParamPoly ParamPoly::operator*(const ParamPoly& rhs) const {
    ParamPoly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_)
            out.add_term(monomial_mul(ma, mb), ca * cb);
    return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

ParamPoly ParamPoly::operator*(const Rational& rhs) const {
    if (rhs == 0) return ParamPoly();
    ParamPoly out;
    for (const auto& [mono, coeff] : terms_)
        out.terms_.emplace(mono, coeff * rhs);
    return out;
}

ParamPoly ParamPoly::pow(int exponent) const {
    assert(exponent >= 0);
    ParamPoly acc(Rational(1));
    for (int i = 0; i < exponent; ++i) acc *= *this;
    return acc;
}

Rational ParamPoly::eval(const std::map<SymbolId, Rational>& assignment) const {
    Rational acc(0);
    for (const auto& [mono, coeff] : terms_) {
        Rational term = coeff;
        for (const auto& [id, exp] : mono) {
            auto it = assignment.find(id);
            if (it == assignment.end())
                throw IncompleteAssignmentError(
                    "no value assigned to parameter '" + symbol_name(id) + "'");
            for (int k = 0; k < exp; ++k) term *= it->second;
        }
        acc += term;
    }
    return acc;
}

ParamPoly ParamPoly::substitute(SymbolId id, const ParamPoly& replacement) const {
    ParamPoly out;
    // Cache powers of the replacement; exponents are small.
    std::vector<ParamPoly> powers{ParamPoly(Rational(1))};
    for (const auto& [mono, coeff] : terms_) {
        auto [exp, rest] = monomial_split(mono, id);
        while (static_cast<int>(powers.size()) <= exp)
            powers.push_back(powers.back() * replacement);
        ParamPoly restPoly;
        restPoly.terms_.emplace(rest, coeff);
        out += restPoly * powers[exp];
    }
    return out;
}

Rational ParamPoly::rational_content() const {
    if (terms_.empty()) return Rational(1);
    BigInt numGcd(0), denLcm(1);
    for (const auto& [mono, coeff] : terms_) {
        numGcd = boost::multiprecision::gcd(numGcd, rat_num(coeff));
        const BigInt d = rat_den(coeff);
        denLcm = denLcm / boost::multiprecision::gcd(denLcm, d) * d;
    }
    if (numGcd < 0) numGcd = -numGcd;
    return Rational(numGcd, denLcm);
}

std::optional<ParamPoly> ParamPoly::divided_exactly_by(
    const ParamPoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    ParamPoly remainder = *this;
    ParamPoly quotient;
    const auto [lmDiv, lcDiv] = divisor.leading_term();
    while (!remainder.is_zero()) {
        const auto [lmRem, lcRem] = remainder.leading_term();
        auto mono = monomial_div(lmRem, lmDiv);
        if (!mono) return std::nullopt;
        ParamPoly t;
        t.terms_.emplace(*mono, lcRem / lcDiv);
        quotient += t;
        remainder -= t * divisor;
    }
    return quotient;
}

namespace {

/// Dense coefficient list of `p` viewed as a polynomial in `id`;
/// coeffs[k] is the coefficient of id^k (a ParamPoly without `id`).
std::vector<ParamPoly> coefficients_in(const ParamPoly& p, SymbolId id) {
    std::vector<ParamPoly> coeffs(
        static_cast<std::size_t>(std::max(p.degree_in(id), 0)) + 1);
    for (const auto& [mono, coeff] : p.terms()) {
        auto [exp, rest] = monomial_split(mono, id);
        coeffs[static_cast<std::size_t>(exp)].add_term(rest, coeff);
    }
    while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
    return coeffs;
}

/// Flip sign so the graded-lex leading coefficient is positive, and divide
/// out the rational content: the canonical primitive associate.
ParamPoly make_primitive(const ParamPoly& p) {
    if (p.is_zero()) return p;
    Rational content = p.rational_content();
    if (p.leading_term().second < 0) content = -content;
    ParamPoly out;
    for (const auto& [mono, coeff] : p.terms())
        out.add_term(mono, coeff / content);
    return out;
}

/// Content of p with respect to `id`: gcd of the coefficient polynomials.
ParamPoly content_in(const ParamPoly& p, SymbolId id) {
    ParamPoly acc;
    for (const auto& c : coefficients_in(p, id)) {
        if (c.is_zero()) continue;
        acc = acc.is_zero() ? c : ParamPoly::gcd(acc, c);
        if (acc.is_constant()) break;
    }
    return acc.is_zero() ? ParamPoly(Rational(1)) : make_primitive(acc);
}

/// Pseudo-remainder of a by b in variable `id` (deg_id(a) >= deg_id(b) > 0).
ParamPoly pseudo_remainder(ParamPoly a, const ParamPoly& b, SymbolId id) {
    const int degB = b.degree_in(id);
    const ParamPoly lcB = coefficients_in(b, id).back();
    const ParamPoly var = ParamPoly::symbol(id);
    int degA = a.degree_in(id);
    while (!a.is_zero() && (degA = a.degree_in(id)) >= degB) {
        const ParamPoly lcA = coefficients_in(a, id).back();
        a = a * lcB - b * lcA * var.pow(degA - degB);
        if (a.degree_in(id) == degA) {
            // Leading terms must have cancelled; guard against stalls.
            assert(false && "pseudo_remainder failed to reduce degree");
            break;
        }
    }
    return a;
}

} // namespace

ParamPoly ParamPoly::gcd(const ParamPoly& f, const ParamPoly& g) {
    if (f.is_zero()) return make_primitive(g);
    if (g.is_zero()) return make_primitive(f);
    if (f.is_constant() || g.is_constant()) return ParamPoly(Rational(1));

    // Main variable: the largest symbol id occurring in either operand.
    const SymbolSet fs = f.symbols();
    const SymbolSet gs = g.symbols();
    const SymbolId id = std::max(fs.back(), gs.back());

    const ParamPoly contF = content_in(f, id);
    const ParamPoly contG = content_in(g, id);
    const ParamPoly contGcd = gcd(contF, contG);

    ParamPoly a = make_primitive(*f.divided_exactly_by(contF));
    ParamPoly b = make_primitive(*g.divided_exactly_by(contG));
    if (a.degree_in(id) < b.degree_in(id)) std::swap(a, b);
    while (!b.is_zero() && b.degree_in(id) > 0) {
        ParamPoly r = pseudo_remainder(a, b, id);
        a = std::move(b);
        if (r.is_zero()) {
            b = ParamPoly();
        } else {
            b = make_primitive(*r.divided_exactly_by(content_in(r, id)));
        }
    }
    if (!b.is_zero()) return make_primitive(contGcd); // coprime in id
    return make_primitive(contGcd * a);
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Descending graded-lex order for readability.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [mono, coeff] = *it;
        const bool negative = coeff < 0;
        const Rational mag = negative ? Rational(-coeff) : coeff;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const bool unitCoeff = (mag == 1) && !mono.empty();
        if (!unitCoeff) out << rat_to_string(mag);
        bool needStar = !unitCoeff;
        for (const auto& [id, exp] : mono) {
            if (needStar) out << "*";
            out << symbol_name(id);
            if (exp != 1) out << "^" << exp;
            needStar = true;
        }
    }
    return out.str();
}

} // namespace lca
