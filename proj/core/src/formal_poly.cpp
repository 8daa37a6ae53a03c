/*
 * formal_poly.cpp
 * ---------------
 * Arithmetic, substitution and rendering for FormalPoly. All operations
 * re-normalize eagerly (zero coefficients are erased on the spot), so the
 * term map is always a canonical form.
 */
#include "lca/formal_poly.hpp"

#include "lca/errors.hpp"

#include <cassert>
#include <sstream>
#include <vector>

namespace lca {

namespace {

const char* const kAsciiNames[kFormalVarCount] = {"del", "lam", "mu", "nu"};
const char* const kUnicodeNames[kFormalVarCount] = {"∂", "λ",
                                                    "μ", "ν"};

int total_degree(const FormalExponents& e) {
    return e[0] + e[1] + e[2] + e[3];
}

FormalExponents zero_exponents() { return {0, 0, 0, 0}; }

} // namespace

const char* formal_var_name(FormalVar v) {
    return kAsciiNames[static_cast<int>(v)];
}

const char* formal_var_symbol(FormalVar v) {
    return kUnicodeNames[static_cast<int>(v)];
}

std::optional<FormalVar> formal_var_from_name(const std::string& name) {
    for (int i = 0; i < kFormalVarCount; ++i) {
        if (name == kAsciiNames[i]) return static_cast<FormalVar>(i);
    }
    return std::nullopt;
}

bool FormalMonomialOrder::operator()(const FormalExponents& a,
                                     const FormalExponents& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    for (int i = 0; i < kFormalVarCount; ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

FormalPoly::FormalPoly(Scalar constant) {
    add_term(zero_exponents(), constant);
}

FormalPoly FormalPoly::variable(FormalVar v) {
    FormalPoly p;
    FormalExponents e = zero_exponents();
    e[static_cast<int>(v)] = 1;
    p.add_term(e, Scalar(1L));
    return p;
}

FormalPoly FormalPoly::param(const std::string& name) {
    return FormalPoly(Scalar::symbol(name));
}

bool FormalPoly::is_scalar() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == zero_exponents();
}

Scalar FormalPoly::scalar_value() const {
    if (terms_.empty()) return Scalar();
    auto it = terms_.find(zero_exponents());
    assert(is_scalar() && it != terms_.end());
    return it->second;
}

bool FormalPoly::uses_only(std::initializer_list<FormalVar> allowed) const {
    bool ok[kFormalVarCount] = {false, false, false, false};
    for (FormalVar v : allowed) ok[static_cast<int>(v)] = true;
    for (const auto& [exps, coeff] : terms_) {
        (void)coeff;
        for (int i = 0; i < kFormalVarCount; ++i) {
            if (exps[i] > 0 && !ok[i]) return false;
        }
    }
    return true;
}

int FormalPoly::degree_in(FormalVar v) const {
    if (terms_.empty()) return -1;
    int deg = 0;
    for (const auto& [exps, coeff] : terms_) {
        (void)coeff;
        deg = std::max(deg, exps[static_cast<int>(v)]);
    }
    return deg;
}

SymbolSet FormalPoly::symbols() const {
    SymbolSet out;
    for (const auto& [exps, coeff] : terms_) {
        (void)exps;
        out = symbol_set_union(out, coeff.symbols());
    }
    return out;
}

void FormalPoly::add_term(const FormalExponents& exponents,
                          const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FormalPoly FormalPoly::operator-() const {
    FormalPoly out;
    for (const auto& [exps, coeff] : terms_) out.terms_.emplace(exps, -coeff);
    return out;
}

FormalPoly FormalPoly::operator+(const FormalPoly& rhs) const {
    FormalPoly out = *this;
    out += rhs;
    return out;
}

FormalPoly FormalPoly::operator-(const FormalPoly& rhs) const {
    FormalPoly out = *this;
    out -= rhs;
    return out;
}

FormalPoly& FormalPoly::operator+=(const FormalPoly& rhs) {
    for (const auto& [exps, coeff] : rhs.terms_) add_term(exps, coeff);
    return *this;
}

FormalPoly& FormalPoly::operator-=(const FormalPoly& rhs) {
    for (const auto& [exps, coeff] : rhs.terms_) add_term(exps, -coeff);
    return *this;
}

FormalPoly FormalPoly::operator*(const FormalPoly& rhs) const {
    FormalPoly out;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            FormalExponents e;
            for (int i = 0; i < kFormalVarCount; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

FormalPoly& FormalPoly::operator*=(const FormalPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

FormalPoly FormalPoly::operator*(const Scalar& rhs) const {
    FormalPoly out;
    for (const auto& [exps, coeff] : terms_) out.add_term(exps, coeff * rhs);
    return out;
}

FormalPoly FormalPoly::pow(int exponent) const {
    assert(exponent >= 0 && "negative powers of formal variables are not defined");
    FormalPoly out(Scalar(1L));
    for (int i = 0; i < exponent; ++i) out *= *this;
    return out;
}

FormalPoly FormalPoly::substitute(FormalVar var,
                                  const FormalPoly& replacement) const {
    std::array<std::optional<FormalPoly>, kFormalVarCount> repl;
    repl[static_cast<int>(var)] = replacement;
    return substitute_many(repl);
}

FormalPoly FormalPoly::substitute_many(
    const std::array<std::optional<FormalPoly>, kFormalVarCount>& replacements)
    const {
    // Per-variable power caches; exponents stay small in practice.
    std::array<std::vector<FormalPoly>, kFormalVarCount> powers;
    for (int i = 0; i < kFormalVarCount; ++i) {
        if (replacements[i]) powers[i].push_back(FormalPoly(Scalar(1L)));
    }
    auto power_of = [&](int i, int e) -> const FormalPoly& {
        auto& cache = powers[i];
        while (static_cast<int>(cache.size()) <= e) {
            cache.push_back(cache.back() * *replacements[i]);
        }
        return cache[e];
    };

    FormalPoly out;
    for (const auto& [exps, coeff] : terms_) {
        FormalPoly term(coeff);
        FormalExponents kept = zero_exponents();
        for (int i = 0; i < kFormalVarCount; ++i) {
            if (exps[i] == 0) continue;
            if (replacements[i]) {
                term *= power_of(i, exps[i]);
            } else {
                kept[i] = exps[i];
            }
        }
        if (kept != zero_exponents()) {
            FormalPoly mono;
            mono.add_term(kept, Scalar(1L));
            term *= mono;
        }
        out += term;
    }
    return out;
}

FormalPoly FormalPoly::rename(FormalVar from, FormalVar to) const {
    if (from == to) return *this;
    if (degree_in(to) > 0) {
        throw RenameError(std::string("cannot rename ") + formal_var_name(from) +
                          " to " + formal_var_name(to) +
                          ": target variable already occurs");
    }
    FormalPoly out;
    for (const auto& [exps, coeff] : terms_) {
        FormalExponents e = exps;
        e[static_cast<int>(to)] = e[static_cast<int>(from)];
        e[static_cast<int>(from)] = 0;
        out.add_term(e, coeff);
    }
    return out;
}

FormalPoly FormalPoly::coeff_in(FormalVar var, int k) const {
    FormalPoly out;
    for (const auto& [exps, coeff] : terms_) {
        if (exps[static_cast<int>(var)] != k) continue;
        FormalExponents e = exps;
        e[static_cast<int>(var)] = 0;
        out.add_term(e, coeff);
    }
    return out;
}

Rational FormalPoly::eval(
    const std::map<std::string, Rational>& assignment) const {
    std::array<std::optional<Rational>, kFormalVarCount> formal_values;
    std::map<SymbolId, Rational> param_values;
    for (const auto& [name, value] : assignment) {
        if (auto v = formal_var_from_name(name)) {
            formal_values[static_cast<int>(*v)] = value;
        } else {
            param_values[intern_symbol(name)] = value;
        }
    }

    Rational result = 0;
    for (const auto& [exps, coeff] : terms_) {
        Rational term = coeff.eval(param_values);
        for (int i = 0; i < kFormalVarCount; ++i) {
            if (exps[i] == 0) continue;
            if (!formal_values[i]) {
                throw IncompleteAssignmentError(
                    std::string("no value assigned to formal variable '") +
                    kAsciiNames[i] + "'");
            }
            for (int k = 0; k < exps[i]; ++k) term *= *formal_values[i];
        }
        result += term;
    }
    return result;
}

FormalPoly FormalPoly::substitute_param(SymbolId id,
                                        const ParamPoly& replacement) const {
    FormalPoly out;
    for (const auto& [exps, coeff] : terms_) {
        out.add_term(exps, coeff.substitute(id, replacement));
    }
    return out;
}

FormalPoly FormalPoly::substitute_param(const std::string& name,
                                        const Rational& value) const {
    return substitute_param(intern_symbol(name), ParamPoly(value));
}

namespace {

std::string render_monomial(const FormalExponents& exps,
                            const RenderOptions& options) {
    std::string out;
    for (int i = 0; i < kFormalVarCount; ++i) {
        if (exps[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += options.unicode_vars ? kUnicodeNames[i] : kAsciiNames[i];
        if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
    }
    return out;
}

/// Split a Scalar into (is_negative, |scalar|) for sign-aware printing.
/// For non-rational Scalars the sign of the numerator's leading coefficient
/// decides.
std::pair<bool, Scalar> split_sign(const Scalar& s) {
    if (s.is_rational()) {
        Rational v = s.rational_value();
        if (v < 0) return {true, Scalar(-v)};
        return {false, s};
    }
    const auto lead = s.num().leading_term();
    if (lead.second < 0) return {true, -s};
    return {false, s};
}

std::string render_coefficient(const Scalar& s, bool have_monomial) {
    if (s.is_rational()) {
        Rational v = s.rational_value();
        if (have_monomial && v == 1) return "";
        return rat_to_string(v);
    }
    std::string text = s.to_string();
    const bool needs_parens =
        have_monomial && (text.find(' ') != std::string::npos ||
                          text.find('/') != std::string::npos);
    if (needs_parens && text.front() != '(') text = "(" + text + ")";
    return text;
}

} // namespace

std::string FormalPoly::to_string(const RenderOptions& options) const {
    if (terms_.empty()) return "0";

    std::ostringstream out;
    std::size_t printed = 0;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (options.max_terms > 0 && printed == options.max_terms) {
            out << " + ... (" << terms_.size() << " terms)";
            break;
        }
        auto [negative, magnitude] = split_sign(it->second);
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const std::string mono = render_monomial(it->first, options);
        const std::string coeff = render_coefficient(magnitude, !mono.empty());
        if (coeff.empty()) {
            out << mono;
        } else if (mono.empty()) {
            out << coeff;
        } else {
            out << coeff << "*" << mono;
        }
        ++printed;
    }
    return out.str();
}

FormalPoly fp_del() { return FormalPoly::variable(FormalVar::Del); }
FormalPoly fp_lam() { return FormalPoly::variable(FormalVar::Lam); }
FormalPoly fp_mu() { return FormalPoly::variable(FormalVar::Mu); }
FormalPoly fp_nu() { return FormalPoly::variable(FormalVar::Nu); }

} // namespace lca
