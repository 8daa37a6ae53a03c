/*
 * coeff.hpp
 * ---------
 * The coefficient algebra of a conformal algebra: a Z-indexed basis
 * (generator, index) with products expanded from the lambda-bracket table
 * through the mode formula
 *
 *   x_m . y_n = sum_{k,r,s} C(m,r) r! c^(k)_{rs} (-1)^s
 *               (m+n-r)(m+n-r-1)...(m+n-r-s+1) (e_k)_{m+n-r-s}
 *
 * where the table entry is [x lam y] = sum_k sum_{r,s} c^(k)_{rs}
 * lam^r del^s e_k, the binomial C(m,r) = m(m-1)...(m-r+1)/r! is the
 * generalized one (valid for negative m), and the falling factorial is 1
 * when s = 0. A ShiftConvention relabels the basis (default: uniform +1,
 * matching the presentation in which [L_m, L_n] = (m-n) L_{m+n}).
 *
 * Everything is exact: coefficients are Scalars, so whole parameter
 * families can be verified symbolically on an index window.
 */
#pragma once

#include "lca/catalog.hpp"

#include <map>
#include <string>
#include <vector>

namespace lca {

/// One basis vector (generator, presentation index).
struct CoeffBasisVector {
    GeneratorId gen = 0;
    long index = 0;

    friend bool operator<(const CoeffBasisVector& a, const CoeffBasisVector& b) {
        if (a.gen != b.gen) return a.gen < b.gen;
        return a.index < b.index;
    }
    friend bool operator==(const CoeffBasisVector& a,
                           const CoeffBasisVector& b) {
        return a.gen == b.gen && a.index == b.index;
    }
};

/// A finite linear combination of basis vectors with Scalar coefficients.
class CoeffElement {
public:
    using TermMap = std::map<CoeffBasisVector, Scalar>;

    CoeffElement() = default;

    static CoeffElement basis(GeneratorId g, long index);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    CoeffElement operator-() const;
    CoeffElement operator+(const CoeffElement& rhs) const;
    CoeffElement operator-(const CoeffElement& rhs) const;
    CoeffElement& operator+=(const CoeffElement& rhs);
    CoeffElement& operator-=(const CoeffElement& rhs);
    CoeffElement operator*(const Scalar& rhs) const;

    bool operator==(const CoeffElement& rhs) const {
        return terms_ == rhs.terms_;
    }
    bool operator!=(const CoeffElement& rhs) const { return !(*this == rhs); }

    /// Substitute a parameter symbol in every coefficient.
    CoeffElement substitute_param(SymbolId id,
                                  const ParamPoly& replacement) const;
    CoeffElement substitute_param(const std::string& name,
                                  const Rational& value) const;

    /// Render against an algebra's generator names, e.g. "2*L[-1] - W[3]".
    std::string to_string(const ConformalAlgebra& A) const;

    /// Internal: add coeff * basis vector, keeping invariants.
    void add_term(const CoeffBasisVector& v, const Scalar& coeff);

private:
    TermMap terms_;
};

inline CoeffElement operator*(const Scalar& lhs, const CoeffElement& rhs) {
    return rhs * lhs;
}

/// Per-generator index offsets between the presentation basis and the raw
/// mode basis: presentation x_m is raw x_(m + offset[g]).
struct ShiftConvention {
    std::vector<long> offsets;

    static ShiftConvention uniform(std::size_t rank, long t);
};

/// Expand p(del) * e_g at raw mode index n through the defining relation
/// (del a)_n = -n a_(n-1):
///   (del^s e_g)_n = (-1)^s n(n-1)...(n-s+1) (e_g)_(n-s).
/// `p` must use only del; indices in the result are raw.
CoeffElement coeff_expand_mode(const FormalPoly& p, GeneratorId g, long n);

/// Mode product of two basis vectors under a shift convention (see the
/// file header for the formula). Defaults to uniform shift +1.
CoeffElement coeff_product(const ConformalAlgebra& A, const CoeffBasisVector& x,
                           const CoeffBasisVector& y,
                           const ShiftConvention& shift);
CoeffElement coeff_product(const ConformalAlgebra& A, const CoeffBasisVector& x,
                           const CoeffBasisVector& y);

/// Bilinear extension to elements.
CoeffElement coeff_product(const ConformalAlgebra& A, const CoeffElement& x,
                           const CoeffElement& y, const ShiftConvention& shift);
CoeffElement coeff_product(const ConformalAlgebra& A, const CoeffElement& x,
                           const CoeffElement& y);

/// The Lie bracket on coefficients. For a Lie table the mode products
/// already are the bracket (they are antisymmetric), so they are returned
/// directly; for left-symmetric/raw tables this is the commutator
/// product(x,y) - product(y,x).
CoeffElement coeff_commutator(const ConformalAlgebra& A,
                              const CoeffBasisVector& x,
                              const CoeffBasisVector& y);
CoeffElement coeff_commutator(const ConformalAlgebra& A, const CoeffElement& x,
                              const CoeffElement& y);

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// Closed-form coefficient commutators of the rank-2 Lie algebra under
/// shift +1 (generator 0 = L, generator 1 = W):
///   [L_m, L_n] = (m - n) L_{m+n}
///   [L_m, W_n] = ((m+1)(a-1) - (n+1)) W_{m+n} + b W_{m+n+1}
///   [W_m, W_n] = 0
/// with [W_m, L_n] = -[L_n, W_m].
CoeffElement witt_closed_commutator(const Scalar& a, const Scalar& b,
                                    GeneratorId x, long m, GeneratorId y,
                                    long n);

/// Closed-form product of the rank-1 left-symmetric structures under
/// shift +1: L_i o L_j = c L_{i+j+1} - (j+1) L_{i+j}.
CoeffElement vir_lsc_closed_product(const Scalar& c, long i, long j);

/// The closed-form coefficient product tables for the eleven families
/// (symbolic in the family's free parameters; pinned values substituted).
CoeffElement corollary_product(const Family& f, GeneratorId x, long m,
                               GeneratorId y, long n);

// ---------------------------------------------------------------------------
// Window verifications
// ---------------------------------------------------------------------------

struct WindowMismatch {
    std::string label;
    std::string expected;
    std::string actual;
};

struct WindowReport {
    bool ok = false;
    long window = 0;
    std::size_t checked = 0;
    std::vector<WindowMismatch> mismatches;
};

/// Engine products vs. the family's closed forms for all four product
/// kinds and all indices m, n in [-window, window]. Unassigned parameters
/// stay symbolic.
WindowReport verify_corollary(const Family& f,
                              const std::map<std::string, Rational>& values,
                              long window);

/// Left-symmetry of the mode product:
///   (x_m y_n) z_p - x_m (y_n z_p) = (y_n x_m) z_p - y_n (x_m z_p)
/// for all generator triples and indices in [-window, window].
WindowReport verify_left_symmetry_window(const ConformalAlgebra& A,
                                         long window);

/// Engine commutators vs. the closed rank-2 (or rank-1) Lie forms with
/// parameters (a, b), for all index pairs in [-window, window]. The
/// algebra must have generators (L) or (L, W).
WindowReport verify_lie_window(const ConformalAlgebra& A, const Scalar& a,
                               const Scalar& b, long window);

} // namespace lca
