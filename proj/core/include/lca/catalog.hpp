/*
 * catalog.hpp
 * -----------
 * The built-in algebras and the classification catalog for rank-2
 * left-symmetric structures:
 *
 *  - factories for the rank-1 Lie algebra (del + 2 lam) L, its
 *    left-symmetric structures (del + lam + c) L, and the rank-2 Lie
 *    family with [L lam W] = (del + a lam + b) W;
 *  - the rank-2 structure ansatz (all brackets L-linear + W-linear with
 *    the L-L bracket pinned to (del + lam + c) L) and its fourteen
 *    functional equations f1..f14, whose simultaneous vanishing is
 *    equivalent to "left-symmetric structure compatible with the rank-2
 *    Lie bracket";
 *  - the eleven solution families T1..T11 with their parameter
 *    constraints;
 *  - refutation witnesses: frozen evaluation points proving that the
 *    tempting candidates excluded by the classification really do violate
 *    an identity. Each witness stores the violated equation's residual,
 *    a rational point and the expected nonzero value; re-verification
 *    throws StaleWitnessError on any drift.
 */
#pragma once

#include "lca/conformal.hpp"

#include <map>
#include <string>
#include <vector>

namespace lca {

// ---------------------------------------------------------------------------
// Built-in algebras
// ---------------------------------------------------------------------------

/// Rank-1 Lie algebra: [L lam L] = (del + 2 lam) L.
ConformalAlgebra make_virasoro();

/// Left-symmetric structures on it: L lam L = (del + lam + c) L, with a
/// free parameter c.
ConformalAlgebra make_vir_lsc();

/// Rank-2 Lie algebra with parameters a, b:
///   [L lam L] = (del + 2 lam) L
///   [L lam W] = (del + a lam + b) W
///   [W lam L] = ((a-1) del + a lam - b) W     (forced by skew symmetry)
///   [W lam W] = 0
/// The general form takes the entries of (a, b) as polynomials in declared
/// parameters so that specialized targets (a = 1, b free, ...) can be
/// expressed directly.
ConformalAlgebra make_W(const ParamPoly& a, const ParamPoly& b,
                        std::vector<ParamDecl> params);
ConformalAlgebra make_W();                                  // symbolic a, b
ConformalAlgebra make_W(const Rational& a, const Rational& b);

// ---------------------------------------------------------------------------
// Rank-2 structure ansatz
// ---------------------------------------------------------------------------

/// Components of a candidate rank-2 structure over generators (L, W):
///   L lam L = f  * L                 with f = del + lam + c
///   L lam W = g1 * L + g2 * W
///   W lam L = h1 * L + h2 * W
///   W lam W = k1 * L + k2 * W
/// All components are polynomials in (lam, del) with Scalar coefficients.
struct AnsatzStructure {
    FormalPoly f;
    FormalPoly g1, g2;
    FormalPoly h1, h2;
    FormalPoly k1, k2;
};

/// Build the product table of an ansatz as a conformal algebra over
/// generators (L, W). Components must use only (lam, del) and only
/// declared parameters.
ConformalAlgebra ansatz_to_algebra(const AnsatzStructure& s, std::string name,
                                   std::vector<ParamDecl> params,
                                   AlgebraKind kind = AlgebraKind::LeftSymmetric);

/// Extract the ansatz components from a rank-2 algebra over generators
/// (L, W). Throws CatalogError when the L-L bracket has a W component
/// (outside the ansatz shape) or the generators are not (L, W).
AnsatzStructure ansatz_from_algebra(const ConformalAlgebra& A);

// ---------------------------------------------------------------------------
// Functional equations
// ---------------------------------------------------------------------------

/// One functional-equation residual (a polynomial in lam, mu, del that
/// must vanish identically).
struct EquationResidual {
    std::string label; // "f1" .. "f14"
    FormalPoly value;

    bool is_zero() const { return value.is_zero(); }
};

/// The labels "f1".."f14" in order.
const std::vector<std::string>& equation_labels();

/// Residuals of the fourteen functional equations that characterize when
/// an ansatz is a left-symmetric structure compatible with the rank-2 Lie
/// bracket for parameters (a, b). `a` and `b` must be scalar polynomials
/// (no formal variables); the ansatz must have f = del + lam + c with a
/// scalar c, otherwise CatalogError is thrown.
std::vector<EquationResidual> equation_residuals(const AnsatzStructure& s,
                                                 const FormalPoly& a,
                                                 const FormalPoly& b);

/// Equivalence check between the equation view and the axiom view:
/// {all fourteen residuals vanish}  must coincide with
/// {all left-symmetry residuals vanish AND the commutator table equals
///  the rank-2 Lie bracket for (a, b)}.
struct MetaConsistency {
    bool equations_zero = false;
    bool identities_zero = false;
    bool commutator_matches = false;
    /// equations_zero == (identities_zero && commutator_matches)
    bool consistent = false;
};

MetaConsistency meta_consistency(const AnsatzStructure& s, const FormalPoly& a,
                                 const FormalPoly& b,
                                 const std::vector<ParamDecl>& params);

// ---------------------------------------------------------------------------
// Solution families
// ---------------------------------------------------------------------------

/// One family of the classification. `components` is expressed in the
/// free parameters; `witt_a` / `witt_b` give the (a, b) of the compatible
/// rank-2 Lie bracket in terms of those parameters (scalar polynomials).
struct Family {
    std::string id;      // "T1" .. "T11"
    std::string summary; // one-line description of the structure
    std::vector<ParamDecl> free_params;
    /// Pairs of parameters that must not both be zero.
    std::vector<std::pair<std::string, std::string>> not_both_zero;
    AnsatzStructure components;
    FormalPoly witt_a;
    FormalPoly witt_b;
};

/// All eleven families, in id order.
const std::vector<Family>& families();

/// Lookup by id; throws CatalogError for an unknown id.
const Family& family(const std::string& id);

/// The family's product table as a left-symmetric algebra, optionally
/// specializing free parameters to exact rational values. Unassigned
/// parameters stay symbolic. Violated nonzero / not-both-zero constraints
/// and unknown parameter names raise InvalidParameterError.
ConformalAlgebra family_algebra(const Family& f);
ConformalAlgebra family_algebra(const Family& f,
                                const std::map<std::string, Rational>& values);

/// The rank-2 Lie algebra a family's commutator must reproduce, under the
/// same parameter specialization.
ConformalAlgebra family_witt_target(const Family& f);
ConformalAlgebra family_witt_target(
    const Family& f, const std::map<std::string, Rational>& values);

// ---------------------------------------------------------------------------
// Refutation witnesses
// ---------------------------------------------------------------------------

/// Derived constraints on a single polynomial datum h (given in the
/// variable nu): necessary conditions used to rule out candidate
/// structures in the excluded parameter regions. These are transcriptions
/// of elimination results; their correctness is pinned by oracle tests
/// (random-point comparison against the defining combinations and frozen
/// specializations).

/// Trivariate consistency constraint in (lam, mu, del) on h; must vanish
/// identically for a candidate in the constant-W-action branch.
FormalPoly h_consistency_general(const FormalPoly& a, const FormalPoly& c,
                                 const FormalPoly& h);

/// Univariate consistency constraint in del on h for the shifted-W-action
/// branch.
FormalPoly h_consistency_univariate(const FormalPoly& a, const FormalPoly& c,
                                    const FormalPoly& h);

/// Numerator of the L-component h1 forced by h: h1 = numerator/(del + c).
FormalPoly h1_numerator(const FormalPoly& a, const FormalPoly& c,
                        const FormalPoly& h);

/// Divisibility obstruction: the numerator evaluated at del = -c. Nonzero
/// means the forced h1 is not polynomial, refuting the candidate.
FormalPoly h1_divisibility_remainder(const FormalPoly& a, const FormalPoly& c,
                                     const FormalPoly& h);

/// A frozen counterexample: a candidate structure (or single-datum
/// candidate) excluded by the classification, the identity it violates,
/// a rational evaluation point, and the hand-verified nonzero value of
/// the residual there.
struct RefutationWitness {
    std::string id;          // "W1" .. "W12"
    std::string description; // the candidate being refuted
    std::string equation;    // violated equation / constraint label
    FormalPoly residual;     // fully-substituted residual polynomial
    std::map<std::string, Rational> point;
    Rational expected;       // frozen nonzero value at `point`
};

/// The full witness list in id order.
const std::vector<RefutationWitness>& refutation_witnesses();

/// Result of re-evaluating one witness.
struct WitnessCheck {
    std::string id;
    Rational actual;
    Rational expected;
    bool ok = false;
};

/// Re-evaluate every witness residual at its frozen point. Returns the
/// per-witness results when all match; throws StaleWitnessError naming
/// the first witness whose value is zero or differs from the frozen one.
std::vector<WitnessCheck> verify_refutation_witnesses();

} // namespace lca
