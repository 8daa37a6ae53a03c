/*
 * acceptance.cpp
 * --------------
 * End-to-end acceptance run: ten criteria covering the full verification
 * pipeline, each with a pinned wall-clock budget. Prints one line per
 * criterion and exits nonzero if any check fails or overruns its budget.
 */
#include "lca/catalog.hpp"
#include "lca/coeff.hpp"
#include "lca/conformal.hpp"
#include "lca/dsl.hpp"
#include "lca/errors.hpp"

#include "support/random_gen.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace lca;
using lca::testing::Rng;

namespace {

struct Criterion {
    std::string title;
    long budget_ms;
    std::function<bool(std::string&)> check; // may append failure detail
};

/// One concrete valid parameter assignment per family, used where the
/// criterion calls for desk-scale numeric windows.
const std::map<std::string, std::map<std::string, Rational>>&
concrete_assignments() {
    using A = std::map<std::string, Rational>;
    static const std::map<std::string, A> table = {
        {"T1", A{{"a", 2}, {"b", 3}, {"c", 5}}},
        {"T2", A{{"a", 2}, {"b", 3}, {"c", 1}}},
        {"T3", A{{"a", 2}, {"b", 3}, {"c", 1}}},
        {"T4", A{{"b", 1}, {"k1", 1}}},
        {"T5", A{{"b", 1}, {"d", 1}}},
        {"T6", A{{"c", 1}, {"k2", 1}}},
        {"T7", A{{"k1", 1}, {"k2", 1}}},
        {"T8", A{{"c", 1}, {"h1", 1}, {"k2", 2}}},
        {"T9", A{{"h1", 1}, {"k1", 1}}},
        {"T10", A{{"c", 1}, {"k1", 1}, {"k2", 0}}},
        {"T11", A{{"c", 1}, {"k2", 1}}},
    };
    return table;
}

// --- criterion bodies ------------------------------------------------------

bool lie_axioms_symbolic(std::string& detail) {
    const ConformalAlgebra W = make_W();
    for (const Residual& r : residuals_skew(W)) {
        if (!r.is_zero()) {
            detail = r.label;
            return false;
        }
    }
    for (const Residual& r : residuals_jacobi(W)) {
        if (!r.is_zero()) {
            detail = r.label;
            return false;
        }
    }
    return true;
}

bool families_left_symmetric_and_compatible(std::string& detail) {
    for (const Family& f : families()) {
        const ConformalAlgebra A = family_algebra(f);
        for (const Residual& r : residuals_left_symmetric(A)) {
            if (!r.is_zero()) {
                detail = f.id + " " + r.label;
                return false;
            }
        }
        const CompatibilityReport report =
            is_compatible_structure(family_witt_target(f), A);
        if (!report.compatible) {
            detail = f.id + " sub-adjacent mismatch";
            return false;
        }
    }
    return true;
}

bool equations_and_meta(std::string& detail) {
    for (const Family& f : families()) {
        for (const EquationResidual& r :
             equation_residuals(f.components, f.witt_a, f.witt_b)) {
            if (!r.is_zero()) {
                detail = f.id + " " + r.label;
                return false;
            }
        }
        const MetaConsistency meta =
            meta_consistency(f.components, f.witt_a, f.witt_b, f.free_params);
        if (!meta.equations_zero || !meta.consistent) {
            detail = f.id + " meta";
            return false;
        }
    }

    Rng rng(0x5eedacc3);
    const auto coin = [&rng]() {
        return FormalPoly(lca::testing::random_rational(rng, false));
    };
    const auto linear = [&](bool constant_only) {
        FormalPoly p = coin();
        if (!constant_only) p += coin() * fp_del() + coin() * fp_lam();
        return p;
    };
    for (int trial = 0; trial < 100; ++trial) {
        AnsatzStructure s;
        s.f = fp_del() + fp_lam() + coin();
        s.g1 = linear(trial % 3 == 0);
        s.g2 = linear(false);
        s.h1 = linear(trial % 2 == 0);
        s.h2 = linear(false);
        s.k1 = linear(trial % 5 == 0);
        s.k2 = linear(false);
        const MetaConsistency meta = meta_consistency(s, coin(), coin(), {});
        if (!meta.consistent) {
            detail = "random trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

bool coefficient_commutators(std::string& detail) {
    const WindowReport report =
        verify_lie_window(make_W(), Scalar::symbol("a"), Scalar::symbol("b"),
                          5);
    if (!report.ok) {
        detail = report.mismatches.empty() ? "empty report"
                                           : report.mismatches[0].label;
    }
    return report.ok;
}

bool corollary_windows(std::string& detail) {
    for (const Family& f : families()) {
        const WindowReport report = verify_corollary(f, {}, 4);
        if (!report.ok) {
            detail = f.id;
            if (!report.mismatches.empty()) {
                detail += " " + report.mismatches[0].label;
            }
            return false;
        }
    }
    return true;
}

bool associator_windows(std::string& detail) {
    for (const Family& f : families()) {
        const ConformalAlgebra A =
            family_algebra(f, concrete_assignments().at(f.id));
        const WindowReport report = verify_left_symmetry_window(A, 3);
        if (!report.ok) {
            detail = f.id;
            if (!report.mismatches.empty()) {
                detail += " " + report.mismatches[0].label;
            }
            return false;
        }
    }
    return true;
}

bool rank1_closed_products(std::string& detail) {
    const ConformalAlgebra A = make_vir_lsc();
    const Scalar c = Scalar::symbol("c");
    for (long i = -5; i <= 5; ++i) {
        for (long j = -5; j <= 5; ++j) {
            if (coeff_product(A, CoeffBasisVector{0, i},
                              CoeffBasisVector{0, j}) !=
                vir_lsc_closed_product(c, i, j)) {
                detail = "L[" + std::to_string(i) + "] o L[" +
                         std::to_string(j) + "]";
                return false;
            }
        }
    }
    return true;
}

bool witness_suite(std::string& detail) {
    try {
        const auto checks = verify_refutation_witnesses();
        if (checks.size() < 8) {
            detail = "only " + std::to_string(checks.size()) + " witnesses";
            return false;
        }
        for (const WitnessCheck& w : checks) {
            if (!w.ok || w.actual == 0) {
                detail = w.id;
                return false;
            }
        }
        return true;
    } catch (const StaleWitnessError& e) {
        detail = e.what();
        return false;
    }
}

bool kernel_properties(std::string& detail) {
    // Ring axioms.
    {
        Rng rng(0x5eedacc9);
        for (int trial = 0; trial < 1000; ++trial) {
            const FormalPoly p = lca::testing::random_formal_poly(rng, true);
            const FormalPoly q = lca::testing::random_formal_poly(rng, true);
            const FormalPoly r = lca::testing::random_formal_poly(rng, true);
            if ((p + q) + r != p + (q + r) || p * q != q * p ||
                p * (q + r) != p * q + p * r || !(p - p).is_zero()) {
                detail = "ring axioms, trial " + std::to_string(trial);
                return false;
            }
        }
    }

    // Substitution commutes with evaluation.
    {
        Rng rng(0x5eedacca);
        const std::array<FormalVar, 4> vars = {FormalVar::Del, FormalVar::Lam,
                                               FormalVar::Mu, FormalVar::Nu};
        for (int trial = 0; trial < 1000; ++trial) {
            const FormalPoly p = lca::testing::random_formal_poly(rng, true);
            const FormalPoly rep = lca::testing::random_formal_poly(rng, true);
            const FormalVar v = vars[trial % vars.size()];
            auto point = lca::testing::random_assignment(rng);
            auto shifted = point;
            shifted[formal_var_name(v)] = rep.eval(point);
            if (p.substitute(v, rep).eval(point) != p.eval(shifted)) {
                detail = "substitution/evaluation, trial " +
                         std::to_string(trial);
                return false;
            }
        }
    }

    // The bracket is recovered from its n-th products.
    {
        Rng rng(0x5eedaccb);
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<Element> table;
            for (int entry = 0; entry < 4; ++entry) {
                Element e(2);
                for (int comp = 0; comp < 2; ++comp) {
                    e.components[comp] =
                        lca::testing::random_formal_poly(rng)
                            .substitute(FormalVar::Mu, FormalPoly())
                            .substitute(FormalVar::Nu, FormalPoly());
                }
                table.push_back(std::move(e));
            }
            const ConformalAlgebra A("random", AlgebraKind::Raw, {"L", "W"},
                                     {}, std::move(table));
            const Element x = A.unit(static_cast<GeneratorId>(trial % 2));
            const Element y =
                A.unit(static_cast<GeneratorId>((trial / 2) % 2));
            const Element full = bracket(A, x, y);
            int degree = -1;
            for (const FormalPoly& c : full.components) {
                degree = std::max(degree, c.degree_in(FormalVar::Lam));
            }
            Element rebuilt(2);
            for (int n = 0; n <= degree; ++n) {
                rebuilt += nth_product(A, x, y, n) *
                           (fp_lam().pow(n) *
                            Scalar(Rational(1) / factorial(n)));
            }
            if (rebuilt != full) {
                detail = "n-th product reconstruction, trial " +
                         std::to_string(trial);
                return false;
            }
        }
    }
    return true;
}

bool parser_round_trip_and_fuzz(std::string& detail) {
    std::vector<ConformalAlgebra> exports{make_virasoro(), make_vir_lsc(),
                                          make_W()};
    for (const Family& f : families()) {
        if (f.id == "T5") {
            exports.push_back(
                family_algebra(f, {{"b", Rational(1)}, {"d", Rational(1)}}));
        } else if (f.id == "T8") {
            exports.push_back(family_algebra(f, {{"c", Rational(1)},
                                                 {"h1", Rational(1)},
                                                 {"k2", Rational(2)}}));
        } else {
            exports.push_back(family_algebra(f));
        }
    }

    std::vector<std::string> seeds;
    for (const ConformalAlgebra& A : exports) {
        const std::string source = print_algebra(A);
        const ConformalAlgebra back = parse_and_elaborate(source);
        if (back.kind() != A.kind() || back.table() != A.table() ||
            back.generator_names() != A.generator_names() ||
            print_algebra(back) != source) {
            detail = "round trip of " + A.name();
            return false;
        }
        seeds.push_back(source);
    }

    Rng rng(0x5eedaccf);
    const std::string pool =
        "ablmwLW019/*+-^_#(){}[];:=., \n\t'\"\\\xC3\xA9\x80\xFF";
    for (int trial = 0; trial < 10000; ++trial) {
        std::string text = seeds[rng() % seeds.size()];
        const int edits = 1 + static_cast<int>(rng() % 4);
        for (int e = 0; e < edits; ++e) {
            if (text.empty()) break;
            const std::size_t pos = rng() % text.size();
            switch (rng() % 3) {
            case 0: text[pos] = pool[rng() % pool.size()]; break;
            case 1: text.insert(pos, 1, pool[rng() % pool.size()]); break;
            case 2: text.erase(pos, 1); break;
            }
        }
        try {
            parse_and_elaborate(text);
        } catch (const ParseError&) {
            // expected contract
        } catch (const std::exception& e) {
            detail = "fuzz trial " + std::to_string(trial) + " escaped: " +
                     e.what();
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"rank-2 Lie axioms, symbolic (a, b)", 1000, lie_axioms_symbolic},
        {"11 families: left symmetry + sub-adjacent match, symbolic", 5000,
         families_left_symmetric_and_compatible},
        {"equations f1..f14 + meta-consistency (families and random)", 10000,
         equations_and_meta},
        {"coefficient commutators match closed forms, window 5", 5000,
         coefficient_commutators},
        {"closed product tables for all families, window 4", 30000,
         corollary_windows},
        {"associator residuals at concrete parameters, window 3", 60000,
         associator_windows},
        {"rank-1 closed products, window 5, symbolic c", 1000,
         rank1_closed_products},
        {"refutation witnesses: >= 8 frozen nonzero residuals", 1000,
         witness_suite},
        {"kernel property suites, 1000 trials each", 10000,
         kernel_properties},
        {"parser round trip + 10^4-case fuzz", 30000,
         parser_round_trip_and_fuzz},
    };

    std::printf("acceptance: exact verification at desk scale\n");
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
        if (elapsed > c.budget_ms) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += "over budget";
        }
        if (!ok) ++failures;
        std::printf("  %2zu. %s  %s  (%lld ms / %ld ms)%s%s\n", i + 1,
                    ok ? "pass" : "FAIL", c.title.c_str(),
                    static_cast<long long>(elapsed), c.budget_ms,
                    detail.empty() ? "" : " -- ", detail.c_str());
    }
    std::printf("result: %s (%zu/%zu)\n", failures == 0 ? "pass" : "FAIL",
                criteria.size() - static_cast<std::size_t>(failures),
                criteria.size());
    return failures == 0 ? 0 : 1;
}
