/*
 * lcav — verifier front end for conformal-algebra structures.
 *
 * Subcommands
 *   check      axiom suites (lie / lsc / compat) on a family or .lsca file
 *   equations  the 14 structure equations (f1)-(f14) of the rank-2 ansatz
 *   coeff      coefficient-algebra window checks (left-symmetry | corollary
 *              | lie)
 *   refute     the frozen nonzero-residual witnesses for excluded branches
 *   list       the structure catalog
 *
 * Exit codes: 0 all checks pass, 1 verification failure, 2 parse error in
 * an input file, 3 usage or constraint error.
 *
 * Reports: text by default (respects NO_COLOR / CLICOLOR_FORCE); --json
 * emits the versioned `report-v1` schema documented in
 * docs/report-schema.md. JSON is byte-deterministic except for timing_ms.
 */
#include "lca/catalog.hpp"
#include "lca/coeff.hpp"
#include "lca/dsl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <unistd.h>

using json = nlohmann::ordered_json;
using namespace lca;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr const char* kSchema = "report-v1";

// ---------------------------------------------------------------------------
// Report plumbing
// ---------------------------------------------------------------------------

struct CheckResult {
    std::string name;
    bool pass = true;
    std::size_t residuals = 0; // nonzero residuals / mismatches
    std::size_t cases = 0;     // residuals or window cases inspected
    std::string counterexample; // first failure, empty when pass
    json detail;               // optional extra JSON fields
};

struct Report {
    std::string command;
    std::string structure;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const CheckResult& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
};

bool color_enabled() {
    if (std::getenv("NO_COLOR") != nullptr) return false;
    if (const char* force = std::getenv("CLICOLOR_FORCE");
        force != nullptr && std::string(force) != "0") {
        return true;
    }
    return isatty(STDOUT_FILENO) != 0;
}

std::string status_text(bool pass) {
    if (!color_enabled()) return pass ? "pass" : "fail";
    return pass ? "\033[32mpass\033[0m" : "\033[31mfail\033[0m";
}

/// Render a polynomial for text output, capped at `max_terms`.
std::string capped(const FormalPoly& p, std::size_t max_terms) {
    RenderOptions options;
    options.unicode_vars = false;
    options.max_terms = max_terms;
    return p.to_string(options);
}

std::string full(const FormalPoly& p) { return capped(p, 0); }

void emit(const Report& report, bool as_json, long timing_ms,
          std::size_t max_terms) {
    if (as_json) {
        json doc;
        doc["schema"] = kSchema;
        doc["tool"] = "lcav";
        doc["version"] = kVersion;
        doc["command"] = report.command;
        doc["structure"] = report.structure;
        doc["status"] = report.pass() ? "pass" : "fail";
        doc["checks"] = json::array();
        for (const CheckResult& c : report.checks) {
            json entry;
            entry["name"] = c.name;
            entry["status"] = c.pass ? "pass" : "fail";
            entry["residuals"] = c.residuals;
            entry["cases"] = c.cases;
            if (!c.pass) entry["counterexample"] = c.counterexample;
            if (!c.detail.is_null()) entry["detail"] = c.detail;
            doc["checks"].push_back(std::move(entry));
        }
        doc["timing_ms"] = timing_ms;
        std::cout << doc.dump(2) << "\n";
        return;
    }

    std::cout << "lcav " << report.command << "\n";
    std::cout << "structure: " << report.structure << "\n";
    for (const CheckResult& c : report.checks) {
        std::cout << "  " << c.name << ": " << status_text(c.pass)
                  << " (checked " << c.cases << ", nonzero " << c.residuals
                  << ")\n";
        if (!c.pass && !c.counterexample.empty()) {
            std::string text = c.counterexample;
            if (max_terms != 0 && text.size() > 400) {
                text = text.substr(0, 400) + " ...";
            }
            std::cout << "    counterexample: " << text << "\n";
        }
    }
    std::cout << "result: " << status_text(report.pass()) << " ("
              << timing_ms << " ms)\n";
}

// ---------------------------------------------------------------------------
// Inputs
// ---------------------------------------------------------------------------

struct SetValues {
    std::map<std::string, Rational> values;
    std::vector<std::string> order; // as given on the command line
};

SetValues parse_sets(const std::vector<std::string>& raw) {
    SetValues out;
    for (const std::string& item : raw) {
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw CLI::ValidationError("--set",
                                       "expected name=value, got '" + item +
                                           "'");
        }
        const std::string name = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        try {
            out.values[name] = parse_rational(value);
        } catch (const std::invalid_argument& e) {
            throw CLI::ValidationError("--set", e.what());
        }
        out.order.push_back(name);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CLI::ValidationError("input", "cannot open file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Load a structure from a family id or an .lsca file, applying --set.
struct LoadedStructure {
    ConformalAlgebra algebra;
    const Family* family = nullptr; // null for file input
};

LoadedStructure load_structure(const std::string& file,
                               const std::string& family_id,
                               const SetValues& sets) {
    if (!family_id.empty()) {
        const Family& f = family(family_id);
        return LoadedStructure{family_algebra(f, sets.values), &f};
    }
    ConformalAlgebra A = parse_and_elaborate(read_file(file));
    for (const auto& [name, value] : sets.values) {
        A = A.specialize(name, value);
    }
    return LoadedStructure{std::move(A), nullptr};
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

CheckResult residual_check(const std::string& name,
                           const std::vector<Residual>& residuals,
                           const ConformalAlgebra& A, std::size_t max_terms) {
    CheckResult result;
    result.name = name;
    result.cases = residuals.size();
    json detail = json::array();
    for (const Residual& r : residuals) {
        if (r.is_zero()) continue;
        ++result.residuals;
        RenderOptions options;
        const std::string rendering = element_to_string(A, r.value, options);
        if (result.counterexample.empty()) {
            result.counterexample = r.label + " = " + rendering;
        }
        detail.push_back({{"label", r.label}, {"residual", rendering}});
    }
    (void)max_terms;
    result.pass = result.residuals == 0;
    if (!result.pass) result.detail = std::move(detail);
    return result;
}

int cmd_check(const std::string& file, const std::string& family_id,
              const SetValues& sets, std::string axioms, bool as_json,
              std::size_t max_terms, const std::string& command_echo) {
    const auto start = std::chrono::steady_clock::now();
    const LoadedStructure loaded = load_structure(file, family_id, sets);
    const ConformalAlgebra& A = loaded.algebra;

    if (axioms.empty()) {
        switch (A.kind()) {
        case AlgebraKind::Lie: axioms = "lie"; break;
        case AlgebraKind::LeftSymmetric:
            axioms = loaded.family != nullptr ? "lsc,compat" : "lsc";
            break;
        case AlgebraKind::Raw:
            throw CLI::ValidationError(
                "--axioms", "a raw table has no default axiom suite; pass "
                            "--axioms lie, lsc, or compat");
        }
    }

    Report report;
    report.command = command_echo;
    report.structure = loaded.family != nullptr ? loaded.family->id : file;

    std::stringstream axioms_stream(axioms);
    std::string axiom;
    while (std::getline(axioms_stream, axiom, ',')) {
        if (axiom == "lie") {
            report.checks.push_back(
                residual_check("skew", residuals_skew(A), A, max_terms));
            report.checks.push_back(
                residual_check("jacobi", residuals_jacobi(A), A, max_terms));
        } else if (axiom == "lsc") {
            report.checks.push_back(residual_check(
                "left_symmetry", residuals_left_symmetric(A), A, max_terms));
        } else if (axiom == "compat") {
            if (loaded.family == nullptr) {
                throw CLI::ValidationError(
                    "--axioms", "'compat' needs --family (the compatible Lie "
                                "bracket comes from the catalog)");
            }
            const ConformalAlgebra target =
                family_witt_target(*loaded.family, sets.values);
            const CompatibilityReport compat =
                is_compatible_structure(target, A);
            CheckResult result;
            result.name = "sub_adjacent_matches";
            result.cases = A.rank() * A.rank();
            result.residuals = compat.diffs.size();
            result.pass = compat.compatible;
            if (!compat.diffs.empty()) {
                const CompatibilityDiff& d = compat.diffs.front();
                RenderOptions options;
                result.counterexample =
                    "commutator[" + A.generator_name(d.left) + "," +
                    A.generator_name(d.right) + "] = " +
                    element_to_string(A, d.actual, options) + ", bracket = " +
                    element_to_string(A, d.expected, options);
            }
            report.checks.push_back(std::move(result));
        } else {
            throw CLI::ValidationError("--axioms", "unknown axiom suite '" +
                                                       axiom +
                                                       "' (expected lie, "
                                                       "lsc, or compat)");
        }
    }

    const auto elapsed = std::chrono::steady_clock::now() - start;
    emit(report, as_json,
         std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
             .count(),
         max_terms);
    return report.pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// equations
// ---------------------------------------------------------------------------

int cmd_equations(const std::string& file, const std::string& family_id,
                  const SetValues& sets, bool as_json, std::size_t max_terms,
                  const std::string& command_echo) {
    const auto start = std::chrono::steady_clock::now();
    const LoadedStructure loaded = load_structure(file, family_id, sets);

    AnsatzStructure ansatz = ansatz_from_algebra(loaded.algebra);
    FormalPoly a, b;
    if (loaded.family != nullptr) {
        a = loaded.family->witt_a;
        b = loaded.family->witt_b;
        for (const auto& [name, value] : sets.values) {
            a = a.substitute_param(name, value);
            b = b.substitute_param(name, value);
        }
    } else {
        a = FormalPoly::param("a");
        b = FormalPoly::param("b");
        for (const auto& [name, value] : sets.values) {
            a = a.substitute_param(name, value);
            b = b.substitute_param(name, value);
        }
    }

    Report report;
    report.command = command_echo;
    report.structure = loaded.family != nullptr ? loaded.family->id : file;

    for (const EquationResidual& r : equation_residuals(ansatz, a, b)) {
        CheckResult result;
        result.name = r.label;
        result.cases = 1;
        result.pass = r.is_zero();
        if (!result.pass) {
            result.residuals = 1;
            result.counterexample = capped(r.value, max_terms);
            result.detail = json{{"residual", full(r.value)}};
        }
        report.checks.push_back(std::move(result));
    }

    const auto elapsed = std::chrono::steady_clock::now() - start;
    emit(report, as_json,
         std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
             .count(),
         max_terms);
    return report.pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// coeff
// ---------------------------------------------------------------------------

int cmd_coeff(const std::string& family_id, const SetValues& sets,
              long window, const std::string& mode, bool as_json,
              std::size_t max_terms, const std::string& command_echo) {
    const auto start = std::chrono::steady_clock::now();
    const Family& f = family(family_id);

    WindowReport window_report;
    if (mode == "corollary") {
        window_report = verify_corollary(f, sets.values, window);
    } else if (mode == "left-symmetry") {
        window_report =
            verify_left_symmetry_window(family_algebra(f, sets.values),
                                        window);
    } else if (mode == "lie") {
        const ConformalAlgebra A = family_algebra(f, sets.values);
        FormalPoly a = f.witt_a;
        FormalPoly b = f.witt_b;
        for (const auto& [name, value] : sets.values) {
            a = a.substitute_param(name, value);
            b = b.substitute_param(name, value);
        }
        window_report =
            verify_lie_window(A, a.scalar_value(), b.scalar_value(), window);
    } else {
        throw CLI::ValidationError("--mode", "unknown mode '" + mode +
                                                 "' (expected left-symmetry, "
                                                 "corollary, or lie)");
    }

    Report report;
    report.command = command_echo;
    report.structure = f.id;

    CheckResult result;
    result.name = mode;
    result.cases = window_report.checked;
    result.residuals = window_report.mismatches.size();
    result.pass = window_report.ok;
    if (!window_report.mismatches.empty()) {
        const WindowMismatch& mm = window_report.mismatches.front();
        result.counterexample = mm.label + ": expected " + mm.expected +
                                ", actual " + mm.actual;
        json detail = json::array();
        for (const WindowMismatch& each : window_report.mismatches) {
            detail.push_back({{"label", each.label},
                              {"expected", each.expected},
                              {"actual", each.actual}});
        }
        result.detail = std::move(detail);
    }
    result.detail["window"] = window_report.window;
    report.checks.push_back(std::move(result));

    const auto elapsed = std::chrono::steady_clock::now() - start;
    emit(report, as_json,
         std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
             .count(),
         max_terms);
    return report.pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// refute
// ---------------------------------------------------------------------------

int cmd_refute(bool as_json, std::size_t max_terms,
               const std::string& command_echo) {
    const auto start = std::chrono::steady_clock::now();

    Report report;
    report.command = command_echo;
    report.structure = "refutation-witnesses";

    std::vector<WitnessCheck> checks;
    std::string failure;
    try {
        checks = verify_refutation_witnesses();
    } catch (const StaleWitnessError& e) {
        failure = e.what();
    }

    const std::vector<RefutationWitness>& witnesses = refutation_witnesses();
    if (failure.empty()) {
        for (std::size_t i = 0; i < witnesses.size(); ++i) {
            const RefutationWitness& w = witnesses[i];
            CheckResult result;
            result.name = w.id;
            result.cases = 1;
            result.pass = checks[i].ok;
            json point;
            for (const auto& [name, value] : w.point) {
                point[name] = rat_to_string(value);
            }
            result.detail = json{{"refutes", w.description},
                                 {"equation", w.equation},
                                 {"point", point},
                                 {"value", rat_to_string(checks[i].actual)}};
            report.checks.push_back(std::move(result));
        }
    } else {
        CheckResult result;
        result.name = "witnesses";
        result.cases = witnesses.size();
        result.residuals = 1;
        result.pass = false;
        result.counterexample = failure;
        report.checks.push_back(std::move(result));
    }

    const auto elapsed = std::chrono::steady_clock::now() - start;
    emit(report, as_json,
         std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
             .count(),
         max_terms);
    return report.pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// list
// ---------------------------------------------------------------------------

std::string constraint_string(const Family& f) {
    std::ostringstream out;
    bool first = true;
    for (const ParamDecl& p : f.free_params) {
        if (!first) out << ", ";
        first = false;
        out << symbol_name(p.id);
        if (p.nonzero) out << " != 0";
    }
    for (const auto& [x, y] : f.not_both_zero) {
        if (!first) out << ", ";
        first = false;
        out << "(" << x << ", " << y << ") != (0, 0)";
    }
    if (first) out << "none";
    return out.str();
}

int cmd_list(bool as_json, const std::string& command_echo) {
    const auto start = std::chrono::steady_clock::now();

    if (as_json) {
        json doc;
        doc["schema"] = kSchema;
        doc["tool"] = "lcav";
        doc["version"] = kVersion;
        doc["command"] = command_echo;
        doc["families"] = json::array();
        for (const Family& f : families()) {
            const ConformalAlgebra A = family_algebra(f);
            json entry;
            entry["id"] = f.id;
            entry["summary"] = f.summary;
            entry["constraints"] = constraint_string(f);
            json table;
            RenderOptions options;
            for (GeneratorId x = 0; x < A.rank(); ++x) {
                for (GeneratorId y = 0; y < A.rank(); ++y) {
                    const std::string key = "[" + A.generator_name(x) +
                                            " _ " + A.generator_name(y) + "]";
                    table[key] =
                        element_to_string(A, A.entry(x, y), options);
                }
            }
            entry["table"] = std::move(table);
            doc["families"].push_back(std::move(entry));
        }
        const auto elapsed = std::chrono::steady_clock::now() - start;
        doc["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
                .count();
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    std::cout << "catalog: compatible left-symmetric structures on the "
                 "rank-2 Lie algebra\n\n";
    for (const Family& f : families()) {
        const ConformalAlgebra A = family_algebra(f);
        std::cout << f.id << ": " << f.summary << "\n";
        std::cout << "  constraints: " << constraint_string(f) << "\n";
        RenderOptions options;
        for (GeneratorId x = 0; x < A.rank(); ++x) {
            for (GeneratorId y = 0; y < A.rank(); ++y) {
                std::cout << "  [" << A.generator_name(x) << " _ "
                          << A.generator_name(y) << "] = "
                          << element_to_string(A, A.entry(x, y), options)
                          << "\n";
            }
        }
        std::cout << "\n";
    }
    return 0;
}

std::string echo_args(int argc, char** argv) {
    std::string out;
    for (int i = 1; i < argc; ++i) {
        if (i != 1) out += " ";
        out += argv[i];
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for Lie / left-symmetric conformal "
                 "algebra structures"};
    app.set_version_flag("--version", std::string("lcav ") + kVersion);
    app.require_subcommand(1);

    bool as_json = false;
    std::size_t max_terms = 12;
    app.add_flag("--json", as_json, "emit a report-v1 JSON document");
    app.add_option("--max-terms", max_terms,
                   "term cap for text-mode polynomial rendering (0 = "
                   "unlimited)");

    const std::string command_echo = echo_args(argc, argv);

    // check ----------------------------------------------------------------
    auto* check = app.add_subcommand(
        "check", "verify axiom suites on a family or .lsca file");
    std::string check_file, check_family, check_axioms;
    std::vector<std::string> check_sets;
    check->add_option("input", check_file, ".lsca source file");
    check->add_option("--family", check_family, "catalog family id (T1..T11)");
    check->add_option("--set", check_sets,
                      "parameter assignment name=value (value p or p/q)");
    check->add_option("--axioms", check_axioms,
                      "comma list: lie, lsc, compat (default from the "
                      "structure kind)");

    // equations --------------------------------------------------------------
    auto* equations = app.add_subcommand(
        "equations", "evaluate the 14 rank-2 ansatz structure equations");
    std::string eq_file, eq_family;
    std::vector<std::string> eq_sets;
    equations->add_option("input", eq_file, ".lsca source file");
    equations->add_option("--family", eq_family, "catalog family id");
    equations->add_option("--set", eq_sets, "parameter assignment name=value");

    // coeff ------------------------------------------------------------------
    auto* coeff = app.add_subcommand(
        "coeff", "coefficient-algebra window verifications");
    std::string coeff_family, coeff_mode;
    std::vector<std::string> coeff_sets;
    long coeff_window = 3;
    coeff->add_option("--family", coeff_family, "catalog family id")
        ->required();
    coeff->add_option("--set", coeff_sets, "parameter assignment name=value");
    coeff->add_option("--window", coeff_window,
                      "index window radius (default 3)");
    coeff->add_option("--mode", coeff_mode,
                      "left-symmetry | corollary | lie")
        ->required();

    // refute -----------------------------------------------------------------
    auto* refute = app.add_subcommand(
        "refute", "verify the frozen excluded-branch witnesses");

    // list -------------------------------------------------------------------
    auto* list = app.add_subcommand("list", "print the structure catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        if (check->parsed()) {
            if (check_file.empty() == check_family.empty()) {
                std::cerr << "lcav: check needs exactly one of an input "
                             "file or --family\n";
                return 3;
            }
            return cmd_check(check_file, check_family, parse_sets(check_sets),
                             check_axioms, as_json, max_terms, command_echo);
        }
        if (equations->parsed()) {
            if (eq_file.empty() == eq_family.empty()) {
                std::cerr << "lcav: equations needs exactly one of an input "
                             "file or --family\n";
                return 3;
            }
            return cmd_equations(eq_file, eq_family, parse_sets(eq_sets),
                                 as_json, max_terms, command_echo);
        }
        if (coeff->parsed()) {
            if (coeff_window < 0) {
                std::cerr << "lcav: --window must be nonnegative\n";
                return 3;
            }
            return cmd_coeff(coeff_family, parse_sets(coeff_sets),
                             coeff_window, coeff_mode, as_json, max_terms,
                             command_echo);
        }
        if (refute->parsed()) {
            return cmd_refute(as_json, max_terms, command_echo);
        }
        if (list->parsed()) {
            return cmd_list(as_json, command_echo);
        }
    } catch (const ParseError& e) {
        std::cerr << "lcav: parse error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "lcav: " << e.what() << "\n";
        return 3;
    } catch (const InvalidParameterError& e) {
        std::cerr << "lcav: " << e.what() << "\n";
        return 3;
    } catch (const CatalogError& e) {
        std::cerr << "lcav: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "lcav: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
