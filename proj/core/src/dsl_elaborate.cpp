/*
 * dsl_elaborate.cpp
 * -----------------
 * Folding of `.lsca` syntax trees into conformal algebras. Bracket
 * expressions denote module elements: polynomials in (del, lam) and the
 * declared parameters, linear in the generators.
 */
#include "lca/dsl.hpp"

#include <map>

namespace lca {

namespace {

/// Value of a subexpression: a scalar polynomial part plus one
/// polynomial coefficient per generator.
struct FoldValue {
    FormalPoly scalar;
    std::vector<FormalPoly> vec;

    explicit FoldValue(std::size_t rank) : vec(rank) {}

    bool has_generator_part() const {
        for (const FormalPoly& c : vec) {
            if (!c.is_zero()) return true;
        }
        return false;
    }
};

class Folder {
public:
    explicit Folder(const AlgebraDef& def) : def_(def) {
        for (std::size_t i = 0; i < def.generators.size(); ++i) {
            generator_index_[def.generators[i].name] =
                static_cast<GeneratorId>(i);
        }
    }

    Element fold_clause(const BracketClause& clause) const {
        const FoldValue v = fold(*clause.value);
        if (!v.scalar.is_zero()) {
            throw ParseError(clause.value->span,
                             "bracket value for [" + clause.lhs + " _ " +
                                 clause.rhs +
                                 "] has a term with no generator factor");
        }
        Element e(def_.generators.size());
        e.components = v.vec;
        return e;
    }

private:
    FoldValue fold(const Expr& e) const {
        const std::size_t rank = def_.generators.size();
        switch (e.kind) {
        case Expr::Kind::Number: {
            FoldValue v(rank);
            v.scalar = FormalPoly(e.number);
            return v;
        }
        case Expr::Kind::Ident: {
            FoldValue v(rank);
            if (e.name == "del") {
                v.scalar = fp_del();
            } else if (e.name == "lam") {
                v.scalar = fp_lam();
            } else if (auto it = generator_index_.find(e.name);
                       it != generator_index_.end()) {
                v.vec[it->second] = FormalPoly(Rational(1));
            } else {
                v.scalar = FormalPoly::param(e.name);
            }
            return v;
        }
        case Expr::Kind::Neg: {
            FoldValue v = fold(*e.lhs);
            v.scalar = -v.scalar;
            for (FormalPoly& c : v.vec) c = -c;
            return v;
        }
        case Expr::Kind::Add:
        case Expr::Kind::Sub: {
            FoldValue a = fold(*e.lhs);
            const FoldValue b = fold(*e.rhs);
            if (e.kind == Expr::Kind::Add) {
                a.scalar = a.scalar + b.scalar;
                for (std::size_t i = 0; i < a.vec.size(); ++i) {
                    a.vec[i] = a.vec[i] + b.vec[i];
                }
            } else {
                a.scalar = a.scalar - b.scalar;
                for (std::size_t i = 0; i < a.vec.size(); ++i) {
                    a.vec[i] = a.vec[i] - b.vec[i];
                }
            }
            return a;
        }
        case Expr::Kind::Mul: {
            const FoldValue a = fold(*e.lhs);
            const FoldValue b = fold(*e.rhs);
            const bool a_gen = a.has_generator_part();
            const bool b_gen = b.has_generator_part();
            if (a_gen && b_gen) {
                throw ParseError(e.span,
                                 "a product of generators is not a module "
                                 "element");
            }
            FoldValue v(a.vec.size());
            v.scalar = a.scalar * b.scalar;
            if (a_gen) {
                for (std::size_t i = 0; i < v.vec.size(); ++i) {
                    v.vec[i] = a.vec[i] * b.scalar;
                }
            } else {
                for (std::size_t i = 0; i < v.vec.size(); ++i) {
                    v.vec[i] = a.scalar * b.vec[i];
                }
            }
            return v;
        }
        case Expr::Kind::Pow: {
            if (e.exponent < 0) {
                throw ParseError(e.exponent_span,
                                 "negative exponents are not allowed");
            }
            const FoldValue base = fold(*e.lhs);
            if (base.has_generator_part()) {
                if (e.exponent == 1) return base;
                throw ParseError(e.exponent_span,
                                 "cannot raise a generator to a power");
            }
            FoldValue v(base.vec.size());
            v.scalar = base.scalar.pow(static_cast<int>(e.exponent));
            return v;
        }
        }
        throw ParseError(e.span, "malformed expression");
    }

    const AlgebraDef& def_;
    std::map<std::string, GeneratorId> generator_index_;
};

} // namespace

ConformalAlgebra elaborate(const AlgebraDef& def) {
    const std::size_t rank = def.generators.size();

    std::vector<std::string> generators;
    generators.reserve(rank);
    for (const GeneratorDef& g : def.generators) generators.push_back(g.name);

    std::vector<ParamDecl> params;
    params.reserve(def.params.size());
    for (const ParamDef& p : def.params) {
        params.push_back(param_decl(p.name, p.nonzero));
    }

    std::vector<Element> table(rank * rank, Element(rank));
    Folder folder(def);
    std::map<std::string, GeneratorId> index;
    for (std::size_t i = 0; i < rank; ++i) index[def.generators[i].name] = i;
    for (const BracketClause& clause : def.clauses) {
        const GeneratorId x = index.at(clause.lhs);
        const GeneratorId y = index.at(clause.rhs);
        table[x * rank + y] = folder.fold_clause(clause);
    }

    return ConformalAlgebra(def.name, def.kind, std::move(generators),
                            std::move(params), std::move(table));
}

ConformalAlgebra parse_and_elaborate(const std::string& text) {
    return elaborate(parse_algebra(text));
}

} // namespace lca
