/*
 * bench_core.cpp
 * --------------
 * Microbenchmarks for the three hot paths of the verification pipeline:
 * formal-polynomial multiplication, symbolic axiom-residual evaluation,
 * and coefficient-window checks.
 */
#include <benchmark/benchmark.h>

#include "lca/catalog.hpp"
#include "lca/coeff.hpp"
#include "lca/conformal.hpp"

using namespace lca;

namespace {

/// Dense degree-`d` polynomial in all four formal variables with small
/// parameter coefficients: the worst realistic multiplication input.
FormalPoly dense_poly(int d) {
    const FormalPoly vars[] = {fp_del(), fp_lam(), fp_mu(), fp_nu()};
    FormalPoly out(1L);
    FormalPoly layer = FormalPoly::param("a") + FormalPoly(2L);
    for (int i = 0; i < d; ++i) {
        layer = layer * (vars[i % 4] + FormalPoly(Rational(i + 1)));
    }
    return out + layer;
}

void BM_formal_poly_multiply(benchmark::State& state) {
    const FormalPoly p = dense_poly(static_cast<int>(state.range(0)));
    const FormalPoly q = dense_poly(static_cast<int>(state.range(0)) + 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p * q);
    }
}
BENCHMARK(BM_formal_poly_multiply)->Arg(4)->Arg(6)->Arg(8);

void BM_left_symmetry_residuals(benchmark::State& state) {
    const Family& f =
        families().at(static_cast<std::size_t>(state.range(0)));
    const ConformalAlgebra A = family_algebra(f);
    for (auto _ : state) {
        benchmark::DoNotOptimize(residuals_left_symmetric(A));
    }
    state.SetLabel(f.id);
}
BENCHMARK(BM_left_symmetry_residuals)->Arg(0)->Arg(7)->Arg(8);

void BM_equation_residuals(benchmark::State& state) {
    const Family& f = family("T8");
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            equation_residuals(f.components, f.witt_a, f.witt_b));
    }
}
BENCHMARK(BM_equation_residuals);

void BM_coeff_window(benchmark::State& state) {
    const ConformalAlgebra A = family_algebra(
        family("T9"), {{"h1", Rational(1)}, {"k1", Rational(1)}});
    const long window = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_left_symmetry_window(A, window));
    }
}
BENCHMARK(BM_coeff_window)->Arg(1)->Arg(2)->Arg(3);

void BM_corollary_window(benchmark::State& state) {
    const Family& f = family("T5");
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_corollary(f, {}, state.range(0)));
    }
}
BENCHMARK(BM_corollary_window)->Arg(2)->Arg(4);

} // namespace

BENCHMARK_MAIN();
