#include "mforge/coordinatize.hpp"
#include "mforge/extend.hpp"
#include "mforge/named.hpp"

#include <benchmark/benchmark.h>

using namespace mforge;

static void bm_extend_whirl(benchmark::State& state) {
    StandardForm a = as_standard_form(whirl_matrix_A());
    for (auto _ : state) {
        ExtensionReport r = extend_all(a, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(r.classes.size());
    }
}
BENCHMARK(bm_extend_whirl)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void bm_extend_nonfano(benchmark::State& state) {
    StandardForm a = as_standard_form(whirl_matrix_A().with_column(std::vector<int>{1, 1, 1}, 7));
    for (auto _ : state) {
        ExtensionReport r = extend_all(a);
        benchmark::DoNotOptimize(r.classes.size());
    }
}
BENCHMARK(bm_extend_nonfano)->Unit(benchmark::kMillisecond);

static void bm_coordinatize_q6(benchmark::State& state) {
    Matroid q6 = builtin_matroid("Q6").matroid;
    GaloisField f = GaloisField::make(5);
    CoordinatizationProblem prob = build_problem(q6);
    for (auto _ : state) {
        CoordinatizationReport r = enumerate_representations(prob, f, 12,
                                                             static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(r.representable);
    }
}
BENCHMARK(bm_coordinatize_q6)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void bm_catalog_to_seven(benchmark::State& state) {
    std::vector<StandardForm> seeds = {as_standard_form(whirl_matrix_A()),
                                       as_standard_form(whirl_matrix_B())};
    for (auto _ : state) {
        auto catalog = generate_catalog(seeds, 7);
        benchmark::DoNotOptimize(catalog.size());
    }
}
BENCHMARK(bm_catalog_to_seven)->Unit(benchmark::kMillisecond);
