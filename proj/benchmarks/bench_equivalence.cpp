#include "mforge/equivalence.hpp"
#include "mforge/named.hpp"

#include <benchmark/benchmark.h>

using namespace mforge;

static void bm_geometric_positive(benchmark::State& state) {
    LabeledMatrix b = whirl_matrix_B(), c = whirl_matrix_C();
    for (auto _ : state) {
        auto w = geometrically_equivalent(b, c);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(bm_geometric_positive);

static void bm_geometric_negative(benchmark::State& state) {
    LabeledMatrix a = whirl_matrix_A(), b = whirl_matrix_B();
    for (auto _ : state) {
        auto w = geometrically_equivalent(a, b);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(bm_geometric_negative);

static void bm_projective_canonical(benchmark::State& state) {
    LabeledMatrix a = whirl_matrix_A();
    for (auto _ : state) {
        auto w = projective_equivalent(a, a);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(bm_projective_canonical);

static void bm_partition_six_reps(benchmark::State& state) {
    GaloisField f = GaloisField::make(5);
    std::vector<LabeledMatrix> reps;
    for (auto [a, b] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {2, 3}, {2, 4}, {4, 2}, {3, 4}})
        reps.push_back(triangle_family_matrix(f, a, b));
    for (auto _ : state) {
        ClassPartition part = partition_by_equivalence(reps, Relation::Geometric);
        benchmark::DoNotOptimize(part.classes.size());
    }
}
BENCHMARK(bm_partition_six_reps);

static void bm_isomorphism_seven_points(benchmark::State& state) {
    Matroid x7viaB = matroid_of_matrix(whirl_matrix_B().with_column(std::vector<int>{1, 1, 1}, 7));
    Matroid x7viaC = matroid_of_matrix(whirl_matrix_C().with_column(std::vector<int>{1, 1, 1}, 7));
    for (auto _ : state) {
        auto iso = find_isomorphism(x7viaB, x7viaC);
        benchmark::DoNotOptimize(iso);
    }
}
BENCHMARK(bm_isomorphism_seven_points);
