#include "mforge/gf.hpp"

#include <benchmark/benchmark.h>

using namespace mforge;

static void bm_field_construction(benchmark::State& state) {
    int q = static_cast<int>(state.range(0));
    for (auto _ : state) {
        GaloisField f = GaloisField::of_order(q);
        benchmark::DoNotOptimize(f.q());
    }
}
BENCHMARK(bm_field_construction)->Arg(5)->Arg(49)->Arg(121);

static void bm_mul_inv_scan(benchmark::State& state) {
    GaloisField f = GaloisField::of_order(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        int acc = 1;
        for (int a = 1; a < f.q(); ++a) acc = f.mul(acc, f.inv(a));
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(bm_mul_inv_scan)->Arg(5)->Arg(9)->Arg(49);

static void bm_frobenius_orbit(benchmark::State& state) {
    GaloisField f = GaloisField::make(3, 3);
    for (auto _ : state) {
        int acc = 0;
        for (int a = 0; a < f.q(); ++a)
            for (int j = 0; j < f.k(); ++j) acc ^= f.frobenius(a, j);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(bm_frobenius_orbit);
