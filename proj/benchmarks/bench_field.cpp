#include <benchmark/benchmark.h>

#include "sumrank/gf_tower.hpp"

using namespace sumrank;

namespace {

const Tower& tower_s4() {
    static Tower tw = Tower::build(2, 1, 2, 4, 15);
    return tw;
}

const Tower& tower_s7() {
    static Tower tw = Tower::build(2, 1, 2, 7, 127);
    return tw;
}

}  // namespace

static void BM_tower_build(benchmark::State& state) {
    for (auto _ : state) {
        Tower tw = Tower::build(2, 1, 2, static_cast<unsigned>(state.range(0)),
                                (1u << state.range(0)) - 1);
        benchmark::DoNotOptimize(tw.field_size());
    }
}
BENCHMARK(BM_tower_build)->Arg(4)->Arg(7);

static void BM_field_mul(benchmark::State& state) {
    const Tower& tw = state.range(0) == 4 ? tower_s4() : tower_s7();
    Felem x = 3, y = tw.field_size() - 2;
    for (auto _ : state) {
        x = tw.mul(x, y);
        benchmark::DoNotOptimize(x);
        if (x == 0) x = 3;
    }
}
BENCHMARK(BM_field_mul)->Arg(4)->Arg(7);

static void BM_field_inv(benchmark::State& state) {
    const Tower& tw = tower_s7();
    Felem x = 3;
    for (auto _ : state) {
        x = tw.inv(x);
        benchmark::DoNotOptimize(x);
        x = tw.add(x, 1);
        if (x == 0) x = 3;
    }
}
BENCHMARK(BM_field_inv);

static void BM_frobenius(benchmark::State& state) {
    const Tower& tw = tower_s7();
    Felem x = 5;
    for (auto _ : state) {
        x = tw.sigma(x, 1);
        benchmark::DoNotOptimize(x);
        x = tw.add(x, 1);
        if (x == 0) x = 5;
    }
}
BENCHMARK(BM_frobenius);
