#include <benchmark/benchmark.h>

#include <random>

#include "sumrank/decoder.hpp"
#include "sumrank/srbch.hpp"

using namespace sumrank;

static void BM_table_appendix(benchmark::State& state) {
    const unsigned s = static_cast<unsigned>(state.range(0));
    Tower tw = Tower::build(2, 1, 2, s, (1u << s) - 1);
    for (auto _ : state) {
        auto rows = generate_table(tw, preset_rows(s));
        benchmark::DoNotOptimize(rows.size());
    }
}
BENCHMARK(BM_table_appendix)->Arg(4)->Arg(7);

static void BM_srbch_construct(benchmark::State& state) {
    Tower tw = Tower::build(2, 1, 2, 4, 15);
    for (auto _ : state) {
        SrBchCode code = srbch_construct(tw, 1, static_cast<unsigned>(state.range(0)));
        benchmark::DoNotOptimize(code.dim);
    }
}
BENCHMARK(BM_srbch_construct)->Arg(5)->Arg(9);

static void BM_sum_rank_weight(benchmark::State& state) {
    Tower tw = Tower::build(2, 1, 2, 4, 15);
    Partition part{tw.ell(), tw.m()};
    std::mt19937_64 rng(1);
    const auto& fe = tw.subfield_elements(tw.deg_f());
    std::uniform_int_distribution<std::size_t> d(0, fe.size() - 1);
    std::vector<Felem> v(part.n());
    for (auto& x : v) x = fe[d(rng)];
    for (auto _ : state) {
        benchmark::DoNotOptimize(sum_rank_weight(tw, v, part, ext_q0(tw)));
    }
}
BENCHMARK(BM_sum_rank_weight);

static void BM_mindist_bruteforce(benchmark::State& state) {
    Tower tw = Tower::build(2, 1, 2, 3, 7);
    Partition part{tw.ell(), tw.m()};
    SrBchCode code = srbch_construct(tw, 1, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            min_sum_rank_distance_bruteforce(tw, code.genmat, part, ext_q0(tw)));
    }
}
BENCHMARK(BM_mindist_bruteforce);

static void BM_decode_direct(benchmark::State& state) {
    Tower tw = Tower::build(2, 1, 2, 3, 7);
    Partition part{tw.ell(), tw.m()};
    SrBchCode code = srbch_construct(tw, 1, 5);
    std::mt19937_64 rng(2);
    const auto& fe = tw.subfield_elements(tw.deg_f());
    std::uniform_int_distribution<std::size_t> d(0, fe.size() - 1);
    std::vector<Felem> msg(code.genmat.rows);
    for (auto& x : msg) x = fe[d(rng)];
    auto cw = vec_mat(tw, msg, code.genmat);
    auto err = sample_error(tw, part, code.radius(), rng);
    std::vector<Felem> y(cw.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = tw.add(cw[i], err[i]);
    for (auto _ : state) {
        auto res = decode(code, y);
        benchmark::DoNotOptimize(res.ok);
    }
}
BENCHMARK(BM_decode_direct);

BENCHMARK_MAIN();
