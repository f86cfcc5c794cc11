#include <benchmark/benchmark.h>

#include "cyclohecke/bgg.hpp"
#include "cyclohecke/calibrated.hpp"
#include "cyclohecke/crystal.hpp"
#include "cyclohecke/level1.hpp"
#include "cyclohecke/seminormal.hpp"

using namespace ch;

static void BM_CrystalLayers(benchmark::State& state) {
    const Charge c({0, 1, 4}, 7);
    for (auto _ : state) benchmark::DoNotOptimize(crystal_layers(static_cast<int>(state.range(0)), c));
}
BENCHMARK(BM_CrystalLayers)->Arg(6)->Arg(8)->Arg(10);

static void BM_EnumerateCali(benchmark::State& state) {
    const Charge c({0, 1, 4}, 7);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_cali(static_cast<int>(state.range(0)), c));
}
BENCHMARK(BM_EnumerateCali)->Arg(6)->Arg(9);

static void BM_NoStuttering(benchmark::State& state) {
    const Charge c({0, 1, 4}, 7);
    auto layer = crystal_layers(8, c)[8];
    for (auto _ : state) {
        NoStutteringOracle ns(c);
        int k = 0;
        for (const auto& mp : layer) k += ns(mp);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_NoStuttering);

static void BM_SeminormalModule(benchmark::State& state) {
    auto cls = column_reading_class({3, 2, 1}, 7);
    for (auto _ : state) {
        auto mod = seminormal_module(cls, 7, 1);
        benchmark::DoNotOptimize(verify_hecke_relations(mod));
    }
}
BENCHMARK(BM_SeminormalModule);

static void BM_BlockPoset(benchmark::State& state) {
    AlcoveFrame f(Charge({0, 1}, 4), {2, 1});
    Multipartition la(std::vector<Partition>{{2, 1}, {2}});
    for (auto _ : state) {
        auto P = block_poset(la, f);
        benchmark::DoNotOptimize(sign_assignment(P));
    }
}
BENCHMARK(BM_BlockPoset);

static void BM_KLRRelations(benchmark::State& state) {
    AlcoveFrame f(Charge({0}, 5), {3});
    Multipartition la(std::vector<Partition>{{3, 2, 1}});
    for (auto _ : state) benchmark::DoNotOptimize(verify_klr_relations(build_klr_module(la, f)));
}
BENCHMARK(BM_KLRRelations);

static void BM_UnitaryLocus(benchmark::State& state) {
    const auto parts = partitions(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const auto& la : parts) benchmark::DoNotOptimize(unitary_locus(la));
}
BENCHMARK(BM_UnitaryLocus)->Arg(10);

BENCHMARK_MAIN();
