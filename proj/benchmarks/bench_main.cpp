#include <benchmark/benchmark.h>

#include "ybx/catalog.hpp"
#include "ybx/suite.hpp"

using namespace ybx;

namespace {

QMatrix random_matrix(SplitMix64& rng, int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = sample_rat(rng);
    return m;
}

void BM_rational_matmul_4x4(benchmark::State& state) {
    SplitMix64 rng(1);
    QMatrix a = random_matrix(rng, 4), b = random_matrix(rng, 4);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_rational_matmul_4x4);

void BM_bareiss_det_6x6(benchmark::State& state) {
    SplitMix64 rng(2);
    QMatrix m = random_matrix(rng, 6);
    for (auto _ : state) benchmark::DoNotOptimize(m.det());
}
BENCHMARK(BM_bareiss_det_6x6);

void BM_projector_from_pair_q4(benchmark::State& state) {
    SplitMix64 rng(3);
    ProjectorPair p = sample_projector_pair(rng, 4, 2);
    for (auto _ : state) benchmark::DoNotOptimize(projector_from_pair(p.kernel, p.image));
}
BENCHMARK(BM_projector_from_pair_q4);

void BM_yang_baxter_check_adler(benchmark::State& state) {
    const CatalogEntry* e = find_map("adler");
    YbMap map = e->make({});
    TupleSampler s = e->sampler({});
    SplitMix64 rng(4);
    LabeledTuple t = sample_tuple(s, rng, 3);
    for (auto _ : state) benchmark::DoNotOptimize(check_yang_baxter(map, t));
}
BENCHMARK(BM_yang_baxter_check_adler);

void BM_yang_baxter_check_grassmann_q4(benchmark::State& state) {
    const CatalogEntry* e = find_map("grassmann");
    CatalogConfig cfg{.dim = 4, .rank = 2};
    YbMap map = e->make(cfg);
    TupleSampler s = e->sampler(cfg);
    SplitMix64 rng(5);
    LabeledTuple t = sample_tuple(s, rng, 3);
    for (auto _ : state) benchmark::DoNotOptimize(check_yang_baxter(map, t));
}
BENCHMARK(BM_yang_baxter_check_grassmann_q4);

void BM_monodromy_charpoly_adler_n5(benchmark::State& state) {
    const CatalogEntry* e = find_map("adler");
    LaxPack pack = e->lax({});
    TupleSampler s = e->sampler({});
    SplitMix64 rng(6);
    LabeledTuple t = sample_tuple(s, rng, 5);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(monodromy(pack.mono, t)));
}
BENCHMARK(BM_monodromy_charpoly_adler_n5);

void BM_spectral_invariance_projector_n4(benchmark::State& state) {
    const CatalogEntry* e = find_map("grassmann");
    CatalogConfig cfg{.dim = 2, .rank = 1};
    YbMap map = e->make(cfg);
    LaxPack pack = e->lax(cfg);
    TupleSampler s = e->sampler(cfg);
    SplitMix64 rng(7);
    LabeledTuple t = sample_tuple(s, rng, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_spectral_invariance(pack.mono, map, 1, t, LaxMode::Strict));
}
BENCHMARK(BM_spectral_invariance_projector_n4);

} // namespace

BENCHMARK_MAIN();
