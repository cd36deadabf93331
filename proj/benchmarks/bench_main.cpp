#include "capev/blowup.hpp"
#include "capev/coloring.hpp"
#include "capev/graph.hpp"
#include "capev/oracles.hpp"
#include "capev/structure.hpp"

#include <benchmark/benchmark.h>

using namespace capev;

namespace {

void BM_ExactChromaticCycleBlowup(benchmark::State& state) {
    int len = int(state.range(0)), k = int(state.range(1));
    auto b = cycle_blowup(len, k);
    for (auto _ : state) {
        OracleResult r = exact_chromatic(b.graph);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_ExactChromaticCycleBlowup)
    ->Args({5, 2})
    ->Args({5, 4})
    ->Args({7, 3})
    ->Args({9, 2});

void BM_MaxClique(benchmark::State& state) {
    auto b = cycle_blowup(7, int(state.range(0)));
    for (auto _ : state) {
        OracleResult r = max_clique_size(b.graph);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_MaxClique)->Arg(3)->Arg(6);

void BM_ColorBlowupEngine(benchmark::State& state) {
    auto b = cycle_blowup(7, int(state.range(0)));
    BoundParams p73(7, 3);
    for (auto _ : state) {
        Certificate c = color_blowup(b.map, p73);
        benchmark::DoNotOptimize(c.colors_used);
    }
}
BENCHMARK(BM_ColorBlowupEngine)->Arg(4)->Arg(7);

void BM_HoleEnumerationPetersen(benchmark::State& state) {
    Graph p = petersen_graph();
    for (auto _ : state) {
        auto holes = enumerate_holes(p, 9);
        benchmark::DoNotOptimize(holes.size());
    }
}
BENCHMARK(BM_HoleEnumerationPetersen);

void BM_SkeletonCorpus(benchmark::State& state) {
    for (auto _ : state) {
        auto corpus = generate_skeleton_corpus(42, int(state.range(0)), 2);
        benchmark::DoNotOptimize(corpus.size());
    }
}
BENCHMARK(BM_SkeletonCorpus)->Arg(14)->Arg(18);

void BM_PathExtension(benchmark::State& state) {
    PathBlowup pb{{3, 3, 3, 3, 3, 3, 3, 3}, 8}; // n = 7, omega = 6
    std::vector<int> v0{1, 2, 3}, vn{4, 5, 6}, s{1, 2};
    for (auto _ : state) {
        PathColoring c = path_extension(pb, v0, vn, s, 3);
        benchmark::DoNotOptimize(c.size());
    }
}
BENCHMARK(BM_PathExtension);

} // namespace

BENCHMARK_MAIN();
