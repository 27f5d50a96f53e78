#include <benchmark/benchmark.h>

#include "radiogram/catalog.hpp"
#include "radiogram/frame.hpp"

using namespace radiogram;

namespace {

// A fixed four-solid TET_OCT cluster.
Design cluster() {
    Design d = initial_design(GrammarId::TetOct, ShapeKind::Tet);
    d = apply_move(d, {0, 0, ShapeKind::Oct, 0, 1});
    d = apply_move(d, {1, 3, ShapeKind::Tet, 1, -1});
    d = apply_move(d, {0, 2, ShapeKind::Tet, 2, 1});
    return d;
}

}  // namespace

static void BM_CanonicalKey(benchmark::State& state) {
    const Design d = cluster();
    const auto level = static_cast<Level>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_key(d, level));
}
BENCHMARK(BM_CanonicalKey)->DenseRange(0, 3);

static void BM_ApplyMove(benchmark::State& state) {
    const Design d = cluster();
    const Move m{3, 1, ShapeKind::Oct, 1, 1};
    for (auto _ : state) benchmark::DoNotOptimize(apply_move(d, m, ApplyMode::CountOnly));
}
BENCHMARK(BM_ApplyMove);

static void BM_ApplicableMoves(benchmark::State& state) {
    const Design d = cluster();
    for (auto _ : state) benchmark::DoNotOptimize(applicable_moves(d, state.range(0) != 0));
}
BENCHMARK(BM_ApplicableMoves)->Arg(0)->Arg(1);

static void BM_Sat(benchmark::State& state) {
    const Design d = cluster();
    for (auto _ : state) benchmark::DoNotOptimize(interiors_intersect(d.shapes[1], d.shapes[2]));
}
BENCHMARK(BM_Sat);

static void BM_MirrorTwin(benchmark::State& state) {
    const Design d = cluster();
    for (auto _ : state) benchmark::DoNotOptimize(mirror_twin(d));
}
BENCHMARK(BM_MirrorTwin);

static void BM_BuildCatalog(benchmark::State& state) {
    const auto grammar = static_cast<GrammarId>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_catalog({grammar, 1}));
}
BENCHMARK(BM_BuildCatalog)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_EnumerateCountOnly(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_labeled({GrammarId::TetTet, static_cast<int>(state.range(0)), ApplyMode::CountOnly}));
    }
}
BENCHMARK(BM_EnumerateCountOnly)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
