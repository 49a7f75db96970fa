#include <benchmark/benchmark.h>

#include "dpcolor/constructions.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/solver.hpp"

using namespace dpcolor;

// n = 6 is the largest instance whose 36 cover slots fit the solver's
// bitmask domain; bigger ones are structural objects, not solver inputs.
static void BM_HardInstanceRefutation(benchmark::State& state) {
    Cover c = hard_instance(6).cover;
    for (auto _ : state) {
        SolveResult r = find_transversal(c);
        benchmark::DoNotOptimize(r.satisfiable);
    }
}
BENCHMARK(BM_HardInstanceRefutation);

static void BM_ChiDpCycle(benchmark::State& state) {
    Graph g = cycle(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        int k = chi_dp(g);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_ChiDpCycle)->Arg(6)->Arg(8)->Arg(10);

static void BM_FamilyScanJoinC4(benchmark::State& state) {
    Graph j = join(cycle(4), 1);
    SolveOptions opts;
    opts.jobs = static_cast<int>(state.range(0));
    for (auto _ : state) {
        DpDecision d = is_dp_colorable_at(j, 3, opts);
        benchmark::DoNotOptimize(d.colorable);
    }
}
BENCHMARK(BM_FamilyScanJoinC4)->Arg(1)->Arg(2)->Arg(4);

static void BM_ChromaticJoin(benchmark::State& state) {
    Graph j = join(complete_bipartite(3, 3), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        int k = chromatic_number(j);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_ChromaticJoin)->Arg(2)->Arg(7);

static void BM_EnumerateCovers(benchmark::State& state) {
    Graph g = cycle(6);
    for (auto _ : state) {
        CoverFamily f = enumerate_covers(g, 3);
        long long total = f.count();
        for (long long i = 0; i < total; ++i)
            benchmark::DoNotOptimize(f.at(i).h_edges.size());
    }
}
BENCHMARK(BM_EnumerateCovers);

BENCHMARK_MAIN();
