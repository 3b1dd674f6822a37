#include "placement/reductions.hpp"
#include "placement/solver.hpp"
#include "placement/verify.hpp"

#include <benchmark/benchmark.h>

using namespace placement;

namespace {

ColoredGraph grid(std::size_t rows, std::size_t cols) {
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const auto v = static_cast<VertexId>(r * cols + c);
            if (c + 1 < cols) edges.emplace_back(v, v + 1);
            if (r + 1 < rows) edges.emplace_back(v, static_cast<VertexId>(v + cols));
        }
    }
    return ColoredGraph(rows * cols, edges);
}

void BM_SolveGrid(benchmark::State& state, RulesetTag r) {
    const Position pos = Position::placement(r, grid(3, static_cast<std::size_t>(state.range(0))));
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        SolveResult res = solve_with_stats(pos, PlayerColor::Left);
        nodes = res.stats.nodes_expanded;
        benchmark::DoNotOptimize(res.winner);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK_CAPTURE(BM_SolveGrid, col, RulesetTag::Col)->DenseRange(2, 4);
BENCHMARK_CAPTURE(BM_SolveGrid, nogo, RulesetTag::GraphNoGo)->DenseRange(2, 4);

void BM_SolveGridWorkers(benchmark::State& state) {
    const Position pos = Position::placement(RulesetTag::Col, grid(3, 4));
    SolverOptions opts;
    opts.workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(outcome_class(pos, opts));
}
BENCHMARK(BM_SolveGridWorkers)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

void BM_ReduceColToNogo(benchmark::State& state) {
    const ColoredGraph g = grid(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reduce_col_to_nogo(g));
}
BENCHMARK(BM_ReduceColToNogo)->RangeMultiplier(4)->Range(4, 64);

void BM_SolvePosCnfMachine(benchmark::State& state) {
    const BtclMachine m = build_pos_cnf_machine(parse_pos_cnf("(1|2)&(2|3)&(1|3)"));
    for (auto _ : state) benchmark::DoNotOptimize(outcome_class(Position::btcl(m)));
}
BENCHMARK(BM_SolvePosCnfMachine);

void BM_Sweep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_reduction_sweep(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Sweep)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
