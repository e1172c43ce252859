// Micro benchmarks for the model-building pipeline on pmed1. Solver
// calls are out of scope here; they dwarf everything below by orders
// of magnitude and depend on the installed binary.

#include <fstream>
#include <sstream>
#include <string>

#include <benchmark/benchmark.h>

#include "pcenter/bounds.hpp"
#include "pcenter/formulations.hpp"
#include "pcenter/instance.hpp"
#include "pcenter/ladder.hpp"
#include "pcenter/lp_format.hpp"
#include "pcenter/reduction.hpp"

namespace {

const pcenter::Instance& pmed1() {
    static const pcenter::Instance inst = [] {
        std::ifstream in(std::string(PCENTER_DATA_DIR) + "/orlib/pmed1.txt",
                         std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return pcenter::graph_to_instance(pcenter::parse_orlib(buf.str()));
    }();
    return inst;
}

const pcenter::Instance& pmed1_clamped() {
    static const pcenter::Instance inst =
        pcenter::clamp_distances(pmed1(), pcenter::initial_bounds(pmed1()));
    return inst;
}

void bench_build_ladder(benchmark::State& state) {
    const auto& inst = pmed1();
    for (auto _ : state) benchmark::DoNotOptimize(pcenter::build_ladder(inst));
}
BENCHMARK(bench_build_ladder);

void bench_critical_indices(benchmark::State& state) {
    const auto& inst = pmed1();
    const auto ladder = pcenter::build_ladder(inst);
    for (auto _ : state)
        benchmark::DoNotOptimize(pcenter::critical_indices(inst, ladder));
}
BENCHMARK(bench_critical_indices);

void bench_build_formulation(benchmark::State& state) {
    const auto id = static_cast<pcenter::FormulationId>(state.range(0));
    const auto& inst = pmed1_clamped();
    for (auto _ : state)
        benchmark::DoNotOptimize(pcenter::build_formulation(id, inst));
    state.SetLabel(std::string(pcenter::formulation_name(id)));
}
BENCHMARK(bench_build_formulation)
    ->DenseRange(static_cast<int>(pcenter::FormulationId::p1),
                 static_cast<int>(pcenter::FormulationId::cp2));

void bench_reduce(benchmark::State& state) {
    const auto& inst = pmed1_clamped();
    for (auto _ : state) benchmark::DoNotOptimize(pcenter::reduce(inst));
}
BENCHMARK(bench_reduce);

void bench_write_lp(benchmark::State& state) {
    const auto model =
        pcenter::build_formulation(pcenter::FormulationId::cp1, pmed1_clamped());
    for (auto _ : state) benchmark::DoNotOptimize(pcenter::write_lp_file(model));
}
BENCHMARK(bench_write_lp);

} // namespace

BENCHMARK_MAIN();
