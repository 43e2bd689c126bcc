#include <benchmark/benchmark.h>

#include "rado/abgroup.hpp"

using namespace rado;

namespace {

void BM_enumerate_elementary(benchmark::State& state) {
    const std::size_t copies = static_cast<std::size_t>(state.range(0));
    GroupSpec g = GroupSpec::homocyclic(2, copies);
    const unsigned m = static_cast<unsigned>(copies / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_subgroups(g, 2, m));
    }
    state.SetLabel("Z2^" + std::to_string(copies) + " level " + std::to_string(m));
}

void BM_yeh_closed_form(benchmark::State& state) {
    PGroupType host(2, {1, 1, 2, 2, 3, 3});
    PGroupType target(2, {2, 2, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(yeh_count(host, target));
    }
}

void BM_cascade_full(benchmark::State& state) {
    GroupSpec g = GroupSpec::homocyclic(2, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            enumerate_subgroup_counts(g, 2, static_cast<unsigned>(state.range(0))));
    }
}

} // namespace

BENCHMARK(BM_enumerate_elementary)->Arg(4)->Arg(6)->Arg(7);
BENCHMARK(BM_yeh_closed_form);
BENCHMARK(BM_cascade_full)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
