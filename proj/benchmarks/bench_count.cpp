#include <benchmark/benchmark.h>

#include "rado/count.hpp"
#include "rado/smallgroup.hpp"

using namespace rado;

namespace {

IntMatrix bench_matrix() {
    return IntMatrix({{Int(1), Int(2), Int(-1), Int(-2), Int(1)},
                      {Int(0), Int(1), Int(1), Int(-1), Int(-3)}});
}

std::vector<ElementSet> bench_sets(const GroupSpec& g) {
    SmallGroup sg(g);
    std::vector<ElementSet> sets;
    Rng rng(4242);
    for (int j = 0; j < 5; ++j) {
        ElementSet s;
        for (std::uint64_t r = 0; r < sg.size(); ++r)
            if (rng.below(100) < 60) s.push_back(r);
        sets.push_back(std::move(s));
    }
    return sets;
}

GroupSpec group_for(std::int64_t size) {
    // Z_4 x Z_4 x ... scaled by a final cyclic factor
    switch (size) {
        case 8: return GroupSpec({2, 4});
        case 16: return GroupSpec({4, 4});
        case 32: return GroupSpec({2, 4, 4});
        case 64: return GroupSpec({4, 4, 4});
        default: return GroupSpec({size});
    }
}

void BM_count_fourier(benchmark::State& state) {
    GroupSpec g = group_for(state.range(0));
    auto a = bench_matrix();
    auto sets = bench_sets(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_solutions_fourier(a, g, sets));
    }
}

void BM_count_meet_in_middle(benchmark::State& state) {
    GroupSpec g = group_for(state.range(0));
    auto a = bench_matrix();
    auto sets = bench_sets(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_solutions_bruteforce(a, g, sets, kDefaultOracleBound,
                                                            BruteStrategy::MeetInMiddle));
    }
}

void BM_count_pivot_solve(benchmark::State& state) {
    GroupSpec g = group_for(state.range(0));
    auto a = bench_matrix();
    auto sets = bench_sets(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_solutions_bruteforce(a, g, sets, kDefaultOracleBound,
                                                            BruteStrategy::PivotSolve));
    }
}

} // namespace

BENCHMARK(BM_count_fourier)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_count_meet_in_middle)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_count_pivot_solve)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
