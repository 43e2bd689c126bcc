#include <benchmark/benchmark.h>

#include "rado/intmat.hpp"
#include "rado/numeric.hpp"

using namespace rado;

namespace {

IntMatrix random_matrix(std::size_t k, std::size_t m, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<Int>> rows(k, std::vector<Int>(m));
    for (auto& r : rows)
        for (auto& x : r) x = Int(-9 + static_cast<long>(rng.below(19)));
    return IntMatrix(rows);
}

void BM_smith_normal_form(benchmark::State& state) {
    const std::size_t k = static_cast<std::size_t>(state.range(0));
    auto a = random_matrix(k, k + 2, 1234);
    for (auto _ : state) {
        benchmark::DoNotOptimize(smith_normal_form(a));
    }
}

void BM_k_determinantal(benchmark::State& state) {
    const std::size_t k = static_cast<std::size_t>(state.range(0));
    auto a = random_matrix(k, k + 3, 99);
    for (auto _ : state) {
        benchmark::DoNotOptimize(k_determinantal(a));
    }
}

void BM_membership_modn(benchmark::State& state) {
    Rng rng(5);
    const std::size_t k = 4, g = 5;
    std::vector<std::vector<Int>> gens(g, std::vector<Int>(k));
    for (auto& gv : gens)
        for (auto& x : gv) x = Int(static_cast<long>(rng.below(24)));
    std::vector<Int> v(k);
    for (auto& x : v) x = Int(static_cast<long>(rng.below(24)));
    Ring ring = Ring::mod(Int(24));
    for (auto _ : state) {
        benchmark::DoNotOptimize(module_membership(v, gens, ring));
    }
}

} // namespace

BENCHMARK(BM_smith_normal_form)->Arg(2)->Arg(3)->Arg(4)->Arg(6);
BENCHMARK(BM_k_determinantal)->Arg(2)->Arg(3)->Arg(4)->Arg(6);
BENCHMARK(BM_membership_modn);

BENCHMARK_MAIN();
