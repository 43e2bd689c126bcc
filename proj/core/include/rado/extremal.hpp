#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rado/columns.hpp"
#include "rado/count.hpp"

namespace rado {

struct SearchBudget {
    enum class Mode { Exhaustive, Randomized };
    Mode mode = Mode::Exhaustive;
    std::uint64_t max_candidates = 1'000'000;
    std::uint64_t seed = 0;
};

struct MinColoringReport {
    Int min_count;
    Coloring witness;
    Int normalizer;     // |G|^{m-k}
    Rat empirical_c;    // min / normalizer
    bool exact = false; // true when the whole space was searched
    std::uint64_t candidates_examined = 0;
};

/// Minimum of the total monochromatic count over r-colorings of the nonzero
/// elements. Exhaustive mode requires r^(|G|-1) <= max_candidates and is
/// exact; randomized mode reports the best coloring found (an upper bound),
/// reproducible from the seed. The witness count is re-verified through the
/// brute-force backend before returning.
MinColoringReport min_monochromatic(const IntMatrix& a, const GroupSpec& g, int r,
                                    const SearchBudget& budget,
                                    CountBackend backend = CountBackend::BruteForce,
                                    std::uint64_t oracle_bound = kDefaultOracleBound,
                                    unsigned threads = 1, bool symmetry_reduction = true);

struct DensityWitness {
    std::vector<Int> coeffs;
    Int alpha;                   // sum of the coefficients, nonzero
    Int t;                       // max |a_i|
    std::int64_t n = 0;
    std::int64_t n0 = 0;         // floor(n / (m t))
    std::vector<std::int64_t> x; // residues 1 mod (|alpha|+1) inside [0, n0]
    Rat density_bound;           // 1 / (m t (|alpha|+1))
    bool verified = false;       // zero-solution check ran within the bound
    Int solutions_found;         // number of tuples in X^m solving the equation
};

/// The initial-segment congruence construction showing a single equation with
/// nonzero coefficient sum is not density regular.
DensityWitness density_counterexample(const std::vector<Int>& coeffs, std::int64_t n,
                                      std::uint64_t oracle_bound = kDefaultOracleBound);

struct MinSubsetReport {
    Int min_count;
    ElementSet witness;
    std::size_t subset_size = 0;
    bool exact = false;
    std::uint64_t candidates_examined = 0;
};

/// Minimum solution count with every coordinate constrained to the same
/// size-⌈eps|G|⌉ subset of the nonzero elements (clamped to |G|-1).
MinSubsetReport min_solutions_dense_subsets(const IntMatrix& a, const GroupSpec& g,
                                            const Rat& epsilon, const SearchBudget& budget,
                                            CountBackend backend = CountBackend::BruteForce,
                                            std::uint64_t oracle_bound = kDefaultOracleBound);

struct Fixture6Report {
    int n_power = 1;
    GroupSpec group;
    Int total_solutions;        // (2^N)^3
    Int monochromatic_total;    // (2^N - 1)^2 under the by-order coloring
    std::map<int, Int> per_color;
    bool has_mod2_certificate = false;
    bool has_mod4_certificate = false;
};

IntMatrix fixture6_matrix();
/// Runs the counterexample fixture over Z_4^N, N in {1, 2}, asserting all
/// four reported facts.
Fixture6Report run_fixture6(int n_power);

} // namespace rado
