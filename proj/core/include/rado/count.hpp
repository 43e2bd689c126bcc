#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rado/abgroup.hpp"
#include "rado/intmat.hpp"

namespace rado {

/// Total coloring of the nonzero elements; colors[r] for element rank r >= 1,
/// colors[0] is unused and kept 0.
struct Coloring {
    GroupSpec group;
    int num_colors = 1;
    std::vector<int> colors;
};

Coloring coloring_by_order(const GroupSpec& g);
Coloring coloring_random(const GroupSpec& g, int r, std::uint64_t seed);
/// `values` indexed by nonzero rank, length |G| - 1, entries in [1, max].
Coloring coloring_explicit(const GroupSpec& g, std::vector<int> values);
void validate_coloring(const Coloring& chi);

struct SolutionCount {
    Int total;
    std::map<int, Int> per_color;
    Int trivial;
};

using ElementSet = std::vector<std::uint64_t>;  // strictly increasing ranks

constexpr std::uint64_t kDefaultOracleBound = 100'000'000;

enum class BruteStrategy { Auto, PivotSolve, FullScan, MeetInMiddle };
enum class CountBackend { Auto, BruteForce, Fourier };

/// Exact number of tuples x in X_1 x ... x X_m with A x = 0 in G^k,
/// by enumeration. The strategy decides what gets enumerated; all are exact.
Int count_solutions_bruteforce(const IntMatrix& a, const GroupSpec& g,
                               const std::vector<ElementSet>& sets,
                               std::uint64_t oracle_bound = kDefaultOracleBound,
                               BruteStrategy strategy = BruteStrategy::Auto);

/// Same count through the character-sum identity, evaluated exactly modulo
/// primes q = 1 (mod exponent) above 2^61 and reconstructed by remainders.
Int count_solutions_fourier(const IntMatrix& a, const GroupSpec& g,
                            const std::vector<ElementSet>& sets,
                            std::uint64_t oracle_bound = kDefaultOracleBound);

Int count_solutions(const IntMatrix& a, const GroupSpec& g, const std::vector<ElementSet>& sets,
                    CountBackend backend = CountBackend::Auto,
                    std::uint64_t oracle_bound = kDefaultOracleBound);

/// Per-color solution counts with every coordinate constrained to the color
/// class; `trivial` counts the nonzero constant solutions.
SolutionCount count_monochromatic(const IntMatrix& a, const GroupSpec& g, const Coloring& chi,
                                  CountBackend backend = CountBackend::Auto,
                                  std::uint64_t oracle_bound = kDefaultOracleBound);

/// All of G as an element set.
ElementSet full_set(const GroupSpec& g);
/// G minus the identity.
ElementSet nonzero_set(const GroupSpec& g);

} // namespace rado
