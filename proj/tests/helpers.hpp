#pragma once

// Instance generators and tiny oracles shared by the unit and acceptance
// suites. Everything is driven by the deterministic Rng so runs reproduce.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "rado/abgroup.hpp"
#include "rado/count.hpp"
#include "rado/intmat.hpp"
#include "rado/numeric.hpp"
#include "rado/smallgroup.hpp"

namespace testutil {

using namespace rado;

inline IntMatrix random_matrix(Rng& rng, std::size_t k, std::size_t m, long lo, long hi) {
    std::vector<std::vector<Int>> rows(k, std::vector<Int>(m));
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    for (auto& r : rows)
        for (auto& x : r) x = Int(lo + static_cast<long>(rng.below(span)));
    return IntMatrix(rows);
}

inline IntMatrix schur_matrix() { return IntMatrix({{Int(1), Int(1), Int(-1)}}); }

/// All invariant-factor chains with the given exponent and order <= max_order.
inline std::vector<GroupSpec> groups_with_exponent(std::int64_t n, std::uint64_t max_order) {
    std::vector<GroupSpec> out;
    std::vector<std::int64_t> divisors;
    for (std::int64_t d = 2; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    std::vector<std::int64_t> chain{n};
    std::uint64_t order = static_cast<std::uint64_t>(n);
    std::function<void()> extend = [&]() {
        out.emplace_back(GroupSpec(std::vector<std::int64_t>(chain.rbegin(), chain.rend())));
        for (auto d : divisors) {
            if (chain.back() % d != 0) continue;  // need d | previous factor
            if (order > max_order / static_cast<std::uint64_t>(d)) continue;
            chain.push_back(d);
            order *= static_cast<std::uint64_t>(d);
            extend();
            order /= static_cast<std::uint64_t>(d);
            chain.pop_back();
        }
    };
    if (static_cast<std::uint64_t>(n) <= max_order) extend();
    return out;
}

/// All abelian p-group types with total exponent sum <= max_total (and >= 1).
inline std::vector<PGroupType> p_group_types(std::int64_t p, int max_total) {
    std::vector<PGroupType> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int min_part) {
        if (!parts.empty()) out.emplace_back(p, parts);
        for (int next = min_part; next <= remaining; ++next) {
            parts.push_back(next);
            rec(remaining - next, next);
            parts.pop_back();
        }
    };
    rec(max_total, 1);
    return out;
}

inline GroupSpec random_group(Rng& rng, std::uint64_t max_order, std::int64_t min_exp,
                              std::int64_t max_exp) {
    while (true) {
        std::int64_t e = min_exp + static_cast<std::int64_t>(rng.below(
                                       static_cast<std::uint64_t>(max_exp - min_exp + 1)));
        auto candidates = groups_with_exponent(e, max_order);
        if (!candidates.empty())
            return candidates[rng.below(candidates.size())];
    }
}

inline ElementSet random_subset(Rng& rng, std::uint64_t group_size, unsigned density_percent) {
    ElementSet s;
    for (std::uint64_t r = 0; r < group_size; ++r)
        if (rng.below(100) < density_percent) s.push_back(r);
    return s;
}

/// Solutions of A x = 0 found by scanning G^m directly, with no shared code
/// path with the library backends. Only for very small instances.
inline Int naive_count(const IntMatrix& a, const GroupSpec& g,
                       const std::vector<ElementSet>& sets) {
    SmallGroup sg(g);
    const std::size_t m = a.cols(), k = a.rows();
    std::vector<std::size_t> odo(m, 0);
    Int count(0);
    if (sets.size() != m) throw std::logic_error("bad naive_count call");
    for (const auto& s : sets)
        if (s.empty()) return 0;
    while (true) {
        bool good = true;
        for (std::size_t i = 0; i < k && good; ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < m; ++j) {
                std::int64_t c = int_mod(a.at(i, j), Int(sg.exponent())).get_si();
                acc = sg.add(acc, sg.scalar_mul(c, sets[j][odo[j]]));
            }
            good = acc == 0;
        }
        if (good) count += 1;
        std::size_t d = m;
        bool done = true;
        while (d-- > 0) {
            if (++odo[d] < sets[d].size()) {
                done = false;
                break;
            }
            odo[d] = 0;
        }
        if (done) return count;
    }
}

} // namespace testutil
