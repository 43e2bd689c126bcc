#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rado/numeric.hpp"

namespace rado {

/// Finite abelian group in invariant-factor form n_1 | n_2 | ... | n_s.
/// Arbitrary product specs are normalized on construction (CRT merge, then
/// divisibility sort); the empty chain is the trivial group.
class GroupSpec {
public:
    GroupSpec() = default;
    explicit GroupSpec(std::vector<std::int64_t> factors);  // normalizes
    static GroupSpec parse(const std::string& text);        // "Z4xZ2"
    static GroupSpec homocyclic(std::int64_t n, std::size_t m);  // Z_n^m

    const std::vector<std::int64_t>& factors() const { return factors_; }
    std::size_t num_factors() const { return factors_.size(); }
    std::int64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }
    Int order() const;
    bool is_trivial() const { return factors_.empty(); }
    bool is_homocyclic() const;

    bool operator==(const GroupSpec& o) const { return factors_ == o.factors_; }
    std::string to_string() const;  // "Z2xZ4", "1" for trivial

private:
    std::vector<std::int64_t> factors_;
};

struct GroupElement {
    GroupSpec group;
    std::vector<std::int64_t> coords;  // 0 <= coords[i] < n_i
};

GroupElement make_element(const GroupSpec& g, std::vector<std::int64_t> coords);

/// Mixed-radix rank: sum coords[i] * prod_{j>i} n_j (first coordinate most
/// significant, so rank order equals lex order on coordinates).
std::uint64_t element_rank(const GroupElement& x);
GroupElement element_unrank(const GroupSpec& g, std::uint64_t rank);

/// Least d >= 1 with d*x = 0.
std::int64_t element_order(const GroupElement& x);

/// Abelian p-group type: ascending exponents (k_1 <= ... <= k_eta),
/// i.e. the group prod_i Z_{p^{k_i}}.
struct PGroupType {
    std::int64_t p = 2;
    std::vector<int> exponents;

    PGroupType() = default;
    PGroupType(std::int64_t prime, std::vector<int> exps);
    GroupSpec to_group() const;
    std::size_t eta() const { return exponents.size(); }
};

/// p-components of the group, keyed by prime.
std::map<std::int64_t, PGroupType> primary_decomposition(const GroupSpec& g);

/// Number of M-dimensional subspaces of an N-dimensional space over a
/// q-element field, as the exact integer product formula.
Int gaussian_binomial(unsigned n, unsigned m, const Int& q);

/// Number of subgroups of the given type inside a p-group of the host type;
/// 0 when the target does not embed.
Int yeh_count(const PGroupType& host, const PGroupType& target);

/// Number of subgroups of G isomorphic to Z_d^M, as the product of per-prime
/// counts over the primes dividing d.
Int count_subgroups_iso(const GroupSpec& g, std::int64_t d, unsigned m);

/// Brute-force oracle: all subgroups isomorphic to Z_d^M, each once, as
/// sorted element-rank lists. Requires |G| <= oracle_bound.
std::vector<std::vector<std::uint64_t>> enumerate_subgroups(const GroupSpec& g, std::int64_t d,
                                                            unsigned m,
                                                            std::uint64_t oracle_bound = 512);

/// Sizes of all cascade levels at once: counts[i] is the number of subgroups
/// isomorphic to Z_d^(i+1). One pass of the same oracle behind
/// enumerate_subgroups; levels past the last nonempty one report 0.
std::vector<std::uint64_t> enumerate_subgroup_counts(const GroupSpec& g, std::int64_t d,
                                                     unsigned max_m,
                                                     std::uint64_t oracle_bound = 512);

/// Type of G / Z_{n_s}: drops the largest invariant factor.
GroupSpec quotient_type(const GroupSpec& g);

} // namespace rado
