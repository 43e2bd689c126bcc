#pragma once

#include <cstdint>
#include <vector>

#include "rado/abgroup.hpp"

namespace rado {

/// Dense arithmetic over a finite abelian group small enough to index by rank.
/// Backs the enumeration oracles and the exhaustive searches.
class SmallGroup {
public:
    explicit SmallGroup(const GroupSpec& spec, std::uint64_t max_size = kDefaultMaxSize);

    static constexpr std::uint64_t kDefaultMaxSize = 1u << 22;

    const GroupSpec& spec() const { return spec_; }
    std::uint64_t size() const { return size_; }
    std::int64_t exponent() const { return spec_.exponent(); }
    std::size_t num_coords() const { return radices_.size(); }
    const std::vector<std::int64_t>& radices() const { return radices_; }

    std::vector<std::int64_t> coords(std::uint64_t rank) const;
    std::uint64_t rank(const std::vector<std::int64_t>& coords) const;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }
    std::uint64_t scalar_mul(std::int64_t c, std::uint64_t a) const;
    std::int64_t order(std::uint64_t a) const;

    /// Optional O(1) addition; only for sizes where the table is cheap.
    void build_add_table();
    bool has_add_table() const { return !add_table_.empty(); }
    std::uint64_t table_add(std::uint64_t a, std::uint64_t b) const {
        return add_table_[a * size_ + b];
    }

    std::vector<std::uint64_t> elements_of_order(std::int64_t d) const;
    /// Closure of a generating set, as a sorted rank list.
    std::vector<std::uint64_t> span(const std::vector<std::uint64_t>& gens) const;

private:
    GroupSpec spec_;
    std::vector<std::int64_t> radices_;
    std::vector<std::uint64_t> weights_;
    std::uint64_t size_ = 1;
    std::vector<std::uint16_t> add_table_;
};

} // namespace rado
