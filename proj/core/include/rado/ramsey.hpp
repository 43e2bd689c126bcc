#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rado/abgroup.hpp"
#include "rado/columns.hpp"
#include "rado/count.hpp"
#include "rado/smallgroup.hpp"

namespace rado {

/// Echelon generating tuple x_1..x_t in the homocyclic ambient Z_n^M:
/// each x_i has a 1 in its pivot coordinate, zeros before it, and pivots are
/// nondecreasing (strictly increasing in strict mode).
struct SkeletonBasis {
    GroupSpec ambient;
    std::vector<std::vector<std::int64_t>> vectors;
    std::vector<std::size_t> pivots;  // 0-based
};

/// Pivot positions when the tuple has the echelon shape, else absent.
std::optional<std::vector<std::size_t>> is_echelon(
    const std::vector<std::vector<std::int64_t>>& vectors, const GroupSpec& ambient, bool strict);

/// Validated basis; non-strict tuples additionally get their span order
/// checked against n^t (which needs n^t within the oracle bound).
SkeletonBasis make_skeleton_basis(const GroupSpec& ambient,
                                  std::vector<std::vector<std::int64_t>> vectors,
                                  bool strict = true,
                                  std::uint64_t oracle_bound = SmallGroup::kDefaultMaxSize);

struct FSet {
    SkeletonBasis basis;
    std::vector<std::uint64_t> elements;  // sorted ranks; |F| = sum_i n^{t-i}
};

FSet f_set(const SkeletonBasis& basis);

/// Inductive solution of A x = 0 built inside F(x_1,...,x_t) from a ModN
/// certificate; entries indexed by A's original column order.
std::vector<GroupElement> skeleton_solution(const IntMatrix& a, const ColumnsCertificate& cert,
                                            const SkeletonBasis& basis);

/// Lex-least generator of a cyclic subgroup given by its element ranks.
std::uint64_t canonical_generator(const GroupSpec& ambient,
                                  const std::vector<std::uint64_t>& subgroup_elements);
/// Lex-least generator of <z>.
std::uint64_t canonical_generator_of(const GroupSpec& ambient, std::uint64_t z);

/// Induced coloring on the n-cyclic subgroups: each subgroup takes the color
/// of its lex-least generator.
struct SubgroupColoring {
    GroupSpec ambient;
    int num_colors = 1;
    std::map<std::uint64_t, int> by_min_generator;

    int color_of_cyclic(std::uint64_t z) const;  // color of <z>, z of full order
};

SubgroupColoring lift_coloring(const Coloring& chi);

/// Coset base + <generators> inside the ambient group; dim i marks an
/// i-translate (the subgroup is isomorphic to Z_n^i).
struct Translate {
    GroupSpec ambient;
    std::uint64_t base = 0;
    std::vector<std::uint64_t> generators;
    std::size_t dim = 0;
};

/// Canonicalizes the base to the lex-least member and derives/validates dim.
Translate make_translate(const GroupSpec& ambient, std::uint64_t base,
                         std::vector<std::uint64_t> generators,
                         std::uint64_t oracle_bound = SmallGroup::kDefaultMaxSize);
Translate full_group_translate(const GroupSpec& ambient);

/// Sorted element ranks of the coset.
std::vector<std::uint64_t> translate_elements(const Translate& t,
                                              std::uint64_t oracle_bound = SmallGroup::kDefaultMaxSize);

/// Every coset of every subgroup isomorphic to Z_n inside b, each exactly
/// once, ordered by (canonical generator, base).
std::vector<Translate> enumerate_one_translates(const Translate& b,
                                                std::uint64_t oracle_bound = 512);

enum class TranslateClass { Transverse, Vertical, Degenerate };

/// Classification of a 1-translate inside b under the projection onto the
/// first u coordinates, by the image of its subgroup part.
TranslateClass classify_translate(const Translate& t, const Translate& b, std::size_t u);

struct SpecialCheck {
    bool special = true;
    std::optional<std::pair<Translate, Translate>> violation;
};

/// True iff transverse 1-translates of b with equal projections always share
/// a color; otherwise reports the first violating pair.
SpecialCheck is_special(const Translate& b, std::size_t u,
                        const std::function<int(const Translate&)>& coloring,
                        std::uint64_t oracle_bound = 512);

} // namespace rado
