#include "rado/ramsey.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rado/errors.hpp"
#include "rado/smallgroup.hpp"

namespace rado {

namespace {

void require_skeleton_ambient(const GroupSpec& g) {
    if (g.is_trivial() || !g.is_homocyclic() || g.exponent() < 2)
        throw validation_error("skeleton machinery needs an ambient Z_n^M with n >= 2");
}

std::vector<std::int64_t> normalize_coords(const GroupSpec& g, std::vector<std::int64_t> v) {
    return make_element(g, std::move(v)).coords;
}

std::vector<std::int64_t> add_scaled(const GroupSpec& g, const std::vector<std::int64_t>& a,
                                     std::int64_t c, const std::vector<std::int64_t>& b) {
    const std::int64_t n = g.exponent();
    std::vector<std::int64_t> r(a.size());
    std::int64_t cr = ((c % n) + n) % n;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + cr * b[i]) % n;
    return r;
}

} // namespace

std::optional<std::vector<std::size_t>> is_echelon(
    const std::vector<std::vector<std::int64_t>>& vectors, const GroupSpec& ambient, bool strict) {
    require_skeleton_ambient(ambient);
    if (vectors.empty()) return std::nullopt;
    std::vector<std::size_t> pivots;
    for (const auto& raw : vectors) {
        auto v = normalize_coords(ambient, raw);
        std::size_t lead = v.size();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) {
                lead = i;
                break;
            }
        if (lead == v.size() || v[lead] != 1) return std::nullopt;
        if (!pivots.empty()) {
            if (strict ? lead <= pivots.back() : lead < pivots.back()) return std::nullopt;
        }
        pivots.push_back(lead);
    }
    return pivots;
}

SkeletonBasis make_skeleton_basis(const GroupSpec& ambient,
                                  std::vector<std::vector<std::int64_t>> vectors, bool strict,
                                  std::uint64_t oracle_bound) {
    auto pivots = is_echelon(vectors, ambient, strict);
    if (!pivots)
        throw validation_error(strict ? "not a strict echelon generating tuple"
                                      : "not an echelon generating tuple");
    for (auto& v : vectors) v = normalize_coords(ambient, v);
    SkeletonBasis basis{ambient, std::move(vectors), std::move(*pivots)};
    if (!strict) {
        // non-strict shape does not force independence; check |<x_1..x_t>| = n^t
        SmallGroup sg(ambient, oracle_bound);
        std::vector<std::uint64_t> gens;
        for (const auto& v : basis.vectors) gens.push_back(sg.rank(v));
        Int expect = int_pow(Int(ambient.exponent()), static_cast<unsigned long>(basis.vectors.size()));
        if (Int(static_cast<unsigned long>(sg.span(gens).size())) != expect)
            throw validation_error("echelon tuple does not generate Z_n^t");
    }
    return basis;
}

FSet f_set(const SkeletonBasis& basis) {
    require_skeleton_ambient(basis.ambient);
    const std::int64_t n = basis.ambient.exponent();
    const std::size_t t = basis.vectors.size();
    SmallGroup sg(basis.ambient);
    std::set<std::uint64_t> elems;
    for (std::size_t i = 0; i < t; ++i) {
        std::vector<std::int64_t> tail(t - i - 1, 0);  // coefficients a_{i+1}..a_t
        while (true) {
            std::vector<std::int64_t> el = basis.vectors[i];
            for (std::size_t j = 0; j < tail.size(); ++j)
                if (tail[j]) el = add_scaled(basis.ambient, el, tail[j], basis.vectors[i + 1 + j]);
            elems.insert(sg.rank(el));
            std::size_t d = tail.size();
            bool done = true;
            while (d-- > 0) {
                if (++tail[d] < n) {
                    done = false;
                    break;
                }
                tail[d] = 0;
            }
            if (done) break;
        }
    }
    Int expect(0);
    for (std::size_t i = 1; i <= t; ++i) expect += int_pow(Int(n), static_cast<unsigned long>(t - i));
    if (Int(static_cast<unsigned long>(elems.size())) != expect)
        throw validation_error("F-set cardinality mismatch; tuple is not independent");
    return FSet{basis, std::vector<std::uint64_t>(elems.begin(), elems.end())};
}

std::vector<GroupElement> skeleton_solution(const IntMatrix& a, const ColumnsCertificate& cert,
                                            const SkeletonBasis& basis) {
    require_skeleton_ambient(basis.ambient);
    const std::int64_t n = basis.ambient.exponent();
    if (cert.ring.tag != Ring::Tag::ModN || cert.ring.modulus != n)
        throw validation_error("certificate ring must be ModN of the ambient exponent");
    if (!verify_certificate(a, cert)) throw validation_error("certificate does not verify");
    const std::size_t t = cert.num_blocks();
    if (basis.vectors.size() < t)
        throw validation_error("basis needs at least as many vectors as certificate blocks");

    const std::size_t m = a.cols();
    std::vector<std::vector<std::int64_t>> y(m);  // per certificate position
    for (std::size_t pos = 0; pos < cert.breakpoints[0]; ++pos) y[pos] = basis.vectors[0];
    for (std::size_t b = 1; b < t; ++b) {
        const std::size_t prev = cert.breakpoints[b - 1];
        for (std::size_t pos = 0; pos < prev; ++pos) {
            std::int64_t lam = cert.lambda[b - 1][pos].get_num().get_si();
            y[pos] = add_scaled(basis.ambient, y[pos], -lam, basis.vectors[b]);
        }
        for (std::size_t pos = prev; pos < cert.breakpoints[b]; ++pos) y[pos] = basis.vectors[b];
    }

    std::vector<GroupElement> out(m, GroupElement{basis.ambient, {}});
    for (std::size_t pos = 0; pos < m; ++pos)
        out[cert.order[pos]] = GroupElement{basis.ambient, y[pos]};

    // the construction guarantees A y = 0 and full element orders; check anyway
    const Int nn(n);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<Int> acc(basis.ambient.num_factors(), 0);
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = 0; l < acc.size(); ++l) acc[l] += a.at(i, j) * out[j].coords[l];
        for (const auto& v : acc)
            if (int_mod(v, nn) != 0) throw std::logic_error("skeleton solution fails A y = 0");
    }
    for (const auto& e : out)
        if (element_order(e) != n) throw std::logic_error("skeleton solution entry has partial order");
    return out;
}

std::uint64_t canonical_generator(const GroupSpec& ambient,
                                  const std::vector<std::uint64_t>& subgroup_elements) {
    SmallGroup sg(ambient);
    if (subgroup_elements.empty()) throw validation_error("empty subgroup");
    for (auto r : subgroup_elements)
        if (r >= sg.size()) throw validation_error("element rank out of range");
    for (auto x : subgroup_elements)
        for (auto yv : subgroup_elements)
            if (!std::binary_search(subgroup_elements.begin(), subgroup_elements.end(),
                                    sg.add(x, yv)))
                throw validation_error("input is not closed under addition");
    const std::uint64_t h = subgroup_elements.size();
    std::uint64_t best = sg.size();
    for (auto r : subgroup_elements)
        if (static_cast<std::uint64_t>(sg.order(r)) == h && r < best) best = r;
    if (best == sg.size()) throw validation_error("subgroup is not cyclic");
    return best;
}

std::uint64_t canonical_generator_of(const GroupSpec& ambient, std::uint64_t z) {
    SmallGroup sg(ambient);
    const std::int64_t ord = sg.order(z);
    std::uint64_t best = z;
    for (std::int64_t u = 2; u < ord; ++u) {
        if (std::gcd(u, ord) != 1) continue;
        best = std::min(best, sg.scalar_mul(u, z));
    }
    return best;
}

int SubgroupColoring::color_of_cyclic(std::uint64_t z) const {
    auto it = by_min_generator.find(canonical_generator_of(ambient, z));
    if (it == by_min_generator.end())
        throw validation_error("subgroup is outside the colored family");
    return it->second;
}

SubgroupColoring lift_coloring(const Coloring& chi) {
    require_skeleton_ambient(chi.group);
    validate_coloring(chi);
    SmallGroup sg(chi.group);
    SubgroupColoring out{chi.group, chi.num_colors, {}};
    // covers every nontrivial cyclic subgroup; the n-cyclic ones are the
    // family the skeleton machinery consumes
    for (std::uint64_t z = 1; z < sg.size(); ++z) {
        std::uint64_t cg = canonical_generator_of(chi.group, z);
        if (cg == z) out.by_min_generator.emplace(cg, chi.colors[cg]);
    }
    return out;
}

Translate make_translate(const GroupSpec& ambient, std::uint64_t base,
                         std::vector<std::uint64_t> generators, std::uint64_t oracle_bound) {
    require_skeleton_ambient(ambient);
    SmallGroup sg(ambient, oracle_bound);
    if (base >= sg.size()) throw validation_error("translate base out of range");
    for (auto g : generators)
        if (g >= sg.size()) throw validation_error("translate generator out of range");
    auto sub = sg.span(generators);
    const std::int64_t n = sg.exponent();
    // the subgroup part must be homocyclic of exponent n: |H| = n^i with the
    // d-torsion of size d^i for every divisor d of n
    std::uint64_t h = sub.size();
    std::size_t dim = 0;
    while (h > 1) {
        if (h % static_cast<std::uint64_t>(n) != 0)
            throw validation_error("subgroup part is not a power of Z_n");
        h /= static_cast<std::uint64_t>(n);
        ++dim;
    }
    for (std::int64_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        std::uint64_t torsion = 0;
        for (auto e : sub)
            if (sg.scalar_mul(d, e) == 0) ++torsion;
        Int expect = int_pow(Int(d), static_cast<unsigned long>(dim));
        if (Int(static_cast<unsigned long>(torsion)) != expect)
            throw validation_error("subgroup part is not isomorphic to Z_n^i");
    }
    std::uint64_t least = base;
    for (auto e : sub) least = std::min(least, sg.add(base, e));
    return Translate{ambient, least, std::move(generators), dim};
}

Translate full_group_translate(const GroupSpec& ambient) {
    require_skeleton_ambient(ambient);
    std::vector<std::uint64_t> gens;
    SmallGroup sg(ambient);
    const std::size_t mdim = ambient.num_factors();
    for (std::size_t i = 0; i < mdim; ++i) {
        std::vector<std::int64_t> e(mdim, 0);
        e[i] = 1;
        gens.push_back(sg.rank(e));
    }
    return Translate{ambient, 0, std::move(gens), mdim};
}

std::vector<std::uint64_t> translate_elements(const Translate& t, std::uint64_t oracle_bound) {
    SmallGroup sg(t.ambient, oracle_bound);
    auto sub = sg.span(t.generators);
    std::vector<std::uint64_t> out;
    out.reserve(sub.size());
    for (auto e : sub) out.push_back(sg.add(t.base, e));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Translate> enumerate_one_translates(const Translate& b, std::uint64_t oracle_bound) {
    SmallGroup sg(b.ambient, oracle_bound);
    const std::int64_t n = sg.exponent();
    auto sub = sg.span(b.generators);  // subgroup part of b
    std::vector<std::uint64_t> coset;
    coset.reserve(sub.size());
    for (auto e : sub) coset.push_back(sg.add(b.base, e));
    std::sort(coset.begin(), coset.end());

    // distinct n-cyclic subgroups of the subgroup part, by canonical generator
    std::vector<std::uint64_t> cyclic_gens;
    for (auto z : sub) {
        if (z == 0 || sg.order(z) != n) continue;
        if (canonical_generator_of(b.ambient, z) == z) cyclic_gens.push_back(z);
    }
    std::sort(cyclic_gens.begin(), cyclic_gens.end());

    std::vector<Translate> out;
    std::vector<char> visited(sg.size());
    for (auto cg : cyclic_gens) {
        std::fill(visited.begin(), visited.end(), 0);
        std::vector<std::uint64_t> t0;
        for (std::int64_t j = 0; j < n; ++j) t0.push_back(sg.scalar_mul(j, cg));
        for (auto e : coset) {
            if (visited[e]) continue;
            for (auto t : t0) visited[sg.add(e, t)] = 1;
            out.push_back(Translate{b.ambient, e, {cg}, 1});
        }
    }
    return out;
}

TranslateClass classify_translate(const Translate& t, const Translate& b, std::size_t u) {
    if (!(t.ambient == b.ambient)) throw validation_error("translates live in different groups");
    SmallGroup sg(t.ambient);
    if (t.dim != 1) throw validation_error("classification applies to 1-translates");
    if (u == 0 || u >= t.ambient.num_factors())
        throw validation_error("projection width must be in [1, M)");
    auto te = translate_elements(t);
    auto be = translate_elements(b);
    if (!std::includes(be.begin(), be.end(), te.begin(), te.end()))
        throw validation_error("translate is not contained in the base translate");

    const std::int64_t n = sg.exponent();
    std::set<std::uint64_t> image;
    auto sub = sg.span(t.generators);
    for (auto e : sub) {
        auto c = sg.coords(e);
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < u; ++i)
            r = r * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(c[i]);
        image.insert(r);
    }
    if (image.size() == static_cast<std::uint64_t>(n)) return TranslateClass::Transverse;
    if (image.size() == 1) return TranslateClass::Vertical;
    return TranslateClass::Degenerate;
}

SpecialCheck is_special(const Translate& b, std::size_t u,
                        const std::function<int(const Translate&)>& coloring,
                        std::uint64_t oracle_bound) {
    SmallGroup sg(b.ambient, oracle_bound);
    const std::int64_t n = sg.exponent();
    auto ones = enumerate_one_translates(b, oracle_bound);

    // key a transverse translate by the canonical form of its projected coset
    auto projection_key = [&](const Translate& t) {
        auto te = translate_elements(t);
        std::set<std::uint64_t> proj;
        for (auto e : te) {
            auto c = sg.coords(e);
            std::uint64_t r = 0;
            for (std::size_t i = 0; i < u; ++i)
                r = r * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(c[i]);
            proj.insert(r);
        }
        return std::vector<std::uint64_t>(proj.begin(), proj.end());
    };

    std::map<std::vector<std::uint64_t>, std::pair<Translate, int>> first_seen;
    for (const auto& t : ones) {
        if (classify_translate(t, b, u) != TranslateClass::Transverse) continue;
        int c = coloring(t);
        auto key = projection_key(t);
        auto it = first_seen.find(key);
        if (it == first_seen.end()) {
            first_seen.emplace(std::move(key), std::make_pair(t, c));
        } else if (it->second.second != c) {
            return SpecialCheck{false, std::make_pair(it->second.first, t)};
        }
    }
    return SpecialCheck{};
}

} // namespace rado
