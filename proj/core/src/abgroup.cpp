#include "rado/abgroup.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <functional>
#include <unordered_set>

#include "rado/errors.hpp"
#include "rado/modarith.hpp"
#include "rado/smallgroup.hpp"

namespace rado {

namespace {

std::vector<std::pair<std::int64_t, int>> prime_power_factorization(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (auto p : prime_factors(n)) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    return out;
}

} // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> factors) {
    std::map<std::int64_t, std::vector<int>> by_prime;
    for (auto f : factors) {
        if (f < 1) throw validation_error("group factors must be positive");
        if (f == 1) continue;
        for (auto [p, e] : prime_power_factorization(f)) by_prime[p].push_back(e);
    }
    std::size_t s = 0;
    for (auto& [p, es] : by_prime) {
        std::sort(es.begin(), es.end(), std::greater<>());
        s = std::max(s, es.size());
    }
    factors_.assign(s, 1);
    for (auto& [p, es] : by_prime)
        for (std::size_t t = 0; t < es.size(); ++t) {
            Int v = Int(factors_[t]) * int_pow(Int(p), static_cast<unsigned long>(es[t]));
            if (!v.fits_slong_p())
                throw capacity_error("invariant factor overflows machine integers");
            factors_[t] = v.get_si();
        }
    std::reverse(factors_.begin(), factors_.end());
}

GroupSpec GroupSpec::parse(const std::string& text) {
    std::vector<std::int64_t> factors;
    std::size_t i = 0;
    if (text == "1" || text.empty()) return GroupSpec{};
    while (i < text.size()) {
        if (std::toupper(static_cast<unsigned char>(text[i])) != 'Z')
            throw validation_error("bad group spec '" + text + "': expected 'Z<k>' terms");
        ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw validation_error("bad group spec '" + text + "': missing order");
        factors.push_back(std::stoll(text.substr(start, i - start)));
        if (i < text.size()) {
            if (std::tolower(static_cast<unsigned char>(text[i])) != 'x')
                throw validation_error("bad group spec '" + text + "': expected 'x' separator");
            ++i;
        }
    }
    return GroupSpec(std::move(factors));
}

GroupSpec GroupSpec::homocyclic(std::int64_t n, std::size_t m) {
    return GroupSpec(std::vector<std::int64_t>(m, n));
}

Int GroupSpec::order() const {
    Int o(1);
    for (auto f : factors_) o *= f;
    return o;
}

bool GroupSpec::is_homocyclic() const {
    for (auto f : factors_)
        if (f != factors_.front()) return false;
    return true;
}

std::string GroupSpec::to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        s += (i ? "xZ" : "Z") + std::to_string(factors_[i]);
    return s;
}

GroupElement make_element(const GroupSpec& g, std::vector<std::int64_t> coords) {
    if (coords.size() != g.num_factors())
        throw validation_error("element has wrong number of coordinates");
    for (std::size_t i = 0; i < coords.size(); ++i) {
        std::int64_t n = g.factors()[i];
        coords[i] %= n;
        if (coords[i] < 0) coords[i] += n;
    }
    return {g, std::move(coords)};
}

std::uint64_t element_rank(const GroupElement& x) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        r = r * static_cast<std::uint64_t>(x.group.factors()[i]) +
            static_cast<std::uint64_t>(x.coords[i]);
    }
    return r;
}

GroupElement element_unrank(const GroupSpec& g, std::uint64_t rank) {
    std::vector<std::int64_t> coords(g.num_factors());
    for (std::size_t i = g.num_factors(); i-- > 0;) {
        std::uint64_t n = static_cast<std::uint64_t>(g.factors()[i]);
        coords[i] = static_cast<std::int64_t>(rank % n);
        rank /= n;
    }
    if (rank != 0) throw validation_error("element rank out of range");
    return {g, std::move(coords)};
}

std::int64_t element_order(const GroupElement& x) {
    std::int64_t ord = 1;
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        std::int64_t n = x.group.factors()[i];
        ord = std::lcm(ord, n / std::gcd(x.coords[i], n));
    }
    return ord;
}

PGroupType::PGroupType(std::int64_t prime, std::vector<int> exps)
    : p(prime), exponents(std::move(exps)) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw validation_error("PGroupType requires a prime");
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 1) throw validation_error("PGroupType exponents must be positive");
        if (i && exponents[i] < exponents[i - 1])
            throw validation_error("PGroupType exponents must be ascending");
    }
}

GroupSpec PGroupType::to_group() const {
    std::vector<std::int64_t> fs;
    for (int e : exponents) {
        Int v = int_pow(Int(p), static_cast<unsigned long>(e));
        if (!v.fits_slong_p()) throw capacity_error("p-group factor overflows machine integers");
        fs.push_back(v.get_si());
    }
    return GroupSpec(std::move(fs));
}

std::map<std::int64_t, PGroupType> primary_decomposition(const GroupSpec& g) {
    std::map<std::int64_t, std::vector<int>> exps;
    for (auto f : g.factors())
        for (auto [p, e] : prime_power_factorization(f)) exps[p].push_back(e);
    std::map<std::int64_t, PGroupType> out;
    for (auto& [p, es] : exps) {
        std::sort(es.begin(), es.end());
        out.emplace(p, PGroupType(p, es));
    }
    return out;
}

Int gaussian_binomial(unsigned n, unsigned m, const Int& q) {
    if (m > n) throw validation_error("gaussian_binomial requires M <= N");
    if (q < 2) throw validation_error("gaussian_binomial requires q >= 2");
    Int num(1), den(1);
    for (unsigned i = 0; i < m; ++i) {
        num *= int_pow(q, n - i) - 1;
        den *= int_pow(q, m - i) - 1;
    }
    return int_divexact(num, den);
}

Int yeh_count(const PGroupType& host, const PGroupType& target) {
    if (host.p != target.p) throw validation_error("yeh_count: host and target primes differ");
    const Int p(host.p);
    const std::size_t eta = host.eta();
    std::vector<int> h(target.exponents.rbegin(), target.exponents.rend());  // descending
    const std::size_t m = h.size();
    if (m == 0) return 1;
    if (m > eta) return 0;
    const auto& k = host.exponents;  // ascending, 1-based in the formulas below
    if (h.front() > k.back()) return 0;

    std::vector<std::size_t> nu(m);
    for (std::size_t i = 0; i < m; ++i) {
        nu[i] = static_cast<std::size_t>(
            std::count_if(k.begin(), k.end(), [&](int kj) { return kj < h[i]; }));
        // embeddability: need at least i+1 host factors with k_j >= h_i
        if (eta - nu[i] < i + 1) return 0;
    }

    Int num(1);
    for (std::size_t i = 0; i < m; ++i)
        num *= int_pow(p, static_cast<unsigned long>(eta - nu[i] - (i + 1) + 1)) - 1;

    Int den(1);
    long sum_mu_sq = 0;
    for (std::size_t i = 0; i < m;) {
        std::size_t j = i;
        while (j < m && h[j] == h[i]) ++j;
        long mult = static_cast<long>(j - i);
        sum_mu_sq += mult * mult;
        for (long v = 1; v <= mult; ++v) den *= int_pow(p, static_cast<unsigned long>(v)) - 1;
        i = j;
    }

    long hexp = (sum_mu_sq - static_cast<long>(m) * static_cast<long>(m)) / 2;
    for (std::size_t i = 0; i < m; ++i) {
        hexp += (static_cast<long>(eta) - static_cast<long>(nu[i]) + 1 -
                 2 * (static_cast<long>(i) + 1)) *
                (h[i] - 1);
        for (std::size_t mu = 0; mu < nu[i]; ++mu) hexp += k[mu];
    }

    Rat count(num, den);
    if (hexp >= 0)
        count *= Rat(int_pow(p, static_cast<unsigned long>(hexp)));
    else
        count /= Rat(int_pow(p, static_cast<unsigned long>(-hexp)));
    count.canonicalize();
    if (count.get_den() != 1 || count < 0)
        throw std::logic_error("yeh_count: formula did not evaluate to a nonnegative integer");
    return count.get_num();
}

Int count_subgroups_iso(const GroupSpec& g, std::int64_t d, unsigned m) {
    if (d < 2) throw validation_error("count_subgroups_iso requires d >= 2");
    if (m < 1) throw validation_error("count_subgroups_iso requires M >= 1");
    if (g.exponent() % d != 0) return 0;
    auto decomp = primary_decomposition(g);
    Int result(1);
    for (auto [p, beta] : prime_power_factorization(d)) {
        auto it = decomp.find(p);
        if (it == decomp.end()) return 0;
        PGroupType target(p, std::vector<int>(m, beta));
        result *= yeh_count(it->second, target);
        if (result == 0) return 0;
    }
    return result;
}

namespace {

struct BitsetHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (auto w : v) {
            h ^= w;
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace

namespace {

// Level cascade: level i holds every subgroup isomorphic to Z_d^i, found by
// extending level i-1 subgroups with order-d elements meeting them trivially
// and deduplicating on the element bitset. visit(level, subgroups) is called
// for each nonempty level up to max_m.
void subgroup_cascade(
    const GroupSpec& g, std::int64_t d, unsigned max_m, std::uint64_t oracle_bound,
    const std::function<void(unsigned, const std::vector<std::vector<std::uint32_t>>&)>& visit) {
    if (d < 2) throw validation_error("subgroup enumeration requires d >= 2");
    if (max_m < 1) throw validation_error("subgroup enumeration requires M >= 1");
    SmallGroup sg(g, oracle_bound);
    if (g.exponent() % d != 0) return;

    if (sg.size() <= 2048) sg.build_add_table();
    const bool tab = sg.has_add_table();
    auto add = [&](std::uint64_t a, std::uint64_t b) {
        return tab ? sg.table_add(a, b) : sg.add(a, b);
    };

    const auto order_d = sg.elements_of_order(d);
    if (order_d.empty()) return;

    const std::size_t words = (sg.size() + 63) / 64;
    struct Sub {
        std::vector<std::uint64_t> bits;
        std::vector<std::uint32_t> elems;
    };
    auto test = [&](const std::vector<std::uint64_t>& b, std::uint64_t r) {
        return (b[r >> 6] >> (r & 63)) & 1;
    };
    auto set = [&](std::vector<std::uint64_t>& b, std::uint64_t r) { b[r >> 6] |= 1ULL << (r & 63); };

    std::vector<Sub> level;
    {
        Sub zero{std::vector<std::uint64_t>(words, 0), {0}};
        set(zero.bits, 0);
        level.push_back(std::move(zero));
    }

    std::vector<std::vector<std::uint32_t>> snapshot;
    for (unsigned lvl = 1; lvl <= max_m; ++lvl) {
        std::unordered_set<std::vector<std::uint64_t>, BitsetHash> seen;
        std::vector<Sub> next;
        for (const auto& s : level) {
            for (auto x : order_d) {
                if (test(s.bits, x)) continue;
                Sub t{s.bits, s.elems};
                t.elems.reserve(s.elems.size() * static_cast<std::size_t>(d));
                bool ok = true;
                std::uint64_t jx = x;
                for (std::int64_t j = 1; j < d && ok; ++j) {
                    for (auto e : s.elems) {
                        std::uint64_t r = add(e, jx);
                        if (test(t.bits, r)) {
                            ok = false;
                            break;
                        }
                        set(t.bits, r);
                        t.elems.push_back(static_cast<std::uint32_t>(r));
                    }
                    jx = add(jx, x);
                }
                if (!ok) continue;
                if (seen.insert(t.bits).second) next.push_back(std::move(t));
            }
        }
        level = std::move(next);
        if (level.empty()) return;

        snapshot.clear();
        snapshot.reserve(level.size());
        for (auto& s : level) {
            std::vector<std::uint32_t> elems = s.elems;
            std::sort(elems.begin(), elems.end());
            // closure sanity pass: the oracle must only emit actual subgroups
            for (auto a : elems)
                for (auto b : elems)
                    if (!test(s.bits, add(a, b)))
                        throw std::logic_error("subgroup cascade: closure violated");
            snapshot.push_back(std::move(elems));
        }
        std::sort(snapshot.begin(), snapshot.end());
        visit(lvl, snapshot);
    }
}

} // namespace

std::vector<std::vector<std::uint64_t>> enumerate_subgroups(const GroupSpec& g, std::int64_t d,
                                                            unsigned m,
                                                            std::uint64_t oracle_bound) {
    std::vector<std::vector<std::uint64_t>> out;
    subgroup_cascade(g, d, m, oracle_bound,
                     [&](unsigned lvl, const std::vector<std::vector<std::uint32_t>>& subs) {
                         if (lvl != m) return;
                         out.reserve(subs.size());
                         for (const auto& s : subs) out.emplace_back(s.begin(), s.end());
                     });
    return out;
}

std::vector<std::uint64_t> enumerate_subgroup_counts(const GroupSpec& g, std::int64_t d,
                                                     unsigned max_m, std::uint64_t oracle_bound) {
    std::vector<std::uint64_t> counts(max_m, 0);
    subgroup_cascade(g, d, max_m, oracle_bound,
                     [&](unsigned lvl, const std::vector<std::vector<std::uint32_t>>& subs) {
                         counts[lvl - 1] = subs.size();
                     });
    return counts;
}

GroupSpec quotient_type(const GroupSpec& g) {
    if (g.num_factors() <= 1) return GroupSpec{};
    std::vector<std::int64_t> fs(g.factors().begin(), g.factors().end() - 1);
    return GroupSpec(std::move(fs));
}

} // namespace rado
