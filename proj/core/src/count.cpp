#include "rado/count.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "rado/errors.hpp"
#include "rado/modarith.hpp"
#include "rado/smallgroup.hpp"

namespace rado {

namespace {

constexpr std::uint64_t kPlainCap = 1u << 22;  // auto-mode ceiling for direct scans

Int int_from_u128(unsigned __int128 v) {
    Int hi(static_cast<unsigned long>(v >> 64));
    Int lo(static_cast<unsigned long>(v & ~0ULL));
    return (hi << 64) + lo;
}

void validate_sets(const SmallGroup& sg, const std::vector<ElementSet>& sets, std::size_t m) {
    if (sets.size() != m) throw validation_error("expected one constraint set per column");
    for (const auto& s : sets)
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] >= sg.size()) throw validation_error("set element rank out of range");
            if (i && s[i] <= s[i - 1]) throw validation_error("sets must be strictly increasing");
        }
}

// saturating product of set sizes
std::uint64_t product_of_sizes(const std::vector<ElementSet>& sets, std::size_t lo, std::size_t hi) {
    std::uint64_t p = 1;
    for (std::size_t j = lo; j < hi; ++j) {
        std::uint64_t s = sets[j].size();
        if (s == 0) return 0;
        if (p > UINT64_MAX / s) return UINT64_MAX;
        p *= s;
    }
    return p;
}

// contrib[j][idx] = k-vector of ranks a_{i,j} * x  for x = sets[j][idx]
std::vector<std::vector<std::vector<std::uint64_t>>> column_contributions(
    const IntMatrix& a, const SmallGroup& sg, const std::vector<ElementSet>& sets) {
    const std::size_t k = a.rows(), m = a.cols();
    std::vector<std::vector<std::int64_t>> coef(k, std::vector<std::int64_t>(m));
    const Int n(sg.exponent());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m; ++j) coef[i][j] = int_mod(a.at(i, j), n).get_si();
    std::vector<std::vector<std::vector<std::uint64_t>>> contrib(m);
    for (std::size_t j = 0; j < m; ++j) {
        contrib[j].resize(sets[j].size());
        for (std::size_t idx = 0; idx < sets[j].size(); ++idx) {
            auto& row = contrib[j][idx];
            row.resize(k);
            for (std::size_t i = 0; i < k; ++i) row[i] = sg.scalar_mul(coef[i][j], sets[j][idx]);
        }
    }
    return contrib;
}

struct PivotPlan {
    std::vector<std::size_t> pivot_cols;  // size k
    std::vector<std::size_t> free_cols;   // size m - k
    std::vector<std::vector<std::vector<std::int64_t>>> inv_action;  // [l][i][i2]
};

// lexicographically first k-subset of columns whose minor is a unit mod the
// exponent; absent when none exists
std::optional<PivotPlan> pivot_plan(const IntMatrix& a, const SmallGroup& sg) {
    const std::size_t k = a.rows(), m = a.cols();
    const Int n(sg.exponent());
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = a.at(i, pick[j]);
        IntMatrix ap(sub);
        Int det = determinant(ap);
        if (det != 0 && int_gcd(det, n) == 1) {
            PivotPlan plan;
            plan.pivot_cols = pick;
            for (std::size_t j = 0; j < m; ++j)
                if (std::find(pick.begin(), pick.end(), j) == pick.end())
                    plan.free_cols.push_back(j);
            // adjugate: adj * A_P = det * I
            IntMatrix adj(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    std::vector<std::vector<Int>> minor;
                    for (std::size_t r = 0; r < k; ++r) {
                        if (r == j) continue;  // adj[i][j] = cofactor(j, i)
                        std::vector<Int> row;
                        for (std::size_t c = 0; c < k; ++c)
                            if (c != i) row.push_back(ap.at(r, c));
                        minor.push_back(std::move(row));
                    }
                    Int d = minor.empty() ? Int(1) : determinant(IntMatrix(minor));
                    adj.at(i, j) = ((i + j) % 2 == 0) ? d : -d;
                }
            const auto& rad = sg.radices();
            plan.inv_action.resize(rad.size());
            for (std::size_t l = 0; l < rad.size(); ++l) {
                Int nl(rad[l]);
                Int detinv;
                if (mpz_invert(detinv.get_mpz_t(), det.get_mpz_t(), nl.get_mpz_t()) == 0)
                    throw std::logic_error("unit determinant not invertible mod a radix");
                plan.inv_action[l].assign(k, std::vector<std::int64_t>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        plan.inv_action[l][i][j] = int_mod(detinv * adj.at(i, j), nl).get_si();
            }
            return plan;
        }
        std::size_t i = k;
        bool advanced = false;
        while (i-- > 0) {
            if (pick[i] != m - k + i) {
                ++pick[i];
                for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return std::nullopt;
    }
}

std::uint64_t run_pivot_solve(const IntMatrix& a, const SmallGroup& sg,
                              const std::vector<ElementSet>& sets, const PivotPlan& plan) {
    const std::size_t k = a.rows();
    const auto& rad = sg.radices();
    const std::size_t s = rad.size();
    const Int n(sg.exponent());

    // per-coordinate reduced coefficients of the free columns
    std::vector<std::vector<std::vector<std::int64_t>>> cf(s);  // [l][i][jf]
    for (std::size_t l = 0; l < s; ++l) {
        cf[l].assign(k, std::vector<std::int64_t>(plan.free_cols.size()));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t jf = 0; jf < plan.free_cols.size(); ++jf)
                cf[l][i][jf] = int_mod(a.at(i, plan.free_cols[jf]), Int(rad[l])).get_si();
    }
    // coordinates of the elements of each free set
    std::vector<std::vector<std::vector<std::int64_t>>> fco(plan.free_cols.size());
    for (std::size_t jf = 0; jf < plan.free_cols.size(); ++jf) {
        const auto& set = sets[plan.free_cols[jf]];
        fco[jf].resize(set.size());
        for (std::size_t idx = 0; idx < set.size(); ++idx) fco[jf][idx] = sg.coords(set[idx]);
    }
    std::vector<std::vector<bool>> pivot_member(k, std::vector<bool>(sg.size(), false));
    for (std::size_t i = 0; i < k; ++i)
        for (auto r : sets[plan.pivot_cols[i]]) pivot_member[i][r] = true;

    std::vector<std::size_t> odo(plan.free_cols.size(), 0);
    std::uint64_t count = 0;
    const std::size_t nf = plan.free_cols.size();
    while (true) {
        // rhs[i][l] = -(A_F x_F)_i at coordinate l
        bool ok = true;
        std::vector<std::vector<std::int64_t>> rhs(k, std::vector<std::int64_t>(s, 0));
        for (std::size_t l = 0; l < s; ++l) {
            const std::int64_t nl = rad[l];
            for (std::size_t i = 0; i < k; ++i) {
                std::int64_t b = 0;
                for (std::size_t jf = 0; jf < nf; ++jf)
                    b = (b + cf[l][i][jf] * fco[jf][odo[jf]][l]) % nl;
                rhs[i][l] = b ? nl - b : 0;
            }
        }
        for (std::size_t i = 0; i < k && ok; ++i) {
            std::uint64_t rank = 0;
            for (std::size_t l = 0; l < s; ++l) {
                const std::int64_t nl = rad[l];
                std::int64_t v = 0;
                for (std::size_t i2 = 0; i2 < k; ++i2)
                    v = (v + plan.inv_action[l][i][i2] * rhs[i2][l]) % nl;
                rank = rank * static_cast<std::uint64_t>(nl) + static_cast<std::uint64_t>(v);
            }
            if (!pivot_member[i][rank]) ok = false;
        }
        if (ok) ++count;
        std::size_t d = nf;
        while (d-- > 0) {
            if (++odo[d] < sets[plan.free_cols[d]].size()) break;
            odo[d] = 0;
            if (d == 0) return count;
        }
        if (nf == 0) return count;
    }
}

std::uint64_t run_full_scan(const IntMatrix& a, const SmallGroup& sg,
                            const std::vector<ElementSet>& sets) {
    const std::size_t k = a.rows(), m = a.cols();
    auto contrib = column_contributions(a, sg, sets);
    std::vector<std::size_t> odo(m, 0);
    // partial[j] = sum of contributions of the first j chosen columns
    std::vector<std::vector<std::uint64_t>> partial(m + 1, std::vector<std::uint64_t>(k, 0));
    std::uint64_t count = 0;
    std::size_t depth = 0;
    while (true) {
        if (odo[depth] == sets[depth].size()) {
            if (depth == 0) return count;
            --depth;
            ++odo[depth];
            continue;
        }
        const auto& c = contrib[depth][odo[depth]];
        for (std::size_t i = 0; i < k; ++i) partial[depth + 1][i] = sg.add(partial[depth][i], c[i]);
        if (depth + 1 == m) {
            bool zero = true;
            for (std::size_t i = 0; i < k; ++i) zero = zero && partial[m][i] == 0;
            if (zero) ++count;
            ++odo[depth];
        } else {
            ++depth;
            odo[depth] = 0;
        }
    }
}

std::uint64_t encode_key(const std::vector<std::uint64_t>& v, std::uint64_t size) {
    std::uint64_t key = 0;
    for (auto x : v) key = key * size + x;
    return key;
}

Int run_meet_in_middle(const IntMatrix& a, const SmallGroup& sg,
                       const std::vector<ElementSet>& sets, std::uint64_t oracle_bound) {
    const std::size_t k = a.rows(), m = a.cols();
    auto contrib = column_contributions(a, sg, sets);

    std::size_t best_h = 1;
    std::uint64_t best_cost = UINT64_MAX;
    for (std::size_t h = 1; h < m; ++h) {
        std::uint64_t c = std::max(product_of_sizes(sets, 0, h), product_of_sizes(sets, h, m));
        if (c < best_cost) {
            best_cost = c;
            best_h = h;
        }
    }
    if (best_cost > oracle_bound)
        throw capacity_error("meet-in-the-middle sides exceed the oracle bound");

    // key space |G|^k must fit an unsigned word
    Int keyspace = int_pow(Int(sg.size()), static_cast<unsigned long>(k));
    if (mpz_sizeinbase(keyspace.get_mpz_t(), 2) > 62)
        throw capacity_error("partial-sum key space too large for meet-in-the-middle");
    const std::uint64_t kspace = keyspace.get_ui();

    auto sweep = [&](std::size_t lo, std::size_t hi, auto&& emit) {
        std::vector<std::size_t> odo(hi - lo, 0);
        std::vector<std::uint64_t> acc(k);
        while (true) {
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t j = lo; j < hi; ++j) {
                const auto& c = contrib[j][odo[j - lo]];
                for (std::size_t i = 0; i < k; ++i) acc[i] = sg.add(acc[i], c[i]);
            }
            emit(acc);
            std::size_t d = hi - lo;
            while (d-- > 0) {
                if (++odo[d] < sets[lo + d].size()) break;
                odo[d] = 0;
                if (d == 0) return;
            }
            if (hi == lo) return;
        }
    };

    const bool dense = kspace <= (1u << 22);
    std::vector<std::uint64_t> dense_counts;
    std::unordered_map<std::uint64_t, std::uint64_t> sparse_counts;
    if (dense)
        dense_counts.assign(kspace, 0);
    else
        sparse_counts.reserve(std::min<std::uint64_t>(best_cost, 1u << 22));

    sweep(0, best_h, [&](const std::vector<std::uint64_t>& acc) {
        std::uint64_t key = encode_key(acc, sg.size());
        if (dense)
            ++dense_counts[key];
        else
            ++sparse_counts[key];
    });

    unsigned __int128 total = 0;
    std::vector<std::uint64_t> negacc(k);
    sweep(best_h, m, [&](const std::vector<std::uint64_t>& acc) {
        for (std::size_t i = 0; i < k; ++i) negacc[i] = sg.neg(acc[i]);
        std::uint64_t key = encode_key(negacc, sg.size());
        if (dense) {
            total += dense_counts[key];
        } else {
            auto it = sparse_counts.find(key);
            if (it != sparse_counts.end()) total += it->second;
        }
    });
    return int_from_u128(total);
}

} // namespace

ElementSet full_set(const GroupSpec& g) {
    SmallGroup sg(g);
    ElementSet s(sg.size());
    std::iota(s.begin(), s.end(), 0);
    return s;
}

ElementSet nonzero_set(const GroupSpec& g) {
    SmallGroup sg(g);
    if (sg.size() == 0) return {};
    ElementSet s(sg.size() - 1);
    std::iota(s.begin(), s.end(), 1);
    return s;
}

Int count_solutions_bruteforce(const IntMatrix& a, const GroupSpec& g,
                               const std::vector<ElementSet>& sets, std::uint64_t oracle_bound,
                               BruteStrategy strategy) {
    SmallGroup sg(g);
    validate_sets(sg, sets, a.cols());
    for (const auto& s : sets)
        if (s.empty()) return 0;
    if (sg.size() == 1) return 1;  // nonempty sets are all {0} and A*0 = 0

    const std::uint64_t full_cost = product_of_sizes(sets, 0, a.cols());

    std::optional<PivotPlan> plan;
    std::uint64_t free_cost = UINT64_MAX;
    auto ensure_plan = [&]() {
        if (!plan && rank(a, Ring::rationals()) == a.rows()) plan = pivot_plan(a, sg);
        if (plan) {
            std::uint64_t c = 1;
            for (auto j : plan->free_cols) {
                std::uint64_t sz = sets[j].size();
                c = (c > UINT64_MAX / sz) ? UINT64_MAX : c * sz;
            }
            free_cost = c;
        }
    };

    switch (strategy) {
        case BruteStrategy::PivotSolve:
            ensure_plan();
            if (!plan)
                throw validation_error("no column minor is a unit mod the exponent; pivot solve unavailable");
            if (free_cost > oracle_bound) throw capacity_error("pivot solve exceeds the oracle bound");
            return Int(run_pivot_solve(a, sg, sets, *plan));
        case BruteStrategy::FullScan:
            if (full_cost > oracle_bound) throw capacity_error("full scan exceeds the oracle bound");
            return Int(run_full_scan(a, sg, sets));
        case BruteStrategy::MeetInMiddle:
            return run_meet_in_middle(a, sg, sets, oracle_bound);
        case BruteStrategy::Auto: {
            ensure_plan();
            if (plan && free_cost <= std::min<std::uint64_t>(kPlainCap, oracle_bound))
                return Int(run_pivot_solve(a, sg, sets, *plan));
            if (full_cost <= std::min<std::uint64_t>(kPlainCap, oracle_bound))
                return Int(run_full_scan(a, sg, sets));
            if (plan && free_cost <= oracle_bound)
                return Int(run_pivot_solve(a, sg, sets, *plan));
            return run_meet_in_middle(a, sg, sets, oracle_bound);
        }
    }
    throw std::logic_error("unreachable brute-force strategy");
}

namespace {

// in-place DFT along every axis: out[u] = sum_x in[x] * w^{<u,x>} (mod q)
void axis_transforms(std::vector<std::uint64_t>& table, const SmallGroup& sg, std::uint64_t q,
                     const std::vector<std::uint64_t>& omega_pow, std::int64_t n) {
    const auto& rad = sg.radices();
    const std::size_t s = rad.size();
    std::vector<std::uint64_t> strides(s, 1);
    for (std::size_t i = s; i-- > 1;) strides[i - 1] = strides[i] * static_cast<std::uint64_t>(rad[i]);
    for (std::size_t l = 0; l < s; ++l) {
        const std::uint64_t nl = static_cast<std::uint64_t>(rad[l]);
        const std::uint64_t stride = strides[l];
        const std::uint64_t wl = static_cast<std::uint64_t>(n) / nl;  // axis root = w^{n/n_l}
        std::vector<std::uint64_t> line(nl), out(nl);
        const std::uint64_t block = stride * nl;
        for (std::uint64_t base0 = 0; base0 < sg.size(); base0 += block) {
            for (std::uint64_t inner = 0; inner < stride; ++inner) {
                const std::uint64_t base = base0 + inner;
                for (std::uint64_t t = 0; t < nl; ++t) line[t] = table[base + t * stride];
                for (std::uint64_t u = 0; u < nl; ++u) {
                    std::uint64_t acc = 0;
                    for (std::uint64_t t = 0; t < nl; ++t) {
                        std::uint64_t e = (u * t) % nl * wl % static_cast<std::uint64_t>(n);
                        acc = (acc + mulmod_u64(line[t], omega_pow[e], q)) % q;
                    }
                    out[u] = acc;
                }
                for (std::uint64_t u = 0; u < nl; ++u) table[base + u * stride] = out[u];
            }
        }
    }
}

} // namespace

Int count_solutions_fourier(const IntMatrix& a, const GroupSpec& g,
                            const std::vector<ElementSet>& sets, std::uint64_t oracle_bound) {
    SmallGroup sg(g);
    const std::size_t k = a.rows(), m = a.cols();
    validate_sets(sg, sets, m);
    for (const auto& s : sets)
        if (s.empty()) return 0;
    if (sg.size() == 1) return 1;

    const std::int64_t n = sg.exponent();
    Int gk = int_pow(Int(sg.size()), static_cast<unsigned long>(k));
    if (mpz_sizeinbase(gk.get_mpz_t(), 2) > 62 || gk.get_ui() > oracle_bound)
        throw capacity_error("character-sum evaluation space |G|^k exceeds the bound");
    const std::uint64_t tspace = gk.get_ui();
    if (sg.size() * m > (1u << 24))
        throw capacity_error("transform tables too large");

    Int count_bound(1);
    for (const auto& s : sets) count_bound *= static_cast<unsigned long>(s.size());
    Int sum_bound = count_bound * gk;
    std::size_t nprimes = (mpz_sizeinbase(sum_bound.get_mpz_t(), 2) + 1 + 60) / 61;
    auto primes = ntt_primes(n, std::max<std::size_t>(1, nprimes));

    const auto& rad = sg.radices();
    const std::size_t s = rad.size();
    // reduced coefficients per coordinate
    std::vector<std::vector<std::vector<std::int64_t>>> coef(s);
    for (std::size_t l = 0; l < s; ++l) {
        coef[l].assign(k, std::vector<std::int64_t>(m));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < m; ++j)
                coef[l][i][j] = int_mod(a.at(i, j), Int(rad[l])).get_si();
    }

    std::vector<std::uint64_t> residues;
    for (auto q : primes) {
        std::uint64_t w = root_of_unity(q, n);
        std::vector<std::uint64_t> omega_pow(static_cast<std::size_t>(n));
        omega_pow[0] = 1;
        for (std::size_t e = 1; e < omega_pow.size(); ++e) omega_pow[e] = mulmod_u64(omega_pow[e - 1], w, q);

        std::vector<std::vector<std::uint64_t>> tables(m);
        for (std::size_t j = 0; j < m; ++j) {
            tables[j].assign(sg.size(), 0);
            for (auto r : sets[j]) tables[j][r] = 1;
            axis_transforms(tables[j], sg, q, omega_pow, n);
        }

        std::uint64_t sum = 0;
        std::vector<std::uint64_t> t(k, 0);               // ranks of the k dual variables
        std::vector<std::vector<std::int64_t>> tco(k, std::vector<std::int64_t>(s, 0));
        while (true) {
            std::uint64_t prod = 1;
            for (std::size_t j = 0; j < m && prod; ++j) {
                std::uint64_t urank = 0;
                for (std::size_t l = 0; l < s; ++l) {
                    const std::int64_t nl = rad[l];
                    std::int64_t v = 0;
                    for (std::size_t i = 0; i < k; ++i) v = (v + coef[l][i][j] * tco[i][l]) % nl;
                    urank = urank * static_cast<std::uint64_t>(nl) + static_cast<std::uint64_t>(v);
                }
                prod = mulmod_u64(prod, tables[j][urank], q);
            }
            sum = (sum + prod) % q;
            // odometer over G^k
            std::size_t d = k;
            bool done = true;
            while (d-- > 0) {
                if (++t[d] < sg.size()) {
                    tco[d] = sg.coords(t[d]);
                    done = false;
                    break;
                }
                t[d] = 0;
                tco[d] = sg.coords(0);
            }
            if (done) break;
        }
        residues.push_back(sum);
    }
    (void)tspace;

    // remainder reconstruction
    Int x(static_cast<unsigned long>(residues[0]));
    Int pmod(static_cast<unsigned long>(primes[0]));
    for (std::size_t i = 1; i < primes.size(); ++i) {
        const std::uint64_t q = primes[i];
        std::uint64_t pred = mpz_fdiv_ui(pmod.get_mpz_t(), q);
        std::uint64_t xred = mpz_fdiv_ui(x.get_mpz_t(), q);
        std::uint64_t inv = powmod_u64(pred, q - 2, q);
        std::uint64_t diff = (residues[i] + q - xred) % q;
        std::uint64_t tmul = mulmod_u64(diff, inv, q);
        x += pmod * Int(static_cast<unsigned long>(tmul));
        pmod *= static_cast<unsigned long>(q);
    }
    if (!mpz_divisible_p(x.get_mpz_t(), gk.get_mpz_t()))
        throw std::logic_error("character sum not divisible by |G|^k; transform arithmetic is broken");
    Int count = int_divexact(x, gk);
    if (count > count_bound)
        throw std::logic_error("character-sum count exceeds its a priori bound");
    return count;
}

Int count_solutions(const IntMatrix& a, const GroupSpec& g, const std::vector<ElementSet>& sets,
                    CountBackend backend, std::uint64_t oracle_bound) {
    switch (backend) {
        case CountBackend::BruteForce:
            return count_solutions_bruteforce(a, g, sets, oracle_bound);
        case CountBackend::Fourier:
            return count_solutions_fourier(a, g, sets, oracle_bound);
        case CountBackend::Auto: {
            // brute force when |G|^{m-k} <= |G|^k * m, transform otherwise
            Int order = g.order();
            std::size_t k = a.rows(), m = a.cols();
            Int lhs = m > k ? int_pow(order, static_cast<unsigned long>(m - k)) : Int(1);
            Int rhs = int_pow(order, static_cast<unsigned long>(k)) * static_cast<unsigned long>(m);
            if (lhs <= rhs) return count_solutions_bruteforce(a, g, sets, oracle_bound);
            return count_solutions_fourier(a, g, sets, oracle_bound);
        }
    }
    throw std::logic_error("unreachable counting backend");
}

Coloring coloring_by_order(const GroupSpec& g) {
    SmallGroup sg(g);
    Coloring chi{g, 1, std::vector<int>(sg.size(), 0)};
    std::vector<std::int64_t> orders;
    for (std::uint64_t r = 1; r < sg.size(); ++r) orders.push_back(sg.order(r));
    std::vector<std::int64_t> distinct = orders;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::uint64_t r = 1; r < sg.size(); ++r) {
        auto it = std::lower_bound(distinct.begin(), distinct.end(), orders[r - 1]);
        chi.colors[r] = static_cast<int>(it - distinct.begin()) + 1;
    }
    chi.num_colors = std::max<int>(1, static_cast<int>(distinct.size()));
    return chi;
}

Coloring coloring_random(const GroupSpec& g, int r, std::uint64_t seed) {
    if (r < 1) throw validation_error("colorings need at least one color");
    SmallGroup sg(g);
    Coloring chi{g, r, std::vector<int>(sg.size(), 0)};
    Rng rng(seed);
    for (std::uint64_t e = 1; e < sg.size(); ++e)
        chi.colors[e] = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(r)));
    return chi;
}

Coloring coloring_explicit(const GroupSpec& g, std::vector<int> values) {
    SmallGroup sg(g);
    if (values.size() + 1 != sg.size())
        throw validation_error("explicit coloring must list one value per nonzero element");
    int r = 0;
    for (int v : values) {
        if (v < 1) throw validation_error("colors are positive integers");
        r = std::max(r, v);
    }
    Coloring chi{g, std::max(1, r), std::vector<int>(sg.size(), 0)};
    for (std::size_t i = 0; i < values.size(); ++i) chi.colors[i + 1] = values[i];
    return chi;
}

void validate_coloring(const Coloring& chi) {
    SmallGroup sg(chi.group);
    if (chi.colors.size() != sg.size()) throw validation_error("coloring has wrong length");
    if (chi.num_colors < 1) throw validation_error("colorings need at least one color");
    for (std::uint64_t r = 1; r < sg.size(); ++r)
        if (chi.colors[r] < 1 || chi.colors[r] > chi.num_colors)
            throw validation_error("coloring value out of range");
}

SolutionCount count_monochromatic(const IntMatrix& a, const GroupSpec& g, const Coloring& chi,
                                  CountBackend backend, std::uint64_t oracle_bound) {
    validate_coloring(chi);
    SmallGroup sg(g);
    SolutionCount out{Int(0), {}, Int(0)};
    for (int c = 1; c <= chi.num_colors; ++c) {
        ElementSet cls;
        for (std::uint64_t r = 1; r < sg.size(); ++r)
            if (chi.colors[r] == c) cls.push_back(r);
        std::vector<ElementSet> sets(a.cols(), cls);
        Int v = count_solutions(a, g, sets, backend, oracle_bound);
        out.per_color[c] = v;
        out.total += v;
    }
    const Int n(sg.exponent());
    std::vector<std::int64_t> rowsum(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Int s(0);
        for (std::size_t j = 0; j < a.cols(); ++j) s += a.at(i, j);
        rowsum[i] = int_mod(s, n).get_si();
    }
    for (std::uint64_t e = 1; e < sg.size(); ++e) {
        bool solves = true;
        for (std::size_t i = 0; i < a.rows() && solves; ++i)
            if (sg.scalar_mul(rowsum[i], e) != 0) solves = false;
        if (solves) out.trivial += 1;
    }
    return out;
}

} // namespace rado
