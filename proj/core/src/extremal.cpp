#include "rado/extremal.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "rado/errors.hpp"
#include "rado/smallgroup.hpp"

namespace rado {

namespace {

Int coloring_total(const IntMatrix& a, const GroupSpec& g, const Coloring& chi,
                   CountBackend backend, std::uint64_t oracle_bound) {
    return count_monochromatic(a, g, chi, backend, oracle_bound).total;
}

// restricted growth strings fix color 1 on the first element and prune
// color-permutation orbits; plain odometer otherwise
bool next_coloring(std::vector<int>& c, int r, bool canonical) {
    const std::size_t n = c.size();
    if (!canonical) {
        std::size_t i = n;
        while (i-- > 0) {
            if (++c[i] <= r) return true;
            c[i] = 1;
            if (i == 0) return false;
        }
        return false;
    }
    std::size_t i = n;
    while (i-- > 1) {
        int prefix_max = 0;
        for (std::size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, c[j]);
        if (c[i] < std::min(r, prefix_max + 1)) {
            ++c[i];
            for (std::size_t j = i + 1; j < n; ++j) c[j] = 1;
            return true;
        }
    }
    return false;
}

} // namespace

MinColoringReport min_monochromatic(const IntMatrix& a, const GroupSpec& g, int r,
                                    const SearchBudget& budget, CountBackend backend,
                                    std::uint64_t oracle_bound, unsigned threads,
                                    bool symmetry_reduction) {
    if (r < 1) throw validation_error("need at least one color");
    SmallGroup sg(g);
    if (sg.size() < 2) throw validation_error("the trivial group has no nonzero elements to color");
    const std::size_t nelem = sg.size() - 1;
    const std::size_t m = a.cols(), k = a.rows();
    Int normalizer = m > k ? int_pow(g.order(), static_cast<unsigned long>(m - k)) : Int(1);

    MinColoringReport rep;
    rep.normalizer = normalizer;

    if (budget.mode == SearchBudget::Mode::Exhaustive) {
        Int space = int_pow(Int(r), static_cast<unsigned long>(nelem));
        if (space > Int(static_cast<unsigned long>(budget.max_candidates)))
            throw capacity_error("exhaustive coloring search needs r^(|G|-1) <= max_candidates");

        std::vector<std::vector<int>> batch;
        std::vector<int> cur(nelem, 1);
        std::uint64_t examined = 0;
        bool have = true;
        bool first = true;
        Int best_count;
        std::vector<int> best;

        auto evaluate_stream = [&]() {
            while (have) {
                Coloring chi = coloring_explicit(g, cur);
                chi.num_colors = r;
                validate_coloring(chi);
                Int c = coloring_total(a, g, chi, backend, oracle_bound);
                ++examined;
                if (first || c < best_count) {
                    first = false;
                    best_count = c;
                    best = cur;
                }
                have = next_coloring(cur, r, symmetry_reduction);
            }
        };

        if (threads <= 1) {
            evaluate_stream();
        } else {
            while (have) {
                batch.push_back(cur);
                have = next_coloring(cur, r, symmetry_reduction);
            }
            examined = batch.size();
            struct Partial {
                bool any = false;
                Int count;
                std::size_t index = 0;
            };
            std::vector<Partial> parts(threads);
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) {
                pool.emplace_back([&, t]() {
                    Partial p;
                    for (std::size_t i = t; i < batch.size(); i += threads) {
                        Coloring chi = coloring_explicit(g, batch[i]);
                        chi.num_colors = r;
                        Int c = coloring_total(a, g, chi, backend, oracle_bound);
                        if (!p.any || c < p.count) {
                            p.any = true;
                            p.count = c;
                            p.index = i;
                        }
                    }
                    parts[t] = std::move(p);
                });
            }
            for (auto& th : pool) th.join();
            std::size_t best_index = batch.size();
            for (const auto& p : parts) {
                if (!p.any) continue;
                if (first || p.count < best_count ||
                    (p.count == best_count && p.index < best_index)) {
                    first = false;
                    best_count = p.count;
                    best_index = p.index;
                }
            }
            best = batch[best_index];
        }

        rep.min_count = best_count;
        rep.witness = coloring_explicit(g, best);
        rep.witness.num_colors = r;
        rep.exact = true;
        rep.candidates_examined = examined;
    } else {
        Rng rng(budget.seed);
        bool first = true;
        Int best_count;
        std::vector<int> best;
        std::uint64_t examined = 0;
        for (std::uint64_t iter = 0; iter < budget.max_candidates; ++iter) {
            std::vector<int> cur(nelem);
            for (auto& c : cur) c = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(r)));
            Coloring chi = coloring_explicit(g, cur);
            chi.num_colors = r;
            Int val = coloring_total(a, g, chi, backend, oracle_bound);
            ++examined;
            // single-element recolor descent, first improvement, bounded plateau
            std::size_t plateau = 2 * nelem;
            bool moved = true;
            while (moved) {
                moved = false;
                for (std::size_t e = 0; e < nelem && !moved; ++e) {
                    int old = cur[e];
                    for (int c = 1; c <= r && !moved; ++c) {
                        if (c == old) continue;
                        cur[e] = c;
                        Coloring probe = coloring_explicit(g, cur);
                        probe.num_colors = r;
                        Int pv = coloring_total(a, g, probe, backend, oracle_bound);
                        ++examined;
                        if (pv < val || (pv == val && plateau > 0)) {
                            if (pv == val) --plateau;
                            val = pv;
                            moved = true;
                        } else {
                            cur[e] = old;
                        }
                    }
                }
            }
            if (first || val < best_count) {
                first = false;
                best_count = val;
                best = cur;
            }
        }
        rep.min_count = best_count;
        rep.witness = coloring_explicit(g, best);
        rep.witness.num_colors = r;
        rep.exact = false;
        rep.candidates_examined = examined;
    }

    Int recheck = coloring_total(a, g, rep.witness, CountBackend::BruteForce, oracle_bound);
    if (recheck != rep.min_count)
        throw std::logic_error("witness coloring does not re-verify its reported count");
    rep.empirical_c = Rat(rep.min_count, normalizer);
    rep.empirical_c.canonicalize();
    return rep;
}

DensityWitness density_counterexample(const std::vector<Int>& coeffs, std::int64_t n,
                                      std::uint64_t oracle_bound) {
    if (coeffs.empty()) throw validation_error("need at least one coefficient");
    const std::size_t m = coeffs.size();
    Int alpha(0), t(0);
    for (const auto& c : coeffs) {
        alpha += c;
        t = std::max(t, Int(abs(c)));
    }
    if (alpha == 0)
        throw validation_error(
            "coefficient sum is zero: the equation satisfies the strong column condition "
            "and admits no density counterexample");
    if (n < 1) throw validation_error("modulus must be positive");
    Int mt = Int(static_cast<unsigned long>(m)) * t;
    Int n0_big = Int(n) / mt;
    if (n0_big < 1) throw validation_error("n too small: floor(n/(m t)) must be at least 1");
    const std::int64_t n0 = n0_big.get_si();
    const Int a1 = abs(alpha) + 1;

    DensityWitness w;
    w.coeffs = coeffs;
    w.alpha = alpha;
    w.t = t;
    w.n = n;
    w.n0 = n0;
    for (std::int64_t x = 1; x <= n0; x += a1.get_si()) w.x.push_back(x);
    w.density_bound = Rat(1, mt * a1);
    w.density_bound.canonicalize();

    // |X| >= n/(m t (|alpha|+1)) - 1 always holds for this construction
    if (Rat(static_cast<unsigned long>(w.x.size())) < Rat(n) * w.density_bound - 1)
        throw std::logic_error("density witness smaller than its guaranteed size");

    Int tuples = int_pow(Int(static_cast<unsigned long>(w.x.size())),
                         static_cast<unsigned long>(m));
    if (tuples <= Int(static_cast<unsigned long>(oracle_bound))) {
        std::vector<std::size_t> odo(m, 0);
        Int zeros(0);
        while (true) {
            Int s(0);
            for (std::size_t j = 0; j < m; ++j) s += coeffs[j] * w.x[odo[j]];
            if (int_mod(s, Int(n)) == 0) zeros += 1;
            std::size_t d = m;
            bool done = true;
            while (d-- > 0) {
                if (++odo[d] < w.x.size()) {
                    done = false;
                    break;
                }
                odo[d] = 0;
            }
            if (done) break;
        }
        w.verified = true;
        w.solutions_found = zeros;
    } else {
        w.verified = false;
        w.solutions_found = Int(-1);
    }
    return w;
}

namespace {

Int binomial(std::uint64_t n, std::uint64_t k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

MinSubsetReport min_solutions_dense_subsets(const IntMatrix& a, const GroupSpec& g,
                                            const Rat& epsilon, const SearchBudget& budget,
                                            CountBackend backend, std::uint64_t oracle_bound) {
    if (epsilon <= 0 || epsilon > 1) throw validation_error("epsilon must be in (0, 1]");
    SmallGroup sg(g);
    if (sg.size() < 2) throw validation_error("the trivial group has no nonzero elements");
    const std::uint64_t nelem = sg.size() - 1;
    Rat scaled = epsilon * Rat(g.order());
    Int size_ceil = scaled.get_num() / scaled.get_den() +
                    (scaled.get_num() % scaled.get_den() != 0 ? 1 : 0);
    std::uint64_t size = std::min<std::uint64_t>(size_ceil.get_ui(), nelem);
    if (size < 1) throw validation_error("requested subset size is zero");

    const bool strong = strong_column_condition(a);
    auto count_for = [&](const ElementSet& x) {
        std::vector<ElementSet> sets(a.cols(), x);
        return count_solutions(a, g, sets, backend, oracle_bound);
    };

    MinSubsetReport rep;
    rep.subset_size = static_cast<std::size_t>(size);

    if (budget.mode == SearchBudget::Mode::Exhaustive) {
        if (binomial(nelem, size) > Int(static_cast<unsigned long>(budget.max_candidates)))
            throw capacity_error("exhaustive subset search needs C(|G|-1, size) <= max_candidates");
        std::vector<std::uint64_t> pick(size);
        std::iota(pick.begin(), pick.end(), 1);  // ranks of nonzero elements
        bool first = true;
        std::uint64_t examined = 0;
        while (true) {
            ElementSet x(pick.begin(), pick.end());
            Int c = count_for(x);
            ++examined;
            if (first || c < rep.min_count) {
                first = false;
                rep.min_count = c;
                rep.witness = x;
            }
            std::size_t i = size;
            bool advanced = false;
            while (i-- > 0) {
                if (pick[i] != nelem - size + i + 1) {
                    ++pick[i];
                    for (std::size_t j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
        rep.exact = true;
        rep.candidates_examined = examined;
    } else {
        Rng rng(budget.seed);
        bool first = true;
        std::uint64_t examined = 0;
        for (std::uint64_t iter = 0; iter < budget.max_candidates; ++iter) {
            // uniform size-subset of the nonzero ranks
            std::vector<std::uint64_t> pool(nelem);
            std::iota(pool.begin(), pool.end(), 1);
            for (std::uint64_t i = 0; i < size; ++i) {
                std::uint64_t j = i + rng.below(nelem - i);
                std::swap(pool[i], pool[j]);
            }
            ElementSet x(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
            std::sort(x.begin(), x.end());
            Int val = count_for(x);
            ++examined;
            std::size_t plateau = 2 * size;
            bool moved = true;
            while (moved) {
                moved = false;
                for (std::size_t out = 0; out < x.size() && !moved; ++out) {
                    for (std::uint64_t cand = 1; cand <= nelem && !moved; ++cand) {
                        if (std::binary_search(x.begin(), x.end(), cand)) continue;
                        ElementSet probe = x;
                        probe[out] = cand;
                        std::sort(probe.begin(), probe.end());
                        Int pv = count_for(probe);
                        ++examined;
                        if (pv < val || (pv == val && plateau > 0)) {
                            if (pv == val) --plateau;
                            val = pv;
                            x = probe;
                            moved = true;
                        }
                    }
                }
            }
            if (first || val < rep.min_count) {
                first = false;
                rep.min_count = val;
                rep.witness = x;
            }
        }
        rep.exact = false;
        rep.candidates_examined = examined;
    }

    Int recheck = count_solutions(a, g, std::vector<ElementSet>(a.cols(), rep.witness),
                                  CountBackend::BruteForce, oracle_bound);
    if (recheck != rep.min_count)
        throw std::logic_error("witness subset does not re-verify its reported count");
    if (strong && rep.min_count < Int(static_cast<unsigned long>(rep.witness.size())))
        throw std::logic_error("strong column condition guarantees at least |X| trivial solutions");
    return rep;
}

IntMatrix fixture6_matrix() {
    return IntMatrix({{Int(1), Int(0), Int(-1), Int(0)},
                      {Int(0), Int(1), Int(-1), Int(0)},
                      {Int(0), Int(0), Int(0), Int(2)}});
}

Fixture6Report run_fixture6(int n_power) {
    if (n_power < 1 || n_power > 2)
        throw validation_error("the fixture runs at N in {1, 2} (oracle bound)");
    const IntMatrix a = fixture6_matrix();
    GroupSpec g = GroupSpec::homocyclic(4, static_cast<std::size_t>(n_power));

    Fixture6Report rep;
    rep.n_power = n_power;
    rep.group = g;

    std::vector<ElementSet> all(a.cols(), full_set(g));
    rep.total_solutions = count_solutions(a, g, all, CountBackend::BruteForce);
    Int expect_total = int_pow(Int(2), static_cast<unsigned long>(n_power));
    expect_total = expect_total * expect_total * expect_total;
    if (rep.total_solutions != expect_total)
        throw std::logic_error("fixture total differs from (2^N)^3");

    Coloring chi = coloring_by_order(g);
    SolutionCount mono = count_monochromatic(a, g, chi, CountBackend::BruteForce);
    rep.monochromatic_total = mono.total;
    rep.per_color = mono.per_color;
    Int side = int_pow(Int(2), static_cast<unsigned long>(n_power)) - 1;
    if (rep.monochromatic_total != side * side)
        throw std::logic_error("fixture monochromatic count differs from (2^N - 1)^2");

    rep.has_mod2_certificate = check_columns_condition(a, Ring::mod(Int(2))).has_value();
    rep.has_mod4_certificate = check_columns_condition(a, Ring::mod(Int(4))).has_value();
    if (!rep.has_mod2_certificate || rep.has_mod4_certificate)
        throw std::logic_error("fixture certificate facts do not match");
    return rep;
}

} // namespace rado
