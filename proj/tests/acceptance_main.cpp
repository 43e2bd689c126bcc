// Acceptance suite: one check per shipped guarantee, each printed as a
// single pass/fail line. Everything is exact; there are no tolerances to
// tune. Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "helpers.hpp"
#include "rado/errors.hpp"
#include "rado/extremal.hpp"
#include "rado/json_io.hpp"
#include "rado/modarith.hpp"
#include "rado/ramsey.hpp"

using namespace rado;
using testutil::groups_with_exponent;
using testutil::p_group_types;
using testutil::schur_matrix;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

// ---------------------------------------------------------------------------
// 1. fourier counting == brute-force counting on randomized instances
// ---------------------------------------------------------------------------
void criterion_oracle_equivalence() {
    Rng rng(0xACCE5501);
    int done = 0;
    while (done < 200) {
        GroupSpec g = testutil::random_group(rng, 64, 2, 8);
        SmallGroup sg(g);
        const std::size_t k = 1 + rng.below(2);
        const std::size_t m = k + 1 + rng.below(5 - k);
        IntMatrix a = testutil::random_matrix(rng, k, m, -4, 4);
        std::vector<ElementSet> sets;
        for (std::size_t j = 0; j < m; ++j)
            sets.push_back(testutil::random_subset(rng, sg.size(), 20 + rng.below(75)));
        Int brute = count_solutions_bruteforce(a, g, sets);
        Int fourier = count_solutions_fourier(a, g, sets);
        require(brute == fourier, "backend mismatch on instance " + std::to_string(done) +
                                      ": brute " + brute.get_str() + " vs fourier " +
                                      fourier.get_str() + " over " + g.to_string());
        ++done;
    }
}

// ---------------------------------------------------------------------------
// 2. Yeh's formula == exhaustive enumeration on all p-groups of order <= 256
// ---------------------------------------------------------------------------
void criterion_yeh() {
    std::uint64_t compared = 0;
    for (std::int64_t p : {2, 3}) {
        const int max_total = p == 2 ? 8 : 5;  // order <= 256 means p^total <= 256
        for (const auto& host : p_group_types(p, max_total)) {
            GroupSpec g = host.to_group();
            for (int a = 1; a <= host.exponents.back(); ++a) {
                Int dpow = int_pow(Int(p), static_cast<unsigned long>(a));
                const std::int64_t d = dpow.get_si();
                const unsigned max_m = static_cast<unsigned>(host.eta()) + 1;
                auto counts = enumerate_subgroup_counts(g, d, max_m, 512);
                for (unsigned m = 1; m <= max_m; ++m) {
                    Int formula = yeh_count(host, PGroupType(p, std::vector<int>(m, a)));
                    require(formula == Int(static_cast<unsigned long>(counts[m - 1])),
                            "yeh mismatch: host " + g.to_string() + " target Z" +
                                std::to_string(d) + "^" + std::to_string(m) + ": formula " +
                                formula.get_str() + " vs enumerated " +
                                std::to_string(counts[m - 1]));
                    ++compared;
                }
            }
        }
    }
    require(compared > 400, "suspiciously few comparisons ran");
}

// ---------------------------------------------------------------------------
// 3. Gaussian-coefficient identity and the pinned subspace count
// ---------------------------------------------------------------------------
void criterion_gaussian() {
    for (Int q : {Int(2), Int(3), Int(4), Int(5)})
        for (unsigned n = 1; n <= 8; ++n)
            for (unsigned m = 1; m <= n; ++m) {
                Rat lhs = Rat(gaussian_binomial(n, m, q)) *
                          Rat(int_pow(q, m) - 1, int_pow(q, n) - 1);
                lhs.canonicalize();
                require(lhs == Rat(gaussian_binomial(n - 1, m - 1, q)),
                        "gaussian identity failed at N=" + std::to_string(n) +
                            " M=" + std::to_string(m) + " q=" + q.get_str());
            }
    require(gaussian_binomial(4, 2, Int(2)) == 35, "(4 choose 2)_2 != 35");
    require(enumerate_subgroups(GroupSpec({2, 2, 2, 2}), 2, 2).size() == 35,
            "subspace enumeration of F_2^4 planes != 35");
}

// ---------------------------------------------------------------------------
// 4. subgroup-count inequalities behind the popular-structure argument
// ---------------------------------------------------------------------------
void criterion_subgroup_bounds() {
    std::uint64_t checked = 0;
    for (std::int64_t n : {2, 3, 4, 6}) {
        for (const auto& g : groups_with_exponent(n, 256)) {
            std::size_t full_factors = 0;
            for (auto f : g.factors())
                if (f == n) ++full_factors;
            for (unsigned m : {2u, 3u}) {
                if (full_factors < m) continue;  // Z_n^m does not embed
                Int count = count_subgroups_iso(g, n, m);
                Int qcount = count_subgroups_iso(quotient_type(g), n, m - 1);
                Rat c1(1);
                for (auto p : prime_factors(n)) {
                    int beta = 0;
                    std::int64_t nn = n;
                    while (nn % p == 0) {
                        nn /= p;
                        ++beta;
                    }
                    c1 /= Rat(int_pow(Int(p), static_cast<unsigned long>(m) *
                                                  static_cast<unsigned long>(m) *
                                                  static_cast<unsigned long>(beta)));
                }
                c1.canonicalize();
                Rat order(g.order());
                require(Rat(count) >= c1 * order * Rat(qcount),
                        "lower bound [G;M] >= c1 |G| [G/Zn;M-1] failed on " + g.to_string() +
                            " M=" + std::to_string(m));
                require(Rat(qcount) <= Rat(int_pow(g.order(), m - 1)),
                        "upper bound [G/Zn;M-1] <= |G|^{M-1} failed on " + g.to_string());
                require(Rat(count) >= c1 * Rat(int_pow(g.order(), m)),
                        "lower bound [G;M] >= c1 |G|^M failed on " + g.to_string());
                ++checked;
            }
        }
    }
    require(checked >= 20, "too few groups qualified; generator is broken");
}

// ---------------------------------------------------------------------------
// 5. skeleton solver on randomized certified systems
// ---------------------------------------------------------------------------
std::vector<std::pair<IntMatrix, SkeletonBasis>> sampled_skeleton_instances(int want) {
    Rng rng(0xACCE5505);
    std::vector<std::pair<IntMatrix, SkeletonBasis>> out;
    const std::vector<std::int64_t> ns{2, 3, 4, 6};
    while (out.size() < static_cast<std::size_t>(want)) {
        std::int64_t n = ns[rng.below(ns.size())];
        std::size_t k = 1 + rng.below(2);
        std::size_t m = k + 1 + rng.below(5);
        if (m > 6) m = 6;
        IntMatrix a = testutil::random_matrix(rng, k, m, -3, 3);
        if (out.size() % 2 == 0) {
            // make the last column the negated sum of the others: the strong
            // condition then guarantees a single-block certificate
            for (std::size_t i = 0; i < k; ++i) {
                Int s(0);
                for (std::size_t j = 0; j + 1 < m; ++j) s += a.at(i, j);
                a.at(i, m - 1) = -s;
            }
        }
        auto cert = check_columns_condition(a, Ring::mod(Int(n)));
        if (!cert) continue;
        const std::size_t t = cert->num_blocks();
        std::size_t mdim = std::min<std::size_t>(t + rng.below(3), 6);
        if (mdim < t) mdim = t;
        std::vector<std::vector<std::int64_t>> vecs(t, std::vector<std::int64_t>(mdim, 0));
        std::vector<std::size_t> pivots;
        {
            std::vector<std::size_t> all(mdim);
            for (std::size_t i = 0; i < mdim; ++i) all[i] = i;
            for (std::size_t i = 0; i < t; ++i) {
                std::size_t lo = i == 0 ? 0 : pivots.back() + 1;
                std::size_t hi = mdim - (t - i);
                pivots.push_back(lo + rng.below(hi - lo + 1));
            }
        }
        for (std::size_t i = 0; i < t; ++i) {
            vecs[i][pivots[i]] = 1;
            for (std::size_t j = pivots[i] + 1; j < mdim; ++j)
                vecs[i][j] = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n)));
        }
        out.emplace_back(a, make_skeleton_basis(GroupSpec::homocyclic(n, mdim), vecs, true));
    }
    return out;
}

void criterion_skeleton() {
    auto instances = sampled_skeleton_instances(100);
    for (const auto& [a, basis] : instances) {
        const std::int64_t n = basis.ambient.exponent();
        auto cert = check_columns_condition(a, Ring::mod(Int(n)));
        require(cert.has_value(), "instance lost its certificate");
        auto y = skeleton_solution(a, *cert, basis);
        auto f = f_set(basis);
        SmallGroup sg(basis.ambient);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < a.cols(); ++j) {
                std::int64_t c = int_mod(a.at(i, j), Int(n)).get_si();
                acc = sg.add(acc, sg.scalar_mul(c, element_rank(y[j])));
            }
            require(acc == 0, "A y != 0");
        }
        for (const auto& e : y) {
            require(element_order(e) == n, "solution entry has partial order");
            require(std::binary_search(f.elements.begin(), f.elements.end(), element_rank(e)),
                    "solution entry escapes F");
        }
    }
}

// ---------------------------------------------------------------------------
// 6. reduction to d_k = 1 with exhaustive solution-set inclusion
// ---------------------------------------------------------------------------
void check_reduction(const IntMatrix& a, std::int64_t n, std::uint64_t max_order) {
    auto rep = reduce_matrix(a, Int(n));
    require(rep.dk_result == 1, "d_k(A') != 1");
    require(rep.cert_on_result.order == rep.cert.order &&
                rep.cert_on_result.breakpoints == rep.cert.breakpoints,
            "certificate block structure changed");
    require(verify_certificate(rep.result, rep.cert_on_result),
            "certificate does not hold on A'");

    const IntMatrix& ap = rep.result;
    const std::size_t k = ap.rows(), m = ap.cols();
    auto snf = smith_normal_form(ap);
    for (const auto& d : snf.d) require(d == 1, "SNF of A' should be the identity block");

    for (const auto& g : groups_with_exponent(n, max_order)) {
        SmallGroup sg(g);
        // kernel of A' is exactly V * (0 x G^{m-k}); d_k(A') = 1 makes this a
        // bijection, so walking it is an exhaustive scan of A's candidate set
        Int expect = int_pow(g.order(), static_cast<unsigned long>(m - k));
        Int counted = count_solutions(ap, g, std::vector<ElementSet>(m, full_set(g)));
        require(counted == expect, "solution count of A' over " + g.to_string() +
                                       " is not |G|^{m-k}");

        const std::size_t s = sg.num_coords();
        std::vector<std::size_t> odo(m - k, 0);
        std::uint64_t scanned = 0;
        while (true) {
            // x = V * (0, ..., 0, w)
            std::vector<std::vector<std::int64_t>> w(m, std::vector<std::int64_t>(s, 0));
            for (std::size_t j = 0; j < m - k; ++j) {
                auto coords = sg.coords(static_cast<std::uint64_t>(odo[j]));
                w[k + j] = coords;
            }
            std::vector<std::uint64_t> x(m);
            for (std::size_t row = 0; row < m; ++row) {
                std::uint64_t acc = 0;
                for (std::size_t col = k; col < m; ++col) {
                    std::int64_t c = int_mod(snf.v.at(row, col), Int(sg.exponent())).get_si();
                    acc = sg.add(acc, sg.scalar_mul(c, sg.rank(w[col])));
                }
                x[row] = acc;
            }
            // verify A' x = 0 and then inclusion A x = 0
            for (const IntMatrix* mat : {&ap, &a}) {
                for (std::size_t i = 0; i < k; ++i) {
                    std::uint64_t acc = 0;
                    for (std::size_t j = 0; j < m; ++j) {
                        std::int64_t c = int_mod(mat->at(i, j), Int(sg.exponent())).get_si();
                        acc = sg.add(acc, sg.scalar_mul(c, x[j]));
                    }
                    require(acc == 0, mat == &ap ? "kernel walk left ker(A')"
                                                 : "inclusion fails: A x != 0 over " +
                                                       g.to_string());
                }
            }
            ++scanned;
            std::size_t d = m - k;
            bool done = true;
            while (d-- > 0) {
                if (++odo[d] < sg.size()) {
                    done = false;
                    break;
                }
                odo[d] = 0;
            }
            if (done) break;
        }
        require(Int(static_cast<unsigned long>(scanned)) == expect, "kernel walk miscounted");
    }
}

void criterion_reduction() {
    IntMatrix m1({{Int(2), Int(2), Int(-2)}});
    check_reduction(m1, 6, 64);
    auto rep1 = reduce_matrix(m1, Int(6));
    require(rep1.result == IntMatrix({{Int(1), Int(1), Int(-1)}}), "(2 2 -2) should reduce to (1 1 -1)");

    IntMatrix m2({{Int(2), Int(0), Int(-2), Int(0)},
                  {Int(0), Int(2), Int(-2), Int(0)},
                  {Int(0), Int(0), Int(0), Int(4)}});
    check_reduction(m2, 2, 64);
}

// ---------------------------------------------------------------------------
// 7. the counterexample fixture over Z_4^N
// ---------------------------------------------------------------------------
void criterion_fixture() {
    auto r1 = run_fixture6(1);
    require(r1.total_solutions == 8, "N=1 total != 8");
    require(r1.monochromatic_total == 1, "N=1 monochromatic != 1");
    require(r1.has_mod2_certificate && !r1.has_mod4_certificate, "certificate facts wrong at N=1");

    auto r2 = run_fixture6(2);
    require(r2.total_solutions == 64, "N=2 total != 64");
    require(r2.monochromatic_total == 9, "N=2 monochromatic != 9");
    require(r2.has_mod2_certificate && !r2.has_mod4_certificate, "certificate facts wrong at N=2");
}

// ---------------------------------------------------------------------------
// 8. exhaustive coloring minima (schur family)
// ---------------------------------------------------------------------------
void criterion_extremal_table() {
    SearchBudget budget;
    auto z5 = min_monochromatic(schur_matrix(), GroupSpec({5}), 2, budget);
    require(z5.min_count == 0, "schur Z5 minimum is not 0");
    require(z5.witness.colors == std::vector<int>{0, 1, 2, 2, 1},
            "schur Z5 witness is not the {1,4},{2,3} split");

    std::ostringstream table;
    table << "    n->min:";
    for (std::int64_t n = 2; n <= 11; ++n) {
        auto rep = min_monochromatic(schur_matrix(), GroupSpec({n}), 2, budget);
        table << " " << n << "->" << rep.min_count.get_str();
        if (n == 5) require(rep.min_count == 0, "table disagrees at n=5");
        if (n == 6)
            require(rep.min_count >= 1,
                    "Z6 has no sum-free 2-partition, the minimum must be positive");
    }
    std::cout << table.str() << "\n";

    auto again = min_monochromatic(schur_matrix(), GroupSpec({7}), 2, budget);
    auto once = min_monochromatic(schur_matrix(), GroupSpec({7}), 2, budget);
    require(again.min_count == once.min_count && again.witness.colors == once.witness.colors,
            "exhaustive search is not reproducible");
}

// ---------------------------------------------------------------------------
// 9. density counterexamples and dense-subset floors
// ---------------------------------------------------------------------------
void criterion_density() {
    auto w1 = density_counterexample({Int(1), Int(1), Int(1)}, 100);
    require(w1.verified && w1.solutions_found == 0, "(1,1,1)/100 witness has solutions");
    require(Rat(static_cast<unsigned long>(w1.x.size())) >= Rat(100) * w1.density_bound - 1,
            "(1,1,1)/100 witness below the density floor");

    auto w2 = density_counterexample({Int(1), Int(-2)}, 60);
    require(w2.verified && w2.solutions_found == 0, "(1,-2)/60 witness has solutions");
    require(Rat(static_cast<unsigned long>(w2.x.size())) >= Rat(60) * w2.density_bound - 1,
            "(1,-2)/60 witness below the density floor");

    // strong-condition matrices keep their trivial solutions in any subset
    IntMatrix strong({{Int(1), Int(1), Int(-2)}});
    SearchBudget budget;
    for (auto [g, eps] : std::vector<std::pair<GroupSpec, Rat>>{
             {GroupSpec({7}), Rat(2, 7)}, {GroupSpec({9}), Rat(1, 3)}, {GroupSpec({8}), Rat(1, 2)}}) {
        auto rep = min_solutions_dense_subsets(strong, g, eps, budget);
        require(rep.min_count >= Int(static_cast<unsigned long>(rep.witness.size())),
                "dense-subset minimum fell below |X| on " + g.to_string());
    }
}

// ---------------------------------------------------------------------------
// 10. induced subgroup coloring matches the element coloring on skeletons
// ---------------------------------------------------------------------------
void criterion_coloring_coherence() {
    auto instances = sampled_skeleton_instances(100);
    Rng rng(0xACCE5510);
    for (const auto& [a, basis] : instances) {
        (void)a;
        auto f = f_set(basis);
        for (int trial = 0; trial < 20; ++trial) {
            Coloring chi = coloring_random(basis.ambient, 1 + rng.below(4), rng.next());
            auto lifted = lift_coloring(chi);
            for (auto z : f.elements)
                require(lifted.color_of_cyclic(z) == chi.colors[z],
                        "induced coloring disagrees with the element coloring on F");
        }
    }
}

struct Criterion {
    int id;
    const char* name;
    std::function<void()> run;
};

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "counting oracle equivalence (200 randomized instances)", criterion_oracle_equivalence},
        {2, "Yeh formula vs exhaustive subgroup enumeration (orders <= 256, p in {2,3})",
         criterion_yeh},
        {3, "Gaussian coefficient identity and (4 choose 2)_2 = 35", criterion_gaussian},
        {4, "subgroup-count inequalities (exponents {2,3,4,6}, orders <= 256)",
         criterion_subgroup_bounds},
        {5, "skeleton solver on 100 randomized certified systems", criterion_skeleton},
        {6, "d_k reduction with exhaustive solution-set inclusion", criterion_reduction},
        {7, "fixture6 totals, monochromatic counts and certificates", criterion_fixture},
        {8, "exhaustive coloring minima for the schur equation (Z_2..Z_11)",
         criterion_extremal_table},
        {9, "density counterexamples and dense-subset floors", criterion_density},
        {10, "element/subgroup coloring coherence on skeletons", criterion_coloring_coherence},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string message;
        bool ok = true;
        try {
            c.run();
        } catch (const std::exception& e) {
            ok = false;
            message = e.what();
        }
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(1);
        line << (ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " (" << secs << "s)";
        if (!ok) line << "\n       " << message;
        std::cout << line.str() << std::endl;
        if (!ok) ++failures;
    }
    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed: " +
                                                              std::to_string(failures))
              << std::endl;
    return failures;
}
