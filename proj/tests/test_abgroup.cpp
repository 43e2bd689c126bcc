#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "rado/abgroup.hpp"
#include "rado/errors.hpp"
#include "rado/smallgroup.hpp"

using namespace rado;

TEST_CASE("group normalization") {
    CHECK(GroupSpec::parse("Z4xZ2").factors() == std::vector<std::int64_t>{2, 4});
    CHECK(GroupSpec({6, 4}).factors() == std::vector<std::int64_t>{2, 12});
    CHECK(GroupSpec({1, 5}).factors() == std::vector<std::int64_t>{5});
    CHECK(GroupSpec({2, 2, 6}).factors() == std::vector<std::int64_t>{2, 2, 6});
    CHECK(GroupSpec::parse("Z12").exponent() == 12);
    CHECK(GroupSpec({4, 6}).order() == 24);
    CHECK(GroupSpec{}.is_trivial());
    CHECK_THROWS_AS(GroupSpec({0}), validation_error);
    CHECK_THROWS_AS(GroupSpec::parse("4x2"), validation_error);
}

TEST_CASE("element rank is the lex order and unrank inverts it") {
    GroupSpec g({2, 4});
    SmallGroup sg(g);
    for (std::uint64_t r = 0; r < sg.size(); ++r) {
        GroupElement e = element_unrank(g, r);
        CHECK(element_rank(e) == r);
        CHECK(sg.rank(e.coords) == r);
    }
    CHECK_THROWS_AS(element_unrank(g, 8), validation_error);
}

TEST_CASE("element order") {
    GroupSpec z4({4});
    CHECK(element_order(make_element(z4, {0})) == 1);
    CHECK(element_order(make_element(z4, {2})) == 2);
    GroupSpec g = GroupSpec::parse("Z4xZ2");  // normalizes to Z2xZ4
    CHECK(element_order(make_element(g, {1, 1})) == 4);

    // brute-force doubling oracle
    SmallGroup sg(g);
    for (std::uint64_t r = 0; r < sg.size(); ++r) {
        std::uint64_t acc = r;
        std::int64_t steps = 1;
        while (acc != 0) {
            acc = sg.add(acc, r);
            ++steps;
        }
        CHECK(element_order(element_unrank(g, r)) == steps);
    }
}

TEST_CASE("gaussian binomial") {
    CHECK(gaussian_binomial(5, 0, Int(3)) == 1);
    CHECK(gaussian_binomial(2, 1, Int(2)) == 3);
    CHECK(gaussian_binomial(4, 2, Int(2)) == 35);
    CHECK_THROWS_AS(gaussian_binomial(2, 3, Int(2)), validation_error);

    // subspace-counting meaning, against the subgroup enumeration oracle
    CHECK(Int(static_cast<unsigned long>(enumerate_subgroups(GroupSpec({2, 2}), 2, 1).size())) ==
          gaussian_binomial(2, 1, Int(2)));
    CHECK(Int(static_cast<unsigned long>(enumerate_subgroups(GroupSpec({2, 2, 2, 2}), 2, 2).size())) ==
          gaussian_binomial(4, 2, Int(2)));
}

TEST_CASE("gaussian identity from the subspace double count") {
    for (Int q : {Int(2), Int(3), Int(4), Int(5)})
        for (unsigned n = 1; n <= 8; ++n)
            for (unsigned m = 1; m <= n; ++m) {
                Rat lhs = Rat(gaussian_binomial(n, m, q)) *
                          Rat(int_pow(q, m) - 1, int_pow(q, n) - 1);
                lhs.canonicalize();
                CHECK(lhs == Rat(gaussian_binomial(n - 1, m - 1, q)));
            }
}

TEST_CASE("yeh count on pinned examples") {
    for (std::int64_t p : {2, 3, 5}) {
        CHECK(yeh_count(PGroupType(p, {1, 1}), PGroupType(p, {1})) == p + 1);
        PGroupType host(p, {1, 2, 2});
        CHECK(yeh_count(host, host) == 1);
    }
    CHECK(yeh_count(PGroupType(2, {1, 2}), PGroupType(2, {1})) == 3);
    CHECK(yeh_count(PGroupType(2, {1, 2}), PGroupType(2, {2, 2})) == 0);  // not embeddable
    CHECK(yeh_count(PGroupType(2, {1, 1, 1}), PGroupType(2, {2})) == 0);
    CHECK_THROWS_AS(yeh_count(PGroupType(2, {1}), PGroupType(3, {1})), validation_error);
}

TEST_CASE("yeh count equals enumeration on p-groups of order <= 64") {
    for (std::int64_t p : {2, 3}) {
        const int max_total = p == 2 ? 6 : 4;
        for (const auto& host : testutil::p_group_types(p, max_total)) {
            GroupSpec g = host.to_group();
            const int kmax = host.exponents.back();
            for (int a = 1; a <= kmax; ++a) {
                Int d = int_pow(Int(p), static_cast<unsigned long>(a));
                for (unsigned m = 1; m <= host.eta() + 1; ++m) {
                    Int formula = yeh_count(host, PGroupType(p, std::vector<int>(m, a)));
                    auto listed = enumerate_subgroups(g, d.get_si(), m);
                    CHECK(formula == Int(static_cast<unsigned long>(listed.size())));
                }
            }
        }
    }
}

TEST_CASE("count_subgroups_iso") {
    CHECK(count_subgroups_iso(GroupSpec({6}), 6, 1) == 1);
    CHECK(count_subgroups_iso(GroupSpec({2, 2}), 2, 1) == 3);
    CHECK(count_subgroups_iso(GroupSpec({2, 2}), 2, 3) == 0);
    CHECK(count_subgroups_iso(GroupSpec({2, 4}), 4, 1) == 2);  // <(0,1)>, <(1,1)>
    CHECK(count_subgroups_iso(GroupSpec({4}), 3, 1) == 0);     // 3 does not divide 4

    // composite d: per-prime product, against the oracle
    GroupSpec g66({6, 6});
    CHECK(count_subgroups_iso(g66, 6, 1) ==
          Int(static_cast<unsigned long>(enumerate_subgroups(g66, 6, 1).size())));
    GroupSpec g2_12({2, 12});
    for (std::int64_t d : {2, 3, 4, 6, 12})
        CHECK(count_subgroups_iso(g2_12, d, 1) ==
              Int(static_cast<unsigned long>(enumerate_subgroups(g2_12, d, 1).size())));
}

TEST_CASE("enumerate_subgroups basics") {
    auto z4 = enumerate_subgroups(GroupSpec({4}), 2, 1);
    REQUIRE(z4.size() == 1);
    CHECK(z4[0] == std::vector<std::uint64_t>{0, 2});

    auto z22 = enumerate_subgroups(GroupSpec({2, 2}), 2, 1);
    CHECK(z22.size() == 3);

    CHECK(enumerate_subgroups(GroupSpec({2, 2}), 4, 1).empty());
    CHECK_THROWS_AS(enumerate_subgroups(GroupSpec({2, 2, 2, 2, 2, 2, 2, 2, 2, 2}), 2, 1, 512),
                    capacity_error);
}

TEST_CASE("quotient type drops the largest factor") {
    CHECK(quotient_type(GroupSpec({2, 4})) == GroupSpec({2}));
    CHECK(quotient_type(GroupSpec({4})) == GroupSpec{});
    CHECK(quotient_type(GroupSpec({2, 2, 6})) == GroupSpec({2, 2}));
}

TEST_CASE("subgroups through a fixed full-order element match the quotient count") {
    // the count of Z_n^M subgroups containing a fixed a of order n equals
    // the count of Z_n^{M-1} subgroups of G / <a>
    for (const auto& g : {GroupSpec({4, 4}), GroupSpec({2, 4, 4}), GroupSpec({2, 2, 2}),
                          GroupSpec({6, 6})}) {
        const std::int64_t n = g.exponent();
        const unsigned m = 2;
        SmallGroup sg(g);
        auto subs = enumerate_subgroups(g, n, m);
        Int quotient_count = count_subgroups_iso(quotient_type(g), n, m - 1);
        for (std::uint64_t a = 1; a < sg.size(); ++a) {
            if (sg.order(a) != n) continue;
            unsigned long through = 0;
            for (const auto& h : subs)
                if (std::binary_search(h.begin(), h.end(), a)) ++through;
            CHECK(Int(through) == quotient_count);
        }
    }
}

namespace {

// test-only oracle: every subgroup of g, via closure BFS with bitset dedup
std::vector<std::vector<std::uint64_t>> all_subgroups(const GroupSpec& g) {
    SmallGroup sg(g, 512);
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<std::vector<std::uint64_t>> queue{{0}};
    seen.insert({0});
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto sub = queue[head];
        for (std::uint64_t x = 1; x < sg.size(); ++x) {
            if (std::binary_search(sub.begin(), sub.end(), x)) continue;
            auto gens = sub;
            gens.push_back(x);
            auto bigger = sg.span(gens);
            if (seen.insert(bigger).second) queue.push_back(std::move(bigger));
        }
    }
    return queue;
}

// invariant factors of a subgroup given by its element ranks, derived from
// the d-torsion profile (#{h : d h = 0} determines the type)
std::vector<int> p_type_of(const GroupSpec& g, const std::vector<std::uint64_t>& sub,
                           std::int64_t p) {
    SmallGroup sg(g);
    std::vector<int> exps;
    // count elements of order dividing p^a for a = 0, 1, ...
    std::vector<std::uint64_t> torsion{1};
    std::int64_t d = p;
    while (true) {
        std::uint64_t c = 0;
        for (auto e : sub)
            if (sg.scalar_mul(d, e) == 0) ++c;
        torsion.push_back(c);
        if (c == sub.size()) break;
        d *= p;
    }
    // lambda'_a = log_p(torsion[a] / torsion[a-1]) counts factors with exponent >= a
    std::vector<int> lambda_conj;
    for (std::size_t a = 1; a < torsion.size(); ++a) {
        std::uint64_t q = torsion[a] / torsion[a - 1];
        int log = 0;
        while (q > 1) {
            q /= static_cast<std::uint64_t>(p);
            ++log;
        }
        lambda_conj.push_back(log);
    }
    for (std::size_t a = 0; a < lambda_conj.size(); ++a) {
        int next = a + 1 < lambda_conj.size() ? lambda_conj[a + 1] : 0;
        for (int i = 0; i < lambda_conj[a] - next; ++i) exps.push_back(static_cast<int>(a) + 1);
    }
    std::sort(exps.begin(), exps.end());
    return exps;
}

} // namespace

TEST_CASE("yeh count on mixed target types matches the all-subgroups oracle") {
    struct Case {
        GroupSpec g;
        std::int64_t p;
    };
    for (const auto& c : {Case{GroupSpec({2, 4}), 2}, Case{GroupSpec({4, 4}), 2},
                          Case{GroupSpec({2, 2, 4}), 2}, Case{GroupSpec({2, 8}), 2},
                          Case{GroupSpec({3, 9}), 3}}) {
        auto host_types = primary_decomposition(c.g);
        const PGroupType& host = host_types.at(c.p);
        std::map<std::vector<int>, unsigned long> by_type;
        for (const auto& sub : all_subgroups(c.g))
            if (sub.size() > 1) ++by_type[p_type_of(c.g, sub, c.p)];
        for (const auto& [type, count] : by_type)
            CHECK(yeh_count(host, PGroupType(c.p, type)) == Int(count));
        // and a type that does not occur at all
        std::vector<int> too_big(host.eta() + 1, 1);
        CHECK(yeh_count(host, PGroupType(c.p, too_big)) == 0);
    }
}

TEST_CASE("pgroup type validation") {
    CHECK_THROWS_AS(PGroupType(4, {1}), validation_error);
    CHECK_THROWS_AS(PGroupType(2, {2, 1}), validation_error);
    CHECK_THROWS_AS(PGroupType(2, {0}), validation_error);
    CHECK(PGroupType(2, {1, 2}).to_group() == GroupSpec({2, 4}));
}
