#include <doctest.h>

#include "helpers.hpp"
#include "rado/errors.hpp"
#include "rado/extremal.hpp"
#include "rado/intmat.hpp"

using namespace rado;
using testutil::random_matrix;

namespace {

IntMatrix diag_block(const std::vector<Int>& d, std::size_t rows, std::size_t cols) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) m.at(i, i) = d[i];
    return m;
}

} // namespace

TEST_CASE("k-determinantal") {
    CHECK(k_determinantal(fixture6_matrix()) == 2);
    CHECK(k_determinantal(IntMatrix::identity(2)) == 1);
    CHECK(k_determinantal(testutil::schur_matrix()) == 1);
    CHECK(k_determinantal(IntMatrix({{Int(0), Int(0)}, {Int(0), Int(0)}})) == 0);
    CHECK(k_determinantal(IntMatrix({{Int(2), Int(4), Int(6)}})) == 2);
}

TEST_CASE("smith normal form on fixed inputs") {
    auto snf = smith_normal_form(IntMatrix({{Int(3), Int(0)}, {Int(0), Int(5)}}));
    CHECK(snf.d == std::vector<Int>{Int(1), Int(15)});

    snf = smith_normal_form(IntMatrix::identity(2));
    CHECK(snf.d == std::vector<Int>{Int(1), Int(1)});

    snf = smith_normal_form(IntMatrix({{Int(2), Int(4)}}));
    CHECK(snf.d == std::vector<Int>{Int(2)});
}

TEST_CASE("smith normal form properties on random matrices") {
    Rng rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t k = 1 + rng.below(3);
        std::size_t m = k + rng.below(5 - k + 1);
        if (m > 5) m = 5;
        IntMatrix a = random_matrix(rng, k, m, -9, 9);
        auto snf = smith_normal_form(a);

        CHECK(abs(determinant(snf.u)) == 1);
        CHECK(abs(determinant(snf.v)) == 1);
        IntMatrix uav = multiply(multiply(snf.u, a), snf.v);
        IntMatrix expect = diag_block(snf.d, k, m);
        CHECK(uav == expect);
        for (std::size_t i = 0; i + 1 < k; ++i) {
            if (snf.d[i] == 0) CHECK(snf.d[i + 1] == 0);
            else if (snf.d[i + 1] != 0) CHECK(snf.d[i + 1] % snf.d[i] == 0);
        }
        if (rank(a, Ring::rationals()) == k) {
            Int prod(1);
            for (const auto& d : snf.d) prod *= d;
            CHECK(prod == k_determinantal(a));
        } else {
            CHECK(k_determinantal(a) == 0);
        }
    }
}

TEST_CASE("deterministic output") {
    Rng rng(7);
    IntMatrix a = random_matrix(rng, 3, 4, -9, 9);
    auto s1 = smith_normal_form(a);
    auto s2 = smith_normal_form(a);
    CHECK(s1.d == s2.d);
    CHECK(s1.u == s2.u);
    CHECK(s1.v == s2.v);
}

TEST_CASE("rank") {
    CHECK(rank(IntMatrix::identity(3), Ring::rationals()) == 3);
    CHECK(rank(IntMatrix({{Int(0), Int(0), Int(0)}}), Ring::rationals()) == 0);
    CHECK(rank(fixture6_matrix(), Ring::integers()) == 3);
    CHECK_THROWS_AS(rank(IntMatrix::identity(2), Ring::mod(Int(4))), validation_error);
}

TEST_CASE("matrix shape invariants") {
    CHECK_THROWS_AS(IntMatrix(0, 3), validation_error);
    CHECK_THROWS_AS(IntMatrix(3, 2), validation_error);  // needs cols >= rows
    CHECK_THROWS_AS(IntMatrix({{Int(1)}, {Int(2), Int(3)}}), validation_error);
}

TEST_CASE("membership over the three rings") {
    // v = gens[0] gives the unit coefficient vector
    auto lam = module_membership({Int(2), Int(3)}, {{Int(2), Int(3)}, {Int(1), Int(1)}},
                                 Ring::integers());
    REQUIRE(lam.has_value());
    CHECK((*lam)[0] == 1);
    CHECK((*lam)[1] == 0);

    // 1 is not in <2> mod 4
    CHECK_FALSE(module_membership({Int(1)}, {{Int(2)}}, Ring::mod(Int(4))).has_value());
    // ... but 2 is
    auto l2 = module_membership({Int(2)}, {{Int(2)}}, Ring::mod(Int(4)));
    REQUIRE(l2.has_value());

    // 3 = (3/2) * 2 over Q, no integer solution
    auto lq = module_membership({Int(3)}, {{Int(2)}}, Ring::rationals());
    REQUIRE(lq.has_value());
    CHECK((*lq)[0] == Rat(3, 2));
    CHECK_FALSE(module_membership({Int(3)}, {{Int(2)}}, Ring::integers()).has_value());
}

TEST_CASE("membership certificates re-verify and match span enumeration mod n") {
    Rng rng(99);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t k = 1 + rng.below(2);
        const std::size_t g = 1 + rng.below(3);
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng.below(8));
        std::vector<std::vector<Int>> gens(g, std::vector<Int>(k));
        for (auto& gv : gens)
            for (auto& x : gv) x = Int(static_cast<long>(rng.below(static_cast<std::uint64_t>(n))));
        std::vector<Int> v(k);
        for (auto& x : v) x = Int(static_cast<long>(rng.below(static_cast<std::uint64_t>(n))));

        Ring ring = Ring::mod(Int(n));
        auto lam = module_membership(v, gens, ring);
        if (lam) CHECK(verify_membership(v, gens, ring, *lam));

        // exhaustive span check
        bool in_span = false;
        std::vector<std::int64_t> coef(g, 0);
        while (!in_span) {
            bool all_match = true;
            for (std::size_t i = 0; i < k && all_match; ++i) {
                Int acc(0);
                for (std::size_t j = 0; j < g; ++j) acc += Int(coef[j]) * gens[j][i];
                all_match = int_mod(acc - v[i], Int(n)) == 0;
            }
            if (all_match) in_span = true;
            std::size_t d = g;
            bool done = true;
            while (d-- > 0) {
                if (++coef[d] < n) {
                    done = false;
                    break;
                }
                coef[d] = 0;
            }
            if (done) break;
        }
        CHECK(lam.has_value() == in_span);
    }
}

TEST_CASE("membership decisions are stable under generator permutation") {
    Rng rng(123);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t k = 1 + rng.below(2);
        const std::size_t g = 2 + rng.below(2);
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng.below(10));
        std::vector<std::vector<Int>> gens(g, std::vector<Int>(k));
        for (auto& gv : gens)
            for (auto& x : gv) x = Int(static_cast<long>(rng.below(static_cast<std::uint64_t>(n))));
        std::vector<Int> v(k);
        for (auto& x : v) x = Int(static_cast<long>(rng.below(static_cast<std::uint64_t>(n))));

        auto perm = gens;
        std::reverse(perm.begin(), perm.end());
        Ring ring = Ring::mod(Int(n));
        CHECK(module_membership(v, gens, ring).has_value() ==
              module_membership(v, perm, ring).has_value());
    }
}

TEST_CASE("integer membership with several generators") {
    Rng rng(55);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t k = 1 + rng.below(2);
        const std::size_t g = 1 + rng.below(3);
        std::vector<std::vector<Int>> gens(g, std::vector<Int>(k));
        for (auto& gv : gens)
            for (auto& x : gv) x = Int(-3 + static_cast<long>(rng.below(7)));
        // build v as a known combination, then membership must succeed
        std::vector<Int> v(k, 0);
        for (std::size_t j = 0; j < g; ++j) {
            long c = -2 + static_cast<long>(rng.below(5));
            for (std::size_t i = 0; i < k; ++i) v[i] += Int(c) * gens[j][i];
        }
        auto lam = module_membership(v, gens, Ring::integers());
        REQUIRE(lam.has_value());
        CHECK(verify_membership(v, gens, Ring::integers(), *lam));
    }
}
