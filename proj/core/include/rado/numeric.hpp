#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <vector>

namespace rado {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// g = gcd(a,b) together with x, y such that a*x + b*y = g.
inline Int int_gcdext(const Int& a, const Int& b, Int& x, Int& y) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Exact quotient; throws on non-divisibility instead of corrupting the result.
Int int_divexact(const Int& a, const Int& b);

/// Canonical residue in [0, n).
inline Int int_mod(const Int& a, const Int& n) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::string to_decimal(const Int& v);
std::string to_decimal(const Rat& v);  // "p/q" or "p" when q == 1
Int parse_int(const std::string& s);
Rat parse_rat(const std::string& s);   // accepts "p", "p/q", and plain decimals like "0.25"

/// Deterministic 64-bit generator (splitmix-seeded xoshiro-free; uses mt19937_64
/// with explicit rejection sampling so streams are identical across platforms).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        // splitmix64; stable and trivially portable
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) via rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % bound;
    }

    bool flip() { return (next() & 1) != 0; }

private:
    std::uint64_t state_;
};

} // namespace rado
