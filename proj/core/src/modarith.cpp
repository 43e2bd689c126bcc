#include "rado/modarith.hpp"

#include <stdexcept>

#include "rado/errors.hpp"

namespace rado {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // this witness set is deterministic below 3.3 * 10^24
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    if (n < 1) throw validation_error("prime_factors expects a positive integer");
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<std::uint64_t> ntt_primes(std::int64_t n, std::size_t count) {
    if (n < 1) throw validation_error("ntt_primes expects n >= 1");
    const std::uint64_t lo = 1ULL << 61;
    std::uint64_t un = static_cast<std::uint64_t>(n);
    std::uint64_t q = lo - (lo % un) + 1;  // smallest value > 2^61 - n with q ≡ 1 (mod n)
    while (q <= lo) q += un;
    std::vector<std::uint64_t> out;
    while (out.size() < count) {
        if (is_prime_u64(q)) out.push_back(q);
        q += un;
        if (q < lo) throw std::logic_error("ntt_primes: search wrapped around");
    }
    return out;
}

std::uint64_t root_of_unity(std::uint64_t q, std::int64_t n) {
    if (n <= 0 || (q - 1) % static_cast<std::uint64_t>(n) != 0)
        throw validation_error("root_of_unity requires n | q - 1");
    if (!is_prime_u64(q)) throw validation_error("root_of_unity requires prime q");
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    auto primes = prime_factors(n);
    for (std::uint64_t g = 2; g < q; ++g) {
        std::uint64_t w = powmod_u64(g, (q - 1) / un, q);
        if (w == 1) continue;
        bool primitive = powmod_u64(w, un, q) == 1;
        for (auto p : primes) {
            if (!primitive) break;
            if (powmod_u64(w, un / static_cast<std::uint64_t>(p), q) == 1) primitive = false;
        }
        if (primitive) return w;
    }
    throw std::logic_error("root_of_unity: no generator candidate worked");
}

} // namespace rado
