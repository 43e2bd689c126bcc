#pragma once

#include <cstdint>
#include <vector>

namespace rado {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

std::vector<std::int64_t> prime_factors(std::int64_t n);  // distinct primes, ascending

/// The `count` smallest primes q > 2^61 with q ≡ 1 (mod n); each is
/// primality-checked, never assumed.
std::vector<std::uint64_t> ntt_primes(std::int64_t n, std::size_t count);

/// A verified primitive n-th root of unity mod prime q (requires n | q - 1):
/// w^n = 1 and w^{n/p} != 1 for every prime p | n.
std::uint64_t root_of_unity(std::uint64_t q, std::int64_t n);

} // namespace rado
