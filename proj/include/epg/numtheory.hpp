#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace epg {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// gcd/euler_phi require positive arguments.
u64 gcd(u64 a, u64 b);
u64 euler_phi(u64 n);

bool is_prime(u64 n);

// Prime factorization of n >= 1 as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<u64, int>> factorize(u64 n);

// Checked arithmetic: throws std::overflow_error instead of wrapping.
u64 checked_mul(u64 a, u64 b);
u64 checked_pow(u64 base, unsigned exp);
u128 checked_mul128(u128 a, u128 b);
u64 narrow_u64(u128 v);

}  // namespace epg
