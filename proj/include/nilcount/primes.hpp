#pragma once

#include <vector>
#include <functional>

#include "nilcount/int_types.hpp"

namespace nilcount {

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(u64 n);

// All primes <= limit, limit < 2^32.
std::vector<u32> primes_up_to(u64 limit);

// Visit primes in [2, limit] in increasing order via a segmented sieve;
// memory stays bounded regardless of limit.
void for_primes_up_to(u64 limit, const std::function<void(u64)>& visit);

// Visit primes in (lo, hi].
void for_primes_in(u64 lo, u64 hi, const std::function<void(u64)>& visit);

} // namespace nilcount
