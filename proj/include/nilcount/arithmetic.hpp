#pragma once

#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "nilcount/int_types.hpp"

namespace nilcount {

// Smallest-prime-factor table for n in [2, limit].
class SpfTable {
public:
    // memory_budget_bytes guards the 4*limit allocation.
    explicit SpfTable(u64 limit, u64 memory_budget_bytes = 2ull << 30);
    u64 limit() const { return limit_; }
    u32 spf(u64 n) const; // n in [2, limit]
private:
    u64 limit_;
    std::vector<u32> spf_;
};

inline SpfTable build_spf(u64 limit, u64 memory_budget_bytes = 2ull << 30) {
    return SpfTable(limit, memory_budget_bytes);
}

using PrimePower = std::pair<u64, u32>; // (p, a)

struct Factorization {
    u64 n = 1;
    std::vector<PrimePower> factors; // strictly increasing p; empty iff n == 1
    bool valid() const;              // product check + deterministic primality
};

enum class NumberClass : u8 {
    Cyclic,
    StrictlyAbelian,
    StrictlyNilpotent,
    NotNilpotent,
};

const char* to_string(NumberClass c);

Factorization factorize(u64 n, const SpfTable& table);

// Trial division by sieved primes with a Miller-Rabin early exit; no table
// bound, usable for any 64-bit n (slow only for semiprimes of two ~32-bit
// primes).
Factorization factorize_direct(u64 n);

u64 euler_phi(const Factorization& f);

// psi(p^a) = (p^a - 1)(p^{a-1} - 1) ... (p - 1), multiplicative. Exceeds 64
// bits quickly, hence the unbounded result; for display and oracles only.
mpz_class psi_exact(const Factorization& f);

// gcd(n, psi(n)) == 1, decided without forming psi(n): q | psi(n) for a prime
// q | n iff p^i = 1 (mod q) for some other prime p | n with i <= ord_p(n).
bool psi_coprime(const Factorization& f);

NumberClass classify(const Factorization& f);

// Kernel shared with the census hot path: factors need not be sorted; the
// exponents must be the full multiplicities of n.
NumberClass classify_prime_powers(std::span<const PrimePower> factors);

} // namespace nilcount
