#include "nilcount/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace nilcount {

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((u128)a * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = __builtin_ctzll(d);
    d >>= s;
    // Sufficient witness set for every n < 2^64 (Sinclair / Jaeschke style).
    for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        u64 x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u32> primes_up_to(u64 limit) {
    if (limit >= (1ull << 32))
        throw std::invalid_argument("primes_up_to: limit must be < 2^32");
    std::vector<u32> primes;
    if (limit < 2) return primes;
    // Odd-only sieve of Eratosthenes.
    u64 half = (limit - 1) / 2; // index i represents 2i+1, i >= 1
    std::vector<u8> comp(half + 1, 0);
    primes.push_back(2);
    for (u64 i = 1; i <= half; ++i) {
        if (comp[i]) continue;
        u64 p = 2 * i + 1;
        primes.push_back(static_cast<u32>(p));
        if (p * p <= limit) {
            for (u64 j = (p * p - 1) / 2; j <= half; j += p) comp[j] = 1;
        }
    }
    return primes;
}

void for_primes_in(u64 lo, u64 hi, const std::function<void(u64)>& visit) {
    if (hi < 2 || hi <= lo) return;
    if (lo < 2) lo = 1;
    if (lo < 2 && hi >= 2) visit(2);

    u64 root = static_cast<u64>(std::sqrt(static_cast<double>(hi)));
    while (root * root > hi) --root;
    while ((root + 1) * (root + 1) <= hi) ++root;
    std::vector<u32> base = primes_up_to(std::max<u64>(root, 3));

    // Odd-only segmented sieve; one bool per odd number, 1<<21 odds per block.
    constexpr u64 kBlockOdds = 1ull << 21;
    std::vector<u8> seg(kBlockOdds);
    u64 start = std::max<u64>(lo + 1, 3);
    if (start % 2 == 0) ++start;
    for (u64 blo = start; blo <= hi; blo += 2 * kBlockOdds) {
        u64 bhi = std::min(hi, blo + 2 * kBlockOdds - 2);
        u64 n_odds = (bhi - blo) / 2 + 1;
        std::memset(seg.data(), 0, n_odds);
        for (u32 p : base) {
            if (p == 2) continue;
            u64 pp = static_cast<u64>(p) * p;
            if (pp > bhi) break;
            u64 first = std::max<u64>(pp, ((blo + p - 1) / p) * p);
            if (first % 2 == 0) first += p;
            for (u64 m = first; m <= bhi; m += 2 * static_cast<u64>(p))
                seg[(m - blo) / 2] = 1;
        }
        for (u64 i = 0; i < n_odds; ++i)
            if (!seg[i]) visit(blo + 2 * i);
    }
}

void for_primes_up_to(u64 limit, const std::function<void(u64)>& visit) {
    for_primes_in(1, limit, visit);
}

} // namespace nilcount
