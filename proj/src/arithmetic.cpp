#include "nilcount/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nilcount/primes.hpp"

namespace nilcount {

SpfTable::SpfTable(u64 limit, u64 memory_budget_bytes) : limit_(limit) {
    if (limit < 2)
        throw std::invalid_argument("build_spf: limit must be >= 2");
    if (limit >= (1ull << 32))
        throw resource_error("build_spf: limit must be < 2^32");
    if ((limit + 1) * sizeof(u32) > memory_budget_bytes)
        throw resource_error("build_spf: table exceeds memory budget");
    spf_.assign(limit + 1, 0);
    // Linear sieve: each composite is crossed off once by its smallest prime.
    std::vector<u32> primes;
    for (u64 i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<u32>(i);
            primes.push_back(static_cast<u32>(i));
        }
        for (u32 p : primes) {
            if (p > spf_[i] || p * static_cast<u64>(i) > limit) break;
            spf_[p * i] = p;
        }
    }
}

u32 SpfTable::spf(u64 n) const {
    if (n < 2 || n > limit_)
        throw std::invalid_argument("spf: n out of table range");
    return spf_[n];
}

bool Factorization::valid() const {
    u64 prod = 1;
    u64 prev = 0;
    for (auto [p, a] : factors) {
        if (p <= prev || a == 0 || !is_prime_u64(p)) return false;
        prev = p;
        for (u32 i = 0; i < a; ++i) {
            if (prod > n / p) return false;
            prod *= p;
        }
    }
    return prod == n;
}

Factorization factorize(u64 n, const SpfTable& table) {
    if (n == 0)
        throw std::invalid_argument("factorize: n must be >= 1");
    if (n > table.limit())
        throw std::invalid_argument("factorize: n exceeds table limit");
    Factorization f;
    f.n = n;
    while (n > 1) {
        u64 p = table.spf(n);
        u32 a = 0;
        while (n % p == 0) { n /= p; ++a; }
        f.factors.emplace_back(p, a);
    }
    return f;
}

Factorization factorize_direct(u64 n) {
    if (n == 0)
        throw std::invalid_argument("factorize_direct: n must be >= 1");
    Factorization f;
    f.n = n;
    u64 m = n;
    auto extract = [&](u64 p) {
        u32 a = 0;
        while (m % p == 0) { m /= p; ++a; }
        if (a) f.factors.emplace_back(p, a);
    };
    extract(2);
    extract(3);
    extract(5);
    // Wheel mod 30 over remaining candidates; one primality test per
    // extracted factor lets us stop as soon as the cofactor is prime.
    static constexpr u32 wheel[] = {4, 2, 4, 2, 4, 6, 2, 6};
    u64 d = 7;
    int wi = 0;
    while (m > 1) {
        if (is_prime_u64(m)) {
            f.factors.emplace_back(m, 1u);
            break;
        }
        while (d <= m / d && m % d != 0) {
            d += wheel[wi];
            wi = (wi + 1) & 7;
        }
        if (d > m / d) { // composite m always has a factor <= sqrt(m)
            f.factors.emplace_back(m, 1u);
            break;
        }
        extract(d);
    }
    std::sort(f.factors.begin(), f.factors.end());
    return f;
}

u64 euler_phi(const Factorization& f) {
    u64 r = 1;
    for (auto [p, a] : f.factors) {
        for (u32 i = 1; i < a; ++i) r *= p;
        r *= p - 1;
    }
    return r;
}

mpz_class psi_exact(const Factorization& f) {
    mpz_class r = 1;
    for (auto [p, a] : f.factors) {
        mpz_class pw = 1;
        for (u32 i = 1; i <= a; ++i) {
            pw *= p;
            r *= pw - 1;
        }
    }
    return r;
}

namespace {

// true iff no ordered pair (p, q) of distinct primes of n has q | p^i - 1 for
// some i <= ord_p(n). Exponent-1 pairs with p < q need no modmul: p mod q = p.
bool pairwise_coprime_ok(std::span<const PrimePower> factors) {
    size_t k = factors.size();
    for (size_t j = 0; j < k; ++j) {
        u64 q = factors[j].first;
        for (size_t i = 0; i < k; ++i) {
            if (i == j) continue;
            u64 p = factors[i].first;
            u32 a = factors[i].second;
            if (a == 1 && p < q) continue;
            u64 r = p % q;
            if (r == 1) return false;
            for (u32 e = 2; e <= a; ++e) {
                r = mulmod(r, p % q, q);
                if (r == 1) return false;
            }
        }
    }
    return true;
}

} // namespace

bool psi_coprime(const Factorization& f) {
    return pairwise_coprime_ok(f.factors);
}

NumberClass classify_prime_powers(std::span<const PrimePower> factors) {
    u32 max_exp = 0;
    for (auto [p, a] : factors) max_exp = std::max(max_exp, a);
    if (!pairwise_coprime_ok(factors)) return NumberClass::NotNilpotent;
    if (max_exp <= 1) return NumberClass::Cyclic;
    if (max_exp == 2) return NumberClass::StrictlyAbelian;
    return NumberClass::StrictlyNilpotent;
}

NumberClass classify(const Factorization& f) {
    return classify_prime_powers(f.factors);
}

const char* to_string(NumberClass c) {
    switch (c) {
        case NumberClass::Cyclic: return "cyclic";
        case NumberClass::StrictlyAbelian: return "strictly_abelian";
        case NumberClass::StrictlyNilpotent: return "strictly_nilpotent";
        case NumberClass::NotNilpotent: return "not_nilpotent";
    }
    return "?";
}

} // namespace nilcount
