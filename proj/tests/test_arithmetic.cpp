#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "nilcount/arithmetic.hpp"
#include "nilcount/primes.hpp"
#include "oracle.hpp"

using namespace nilcount;

TEST_CASE("deterministic primality") {
    CHECK(!is_prime_u64(0));
    CHECK(!is_prime_u64(1));
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(97));
    CHECK(!is_prime_u64(91));
    CHECK(!is_prime_u64(561));        // Carmichael
    CHECK(!is_prime_u64(3215031751)); // strong pseudoprime to 2,3,5,7
    CHECK(is_prime_u64((1ull << 61) - 1));
    CHECK(!is_prime_u64((1ull << 62) - 1));
    CHECK(is_prime_u64(18446744073709551557ull)); // largest 64-bit prime

    // against a sieve
    auto primes = primes_up_to(10000);
    size_t idx = 0;
    for (u64 n = 2; n <= 10000; ++n) {
        bool p = idx < primes.size() && primes[idx] == n;
        if (p) ++idx;
        REQUIRE(is_prime_u64(n) == p);
    }
}

TEST_CASE("spf table") {
    SpfTable t = build_spf(100);
    CHECK(t.spf(12) == 2);
    CHECK(t.spf(91) == 7);
    CHECK(t.spf(97) == 97);
    CHECK(t.spf(2) == 2);
    CHECK(t.spf(99) == 3);
    CHECK_THROWS_AS(build_spf(1), std::invalid_argument);
    CHECK_THROWS_AS(build_spf(1ull << 40, 1ull << 20), resource_error);
    CHECK_THROWS_AS(t.spf(101), std::invalid_argument);

    SpfTable big = build_spf(100000);
    for (u64 n = 2; n <= 100000; ++n) {
        u32 p = big.spf(n);
        REQUIRE(n % p == 0);
        REQUIRE(is_prime_u64(p));
        // nothing smaller divides
        for (u32 q = 2; q < p && q * q <= n; ++q) REQUIRE(n % q != 0);
        if (is_prime_u64(n)) REQUIRE(p == n);
    }
}

TEST_CASE("factorize") {
    SpfTable t = build_spf(10000);
    CHECK(factorize(1, t).factors.empty());
    CHECK(factorize(12, t).factors == std::vector<PrimePower>{{2, 2}, {3, 1}});
    CHECK(factorize(9797, t).factors == std::vector<PrimePower>{{97, 1}, {101, 1}});
    CHECK_THROWS_AS(factorize(0, t), std::invalid_argument);
    CHECK_THROWS_AS(factorize(10001, t), std::invalid_argument);
    for (u64 n = 1; n <= 5000; ++n) REQUIRE(factorize(n, t).valid());
}

TEST_CASE("factorize_direct") {
    CHECK(factorize_direct(1).factors.empty());
    CHECK(factorize_direct(2).factors == std::vector<PrimePower>{{2, 1}});
    CHECK(factorize_direct(720).factors == std::vector<PrimePower>{{2, 4}, {3, 2}, {5, 1}});
    CHECK(factorize_direct((1ull << 61) - 1).factors ==
          std::vector<PrimePower>{{(1ull << 61) - 1, 1}});
    // semiprime with two large factors
    CHECK(factorize_direct(1000003ull * 1000033).factors ==
          std::vector<PrimePower>{{1000003, 1}, {1000033, 1}});
    SpfTable t = build_spf(20000);
    for (u64 n = 1; n <= 20000; ++n)
        REQUIRE(factorize_direct(n).factors == factorize(n, t).factors);
}

TEST_CASE("euler_phi and psi_exact") {
    SpfTable t = build_spf(200000);
    CHECK(euler_phi(factorize(1, t)) == 1);
    CHECK(euler_phi(factorize(97, t)) == 96);
    CHECK(euler_phi(factorize(12, t)) == 4);
    CHECK(psi_exact(factorize(1, t)) == 1);
    CHECK(psi_exact(factorize(4, t)) == 3);
    CHECK(psi_exact(factorize(12, t)) == 6);
    CHECK(psi_exact(factorize(8, t)) == 21);

    for (u64 n = 1; n <= 2000; ++n) {
        auto f = factorize(n, t);
        oracle::Factors of = oracle::trial_factor(n);
        REQUIRE(mpz_class(oracle::phi_exact(of)) == mpz_class(static_cast<unsigned long>(euler_phi(f))));
        REQUIRE(oracle::psi_exact(of) == psi_exact(f));
    }

    // psi(p) = phi(p) = p - 1 on primes
    for (u64 p : {2ull, 3ull, 101ull, 65537ull})
        CHECK(psi_exact(factorize(p, t)) == p - 1);
}

TEST_CASE("psi_coprime matches gcd(n, psi(n)) == 1") {
    SpfTable t = build_spf(100000);
    CHECK(psi_coprime(factorize(8, t)));
    CHECK(!psi_coprime(factorize(6, t)));
    CHECK(psi_coprime(factorize(45, t)));
    for (u64 n = 1; n <= 100000; ++n) {
        auto f = factorize(n, t);
        mpz_class g;
        mpz_class nz(static_cast<unsigned long>(n));
        mpz_class psi = psi_exact(f);
        mpz_gcd(g.get_mpz_t(), nz.get_mpz_t(), psi.get_mpz_t());
        REQUIRE(psi_coprime(f) == (g == 1));
    }
}

TEST_CASE("classify examples") {
    SpfTable t = build_spf(1000);
    CHECK(classify(factorize(1, t)) == NumberClass::Cyclic);
    CHECK(classify(factorize(4, t)) == NumberClass::StrictlyAbelian);
    CHECK(classify(factorize(8, t)) == NumberClass::StrictlyNilpotent);
    CHECK(classify(factorize(15, t)) == NumberClass::Cyclic);
    CHECK(classify(factorize(6, t)) == NumberClass::NotNilpotent);
    CHECK(classify(factorize(45, t)) == NumberClass::StrictlyAbelian);
    CHECK(classify(factorize(99, t)) == NumberClass::StrictlyAbelian);
}

TEST_CASE("classify agrees with the exact-psi oracle up to 1e5") {
    SpfTable t = build_spf(100000);
    for (u64 n = 1; n <= 100000; ++n) {
        auto c = classify(factorize(n, t));
        auto o = oracle::classify(n);
        REQUIRE(static_cast<int>(c) == static_cast<int>(o));
    }
}

TEST_CASE("cyclic test equals gcd(n, phi(n)) == 1") {
    SpfTable t = build_spf(100000);
    for (u64 n = 1; n <= 100000; ++n) {
        auto f = factorize(n, t);
        u64 g = std::gcd(n, euler_phi(f));
        REQUIRE((classify(f) == NumberClass::Cyclic) == (g == 1));
    }
}

TEST_CASE("prime powers classify by exponent") {
    SpfTable t = build_spf(1 << 20);
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 31ull, 97ull}) {
        u64 pw = p;
        for (u32 a = 1; pw <= (1ull << 20); ++a, pw *= p) {
            auto c = classify(factorize(pw, t));
            if (a == 1) REQUIRE(c == NumberClass::Cyclic);
            else if (a == 2) REQUIRE(c == NumberClass::StrictlyAbelian);
            else REQUIRE(c == NumberClass::StrictlyNilpotent);
        }
    }
}

TEST_CASE("implication chain") {
    // Cyclic => abelian criteria hold; abelian => nilpotent criterion holds;
    // NotNilpotent => psi_coprime fails.
    SpfTable t = build_spf(50000);
    for (u64 n = 1; n <= 50000; ++n) {
        auto f = factorize(n, t);
        auto c = classify(f);
        bool cubefree = true, squarefree = true;
        for (auto [p, a] : f.factors) {
            if (a >= 2) squarefree = false;
            if (a >= 3) cubefree = false;
        }
        bool nilpotent_test = psi_coprime(f);
        bool abelian_test = cubefree && nilpotent_test;
        switch (c) {
            case NumberClass::Cyclic:
                REQUIRE(squarefree);
                REQUIRE(abelian_test);
                REQUIRE(nilpotent_test);
                break;
            case NumberClass::StrictlyAbelian:
                REQUIRE(abelian_test);
                REQUIRE(!squarefree);
                break;
            case NumberClass::StrictlyNilpotent:
                REQUIRE(nilpotent_test);
                REQUIRE(!cubefree);
                break;
            case NumberClass::NotNilpotent:
                REQUIRE(!nilpotent_test);
                break;
        }
    }
}
