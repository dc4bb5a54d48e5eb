#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "nilcount/census.hpp"
#include "nilcount/csv.hpp"
#include "nilcount/primes.hpp"
#include "oracle.hpp"

using namespace nilcount;

namespace {

ClassCounts oracle_counts(u64 lo, u64 hi) {
    ClassCounts c;
    for (u64 n = lo; n <= hi; ++n) {
        switch (oracle::classify(n)) {
            case oracle::Class::Cyclic: ++c.cyclic; break;
            case oracle::Class::StrictlyAbelian: ++c.strictly_abelian; break;
            case oracle::Class::StrictlyNilpotent: ++c.strictly_nilpotent; break;
            case oracle::Class::NotNilpotent: ++c.not_nilpotent; break;
        }
        ++c.total;
    }
    return c;
}

std::vector<u32> base_for(u64 hi) {
    u64 r = 2;
    while ((r + 1) * (r + 1) <= hi) ++r;
    return primes_up_to(r);
}

} // namespace

TEST_CASE("count_segment basics") {
    auto base = base_for(100);
    ClassCounts one = count_segment({1, 1}, base);
    CHECK(one.cyclic == 1);
    CHECK(one.total == 1);

    ClassCounts two = count_segment({2, 2}, base);
    CHECK(two.cyclic == 1);
    CHECK(two.total == 1);

    ClassCounts hundred = count_segment({1, 100}, base);
    CHECK(hundred.strictly_abelian == 6);   // {4, 9, 25, 45, 49, 99}
    CHECK(hundred.strictly_nilpotent == 6); // {8, 16, 27, 32, 64, 81}
    CHECK(hundred.total == 100);
    CHECK(hundred == oracle_counts(1, 100));
}

TEST_CASE("count_segment matches oracle on awkward ranges") {
    for (auto [lo, hi] : std::vector<std::pair<u64, u64>>{
             {1, 1}, {2, 3}, {90, 121}, {1021, 1030}, {65525, 65545}, {99991, 100010}}) {
        auto base = base_for(hi);
        REQUIRE(count_segment({lo, hi}, base) == oracle_counts(lo, hi));
    }
}

TEST_CASE("merge is a checked commutative monoid") {
    auto base = base_for(100);
    ClassCounts a = count_segment({1, 50}, base);
    ClassCounts b = count_segment({51, 100}, base);
    ClassCounts zero;
    CHECK(merge(a, zero) == a);
    CHECK(merge(a, b) == merge(b, a));
    CHECK(merge(a, b) == count_segment({1, 100}, base));

    ClassCounts huge;
    huge.total = ~0ull;
    CHECK_THROWS_AS(merge(huge, b), std::overflow_error);
}

TEST_CASE("segment decomposition invariance") {
    const u64 X = 100000;
    auto base = base_for(X);
    ClassCounts whole = count_segment({1, X}, base);

    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 5; ++trial) {
        // random partition of [1, X]
        std::vector<u64> cuts{0, X};
        int pieces = 2 + static_cast<int>(rng() % 8);
        for (int i = 0; i < pieces; ++i) cuts.push_back(1 + rng() % X);
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        ClassCounts total;
        for (size_t i = 0; i + 1 < cuts.size(); ++i)
            total = merge(total, count_segment({cuts[i] + 1, cuts[i + 1]}, base));
        REQUIRE(total == whole);
    }
}

TEST_CASE("census checkpoints and determinism across thread counts") {
    CensusParams p;
    p.limit = 200000;
    p.checkpoints = {1, 10, 100, 1000, 65536, 200000};
    p.segment_size = 1 << 14;

    std::map<unsigned, std::vector<Checkpoint>> runs;
    for (unsigned threads : {1u, 3u, 8u}) {
        p.threads = threads;
        std::vector<Checkpoint>& rows = runs[threads];
        census(p, [&](const Checkpoint& c) { rows.push_back(c); });
        REQUIRE(rows.size() == p.checkpoints.size());
    }
    CHECK(checkpoints_to_csv(runs[1]) == checkpoints_to_csv(runs[3]));
    CHECK(checkpoints_to_csv(runs[1]) == checkpoints_to_csv(runs[8]));

    // spot values against the oracle
    ClassCounts upto1000 = oracle_counts(1, 1000);
    for (const Checkpoint& c : runs[1]) {
        if (c.x == 1) CHECK(c.counts == ClassCounts{1, 0, 0, 0, 1});
        if (c.x == 1000) CHECK(c.counts == upto1000);
        CHECK(c.counts.total == c.x);
    }
}

TEST_CASE("census matches oracle at 1e4") {
    CensusParams p;
    p.limit = 10000;
    p.checkpoints = {100, 10000};
    p.threads = 1;
    std::vector<Checkpoint> rows;
    census(p, [&](const Checkpoint& c) { rows.push_back(c); });
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].counts == oracle_counts(1, 100));
    CHECK(rows[1].counts == oracle_counts(1, 10000));
}

TEST_CASE("resume equals fresh run") {
    CensusParams fresh;
    fresh.limit = 120000;
    fresh.checkpoints = {60000, 90000, 120000};
    fresh.threads = 2;
    fresh.segment_size = 1 << 14;
    std::vector<Checkpoint> fresh_rows;
    census(fresh, [&](const Checkpoint& c) { fresh_rows.push_back(c); });

    CensusParams first;
    first.limit = 60000;
    first.checkpoints = {60000};
    first.threads = 2;
    first.segment_size = 1 << 14;
    std::vector<Checkpoint> part;
    census(first, [&](const Checkpoint& c) { part.push_back(c); });
    REQUIRE(part.size() == 1);

    CensusParams second;
    second.limit = 120000;
    second.checkpoints = {90000, 120000};
    second.resume = part[0];
    second.threads = 2;
    second.segment_size = 1 << 14;
    std::vector<Checkpoint> resumed = {part[0]};
    census(second, [&](const Checkpoint& c) { resumed.push_back(c); });

    REQUIRE(resumed.size() == fresh_rows.size());
    for (size_t i = 0; i < resumed.size(); ++i) {
        CHECK(resumed[i].x == fresh_rows[i].x);
        CHECK(resumed[i].counts == fresh_rows[i].counts);
    }
}

TEST_CASE("census validates parameters") {
    CensusParams p;
    p.limit = 0;
    CHECK_THROWS_AS(census(p, [](const Checkpoint&) {}), std::invalid_argument);

    p.limit = 100;
    p.checkpoints = {101};
    CHECK_THROWS_AS(census(p, [](const Checkpoint&) {}), std::invalid_argument);

    p.checkpoints = {100};
    p.resume = Checkpoint{100, {50, 10, 10, 30, 100}};
    CHECK_THROWS_AS(census(p, [](const Checkpoint&) {}), std::invalid_argument);

    p.resume = Checkpoint{50, {25, 5, 5, 10, 45}}; // total != x
    CHECK_THROWS_AS(census(p, [](const Checkpoint&) {}), std::invalid_argument);
}

TEST_CASE("checkpoint csv round trip and validation") {
    CensusParams p;
    p.limit = 1000;
    p.checkpoints = {10, 100, 1000};
    p.threads = 1;
    std::vector<Checkpoint> rows;
    census(p, [&](const Checkpoint& c) { rows.push_back(c); });

    std::string csv = checkpoints_to_csv(rows);
    CHECK(csv.starts_with("x,cyclic,strictly_abelian,strictly_nilpotent,not_nilpotent,total\n"));
    auto parsed = checkpoints_from_csv(csv);
    REQUIRE(parsed.size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(parsed[i].x == rows[i].x);
        CHECK(parsed[i].counts == rows[i].counts);
    }

    CHECK_THROWS_AS(checkpoints_from_csv("bogus\n"), std::invalid_argument);
    CHECK_THROWS_AS(
        checkpoints_from_csv("x,cyclic,strictly_abelian,strictly_nilpotent,not_nilpotent,total\n"
                             "10,1,2,3,4,99\n"),
        std::invalid_argument);
}

TEST_CASE("parse_u64_scientific") {
    CHECK(parse_u64_scientific("0") == 0);
    CHECK(parse_u64_scientific("123456789012345678") == 123456789012345678ull);
    CHECK(parse_u64_scientific("1e9") == 1000000000ull);
    CHECK(parse_u64_scientific("2.5e3") == 2500);
    CHECK(parse_u64_scientific("1.5E2") == 150);
    CHECK(parse_u64_scientific("1e19") == 10000000000000000000ull);
    CHECK(parse_u64_scientific("12.300e2") == 1230);
    CHECK_THROWS_AS(parse_u64_scientific("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_u64_scientific("2e64"), std::invalid_argument);
    CHECK_THROWS_AS(parse_u64_scientific("-3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_u64_scientific("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_u64_scientific(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_u64_scientific("1e"), std::invalid_argument);
}
