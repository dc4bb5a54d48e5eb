#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilcount/arithmetic.hpp"
#include "nilcount/int_types.hpp"

namespace nilcount {

struct ClassCounts {
    u64 cyclic = 0;
    u64 strictly_abelian = 0;
    u64 strictly_nilpotent = 0;
    u64 not_nilpotent = 0;
    u64 total = 0;

    // C(x), A(x), N(x) views.
    u64 C() const { return cyclic; }
    u64 A() const { return cyclic + strictly_abelian; }
    u64 N() const { return A() + strictly_nilpotent; }

    void add(NumberClass c);
    bool operator==(const ClassCounts&) const = default;
};

// Componentwise checked sum; commutative monoid with the zero counts as
// identity. Caller guarantees the underlying ranges are disjoint.
ClassCounts merge(const ClassCounts& a, const ClassCounts& b);

struct Segment {
    u64 lo = 1, hi = 1; // inclusive
};

struct Checkpoint {
    u64 x = 0;
    ClassCounts counts; // over [1, x]
};

// Classify every integer in the segment by bulk factorization against
// base_primes (required complete up to sqrt(hi)).
ClassCounts count_segment(Segment seg, std::span<const u32> base_primes);

struct CensusParams {
    u64 limit = 0;
    std::vector<u64> checkpoints;       // sorted ascending, each <= limit
    std::optional<Checkpoint> resume;   // continue from resume->x + 1
    unsigned threads = 0;               // 0 = hardware_concurrency
    u64 segment_size = 1ull << 22;
    // Called from worker threads (throttle/synchronize in the handler).
    std::function<void(u64 segments_done, u64 segments_total)> progress;
};

// Emits a Checkpoint at each requested x in ascending order. Output is
// deterministic and independent of the thread count.
void census(const CensusParams& params, const std::function<void(const Checkpoint&)>& sink);

// Checkpoint/resume CSV: header
//   x,cyclic,strictly_abelian,strictly_nilpotent,not_nilpotent,total
std::string checkpoints_to_csv(std::span<const Checkpoint> rows);
std::vector<Checkpoint> checkpoints_from_csv(const std::string& text);

} // namespace nilcount
