#include "nilcount/census.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <condition_variable>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nilcount/primes.hpp"

namespace nilcount {

void ClassCounts::add(NumberClass c) {
    switch (c) {
        case NumberClass::Cyclic: ++cyclic; break;
        case NumberClass::StrictlyAbelian: ++strictly_abelian; break;
        case NumberClass::StrictlyNilpotent: ++strictly_nilpotent; break;
        case NumberClass::NotNilpotent: ++not_nilpotent; break;
    }
    ++total;
}

ClassCounts merge(const ClassCounts& a, const ClassCounts& b) {
    ClassCounts r;
    r.cyclic = checked_add(a.cyclic, b.cyclic);
    r.strictly_abelian = checked_add(a.strictly_abelian, b.strictly_abelian);
    r.strictly_nilpotent = checked_add(a.strictly_nilpotent, b.strictly_nilpotent);
    r.not_nilpotent = checked_add(a.not_nilpotent, b.not_nilpotent);
    r.total = checked_add(a.total, b.total);
    return r;
}

namespace {

u64 isqrt_u64(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Largest possible number of distinct prime factors <= sqrt(hi) still
// leaving room inside hi: k such that the product of the first k+1 primes
// exceeds hi.
int max_stored_factors(u64 hi) {
    static constexpr u64 primorial[] = {
        2ull, 6ull, 30ull, 210ull, 2310ull, 30030ull, 510510ull,
        9699690ull, 223092870ull, 6469693230ull, 200560490130ull,
        7420738134810ull, 304250263527210ull, 13082761331670030ull,
        614889782588491410ull};
    for (int k = 1; k <= 15; ++k)
        if (primorial[k] > hi) return k; // primorial[k] = product of first k+1 primes
    return 15;
}

// One slot per integer in the segment. The layout keeps the typical
// extraction touch (cof, cnt, first few entries) inside one cache line.
template <int K>
struct Slot {
    u64 cof;
    u8 cnt;
    u8 exps[K];
    u32 primes[K];
};

using PieceCounts = std::vector<std::pair<u64, ClassCounts>>; // (piece end, counts)

// Bulk-factorize [lo, hi] and classify every n, splitting tallies at each
// piece end (ascending, last element == hi).
template <int K>
PieceCounts process_segment(u64 lo, u64 hi, std::span<const u32> base,
                            std::span<const u64> piece_ends,
                            std::vector<Slot<K>>& slots) {
    u64 n_slots = hi - lo + 1;
    if (slots.size() < n_slots) slots.resize(n_slots);
    for (u64 i = 0; i < n_slots; ++i) {
        slots[i].cof = lo + i;
        slots[i].cnt = 0;
    }

    for (u32 p32 : base) {
        u64 p = p32;
        if (p * p > hi) break;
        // Multiples of p below p^2 are left to smaller primes plus the
        // leftover-cofactor rule; starting at p^2 keeps each slot's final
        // unextracted part a single prime.
        u64 r = lo % p;
        u64 first = r ? lo + (p - r) : lo;
        if (first < p * p) first = p * p;
        for (u64 m = first; m <= hi; m += p) {
            Slot<K>& s = slots[m - lo];
            s.cof /= p;
            assert(s.cnt < K);
            s.primes[s.cnt] = p32;
            s.exps[s.cnt] = 1;
            ++s.cnt;
        }
        // Higher powers: one more division and an exponent bump per pass.
        // The entry touched is the one just appended for p.
        u64 pt = p * p;
        while (true) {
            u64 rt = lo % pt;
            u64 first_t = rt ? lo + (pt - rt) : lo;
            for (u64 m = first_t; m <= hi; m += pt) {
                Slot<K>& s = slots[m - lo];
                s.cof /= p;
                ++s.exps[s.cnt - 1];
            }
            if (pt > hi / p) break;
            pt *= p;
        }
    }

    PieceCounts out;
    out.reserve(piece_ends.size());
    size_t piece = 0;
    ClassCounts acc{};
    PrimePower buf[K + 1];
    for (u64 i = 0; i < n_slots; ++i) {
        const Slot<K>& s = slots[i];
        size_t c = s.cnt;
        for (size_t j = 0; j < c; ++j) buf[j] = {s.primes[j], s.exps[j]};
        if (s.cof > 1) {
            // Complete base primes guarantee the leftover is prime.
            assert(is_prime_u64(s.cof));
            buf[c++] = {s.cof, 1u};
        }
        acc.add(classify_prime_powers({buf, c}));
        if (lo + i == piece_ends[piece]) {
            out.emplace_back(lo + i, acc);
            acc = ClassCounts{};
            ++piece;
        }
    }
    return out;
}

PieceCounts run_segment(u64 lo, u64 hi, std::span<const u32> base,
                        std::span<const u64> piece_ends, int kmax,
                        std::vector<Slot<11>>& s11, std::vector<Slot<15>>& s15) {
    if (kmax <= 11) return process_segment<11>(lo, hi, base, piece_ends, s11);
    return process_segment<15>(lo, hi, base, piece_ends, s15);
}

} // namespace

ClassCounts count_segment(Segment seg, std::span<const u32> base_primes) {
    if (seg.lo < 1 || seg.lo > seg.hi)
        throw std::invalid_argument("count_segment: bad segment");
    std::vector<Slot<11>> s11;
    std::vector<Slot<15>> s15;
    u64 ends[1] = {seg.hi};
    auto pieces = run_segment(seg.lo, seg.hi, base_primes, ends,
                              max_stored_factors(seg.hi), s11, s15);
    return pieces.back().second;
}

void census(const CensusParams& params, const std::function<void(const Checkpoint&)>& sink) {
    if (params.limit < 1)
        throw std::invalid_argument("census: limit must be >= 1");
    if (params.limit > (1ull << 63))
        throw resource_error("census: limit must be <= 2^63");
    if (params.segment_size < 1)
        throw std::invalid_argument("census: segment size must be >= 1");

    u64 start = 1;
    ClassCounts acc{};
    if (params.resume) {
        const Checkpoint& r = *params.resume;
        if (r.counts.total != r.x)
            throw std::invalid_argument("census: resume counts.total != x");
        if (r.x >= params.limit)
            throw std::invalid_argument("census: resume point not below limit");
        start = r.x + 1;
        acc = r.counts;
    }

    std::vector<u64> cps(params.checkpoints.begin(), params.checkpoints.end());
    std::sort(cps.begin(), cps.end());
    cps.erase(std::unique(cps.begin(), cps.end()), cps.end());
    for (u64 x : cps) {
        if (x < start)
            throw std::invalid_argument("census: checkpoint at or below resume point");
        if (x > params.limit)
            throw std::invalid_argument("census: checkpoint beyond limit");
    }

    std::vector<u32> base = primes_up_to(std::max<u64>(isqrt_u64(params.limit), 2));
    int kmax = max_stored_factors(params.limit);

    u64 span = params.limit - start + 1;
    u64 n_seg = (span + params.segment_size - 1) / params.segment_size;

    auto segment_bounds = [&](u64 i) {
        u64 lo = start + i * params.segment_size;
        u64 hi = std::min(params.limit, lo + params.segment_size - 1);
        return Segment{lo, hi};
    };
    auto piece_ends_for = [&](Segment s) {
        std::vector<u64> ends;
        auto it = std::lower_bound(cps.begin(), cps.end(), s.lo);
        for (; it != cps.end() && *it < s.hi; ++it) ends.push_back(*it);
        ends.push_back(s.hi);
        return ends;
    };
    size_t next_cp = 0;
    auto consume = [&](const PieceCounts& pieces) {
        for (const auto& [end, counts] : pieces) {
            acc = merge(acc, counts);
            if (next_cp < cps.size() && cps[next_cp] == end) {
                sink(Checkpoint{end, acc});
                ++next_cp;
            }
        }
    };

    unsigned threads = params.threads ? params.threads : std::max(1u, std::thread::hardware_concurrency());

    if (threads == 1 || n_seg == 1) {
        // Purely sequential mode (differential-testing reference).
        std::vector<Slot<11>> s11;
        std::vector<Slot<15>> s15;
        for (u64 i = 0; i < n_seg; ++i) {
            Segment s = segment_bounds(i);
            auto ends = piece_ends_for(s);
            consume(run_segment(s.lo, s.hi, base, ends, kmax, s11, s15));
            if (params.progress) params.progress(i + 1, n_seg);
        }
        return;
    }

    // Workers pull segment indices; the collector merges in segment order.
    // A bounded reorder window keeps memory flat when one segment is slow.
    std::mutex mu;
    std::condition_variable cv_done, cv_space;
    std::vector<std::optional<PieceCounts>> results(n_seg);
    std::atomic<u64> next_idx{0};
    std::atomic<u64> done_count{0};
    u64 consumed = 0;
    const u64 window = static_cast<u64>(threads) * 4;
    std::exception_ptr worker_error;

    auto worker = [&]() {
        std::vector<Slot<11>> s11;
        std::vector<Slot<15>> s15;
        try {
            while (true) {
                u64 i = next_idx.fetch_add(1);
                if (i >= n_seg) break;
                {
                    std::unique_lock lk(mu);
                    cv_space.wait(lk, [&] { return i < consumed + window || worker_error; });
                    if (worker_error) break;
                }
                Segment s = segment_bounds(i);
                auto ends = piece_ends_for(s);
                auto pieces = run_segment(s.lo, s.hi, base, ends, kmax, s11, s15);
                {
                    std::lock_guard lk(mu);
                    results[i] = std::move(pieces);
                }
                cv_done.notify_all();
                u64 d = done_count.fetch_add(1) + 1;
                if (params.progress) params.progress(d, n_seg);
            }
        } catch (...) {
            std::lock_guard lk(mu);
            if (!worker_error) worker_error = std::current_exception();
            cv_done.notify_all();
            cv_space.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);

    for (u64 i = 0; i < n_seg; ++i) {
        PieceCounts pieces;
        {
            std::unique_lock lk(mu);
            cv_done.wait(lk, [&] { return results[i].has_value() || worker_error; });
            if (worker_error) break;
            pieces = std::move(*results[i]);
            results[i].reset();
            consumed = i + 1;
        }
        cv_space.notify_all();
        consume(pieces);
    }

    for (auto& t : pool) t.join();
    if (worker_error) std::rethrow_exception(worker_error);
}

std::string checkpoints_to_csv(std::span<const Checkpoint> rows) {
    std::ostringstream os;
    os << "x,cyclic,strictly_abelian,strictly_nilpotent,not_nilpotent,total\n";
    for (const Checkpoint& c : rows) {
        os << c.x << ',' << c.counts.cyclic << ',' << c.counts.strictly_abelian << ','
           << c.counts.strictly_nilpotent << ',' << c.counts.not_nilpotent << ','
           << c.counts.total << '\n';
    }
    return os.str();
}

std::vector<Checkpoint> checkpoints_from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) ||
        line != "x,cyclic,strictly_abelian,strictly_nilpotent,not_nilpotent,total")
        throw std::invalid_argument("checkpoint csv: bad header");
    std::vector<Checkpoint> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        Checkpoint c;
        u64 fields[6];
        size_t pos = 0;
        for (int i = 0; i < 6; ++i) {
            size_t comma = (i < 5) ? line.find(',', pos) : line.size();
            if (comma == std::string::npos)
                throw std::invalid_argument("checkpoint csv: malformed row");
            fields[i] = std::stoull(line.substr(pos, comma - pos));
            pos = comma + 1;
        }
        c.x = fields[0];
        c.counts = {fields[1], fields[2], fields[3], fields[4], fields[5]};
        if (c.counts.cyclic + c.counts.strictly_abelian + c.counts.strictly_nilpotent +
                c.counts.not_nilpotent != c.counts.total || c.counts.total != c.x)
            throw std::invalid_argument("checkpoint csv: inconsistent row");
        rows.push_back(c);
    }
    return rows;
}

} // namespace nilcount
