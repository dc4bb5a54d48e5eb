#pragma once

#include <cstdint>
#include <stdexcept>

namespace nilcount {

using u8  = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Long computations may exceed available memory or sieve capacity; callers
// map this to a distinct exit code.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline u64 checked_add(u64 a, u64 b) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("u64 counter overflow");
    return r;
}

} // namespace nilcount
