#pragma once

#include <cstdint>

namespace tournadyn {

// Exact integer test of x <= mult * (sqrt(rad) + 1) for x, mult, rad >= 0.
inline bool within_sqrt_bound(long long x, long long mult, long long rad) {
    if (x <= mult) return true;
    unsigned __int128 lhs = static_cast<unsigned __int128>(x - mult);
    lhs *= static_cast<unsigned __int128>(x - mult);
    unsigned __int128 rhs = static_cast<unsigned __int128>(mult);
    rhs *= static_cast<unsigned __int128>(mult);
    rhs *= static_cast<unsigned __int128>(rad);
    return lhs <= rhs;
}

// maxdb(T) <= 8 (sqrt(d+1) + 1)
inline bool maxdb_within(long long maxdb, long long d) {
    return within_sqrt_bound(maxdb, 8, d + 1);
}

// |Back| <= 288 (d+1) (sqrt(6d+7) + 1)
inline bool back_within(long long nback, long long d) {
    return within_sqrt_bound(nback, 288 * (d + 1), 6 * d + 7);
}

// |Empty| <= 12 (d+1)
inline bool empty_within(long long nempty, long long d) {
    return nempty <= 12 * (d + 1);
}

// |Back delta| <= 48 (sqrt(d+1) + 1)
inline bool back_delta_within(long long cnt, long long d) {
    return within_sqrt_bound(cnt, 48, d + 1);
}

}  // namespace tournadyn
