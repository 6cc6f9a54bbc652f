#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fracprimes {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Checked 128-bit arithmetic. All widening happens here; anything that would
// wrap throws instead.
inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in checked_add");
    return r;
}

inline i128 checked_sub(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in checked_sub");
    return r;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in checked_mul");
    return r;
}

std::string to_string(i128 v);
std::string to_string(u128 v);

inline u128 abs_u128(i128 v) {
    return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v);
}

// floor(sqrt(n)), exact
u64 isqrt(u64 n);
u128 isqrt(u128 n);

// floor(n^(1/k)), exact, k >= 1
u64 ikroot(u64 n, unsigned k);
u128 ikroot(u128 n, unsigned k);

// base^k, throws on overflow
u128 ipow(u128 base, unsigned k);

// base^k saturating at cap (returns cap+1 if the power exceeds cap)
u128 ipow_capped(u128 base, unsigned k, u128 cap);

u128 gcd(u128 a, u128 b);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

}  // namespace fracprimes
