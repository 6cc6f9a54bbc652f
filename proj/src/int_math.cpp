#include "fracprimes/int_math.hpp"

#include <algorithm>
#include <cmath>

namespace fracprimes {

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s += static_cast<char>('0' + static_cast<unsigned>(v % 10));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string to_string(i128 v) {
    if (v < 0) return "-" + to_string(static_cast<u128>(-(v + 1)) + 1);
    return to_string(static_cast<u128>(v));
}

u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

u128 isqrt(u128 n) {
    if (n == 0) return 0;
    u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

u128 ipow_capped(u128 base, unsigned k, u128 cap) {
    u128 r = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (base != 0 && r > cap / base) return cap + 1;
        r *= base;
        if (r > cap) return cap + 1;
    }
    return r;
}

u128 ipow(u128 base, unsigned k) {
    static constexpr u128 kMax = ~static_cast<u128>(0);
    u128 r = ipow_capped(base, k, kMax - 1);
    if (r == kMax) throw std::overflow_error("integer overflow in ipow");
    return r;
}

u128 ikroot(u128 n, unsigned k) {
    if (k == 0) throw std::domain_error("ikroot: k must be >= 1");
    if (k == 1 || n <= 1) return n;
    if (k >= 128) return 1;
    u128 r = static_cast<u128>(
        std::pow(static_cast<long double>(n), 1.0L / static_cast<long double>(k)));
    if (r == 0) r = 1;
    // float guess is within a few ulps; walk to the exact floor
    while (r > 1 && ipow_capped(r, k, n) > n) --r;
    while (ipow_capped(r + 1, k, n) <= n) ++r;
    return r;
}

u64 ikroot(u64 n, unsigned k) {
    return static_cast<u64>(ikroot(static_cast<u128>(n), k));
}

u128 gcd(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace fracprimes
