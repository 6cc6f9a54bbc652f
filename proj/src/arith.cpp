#include "fracprimes/arith.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace fracprimes {

namespace {

std::vector<std::uint8_t> composite_flags(u64 limit) {
    std::vector<std::uint8_t> comp(limit + 1, 0);
    if (limit >= 1) comp[0] = 1;
    if (limit >= 1) comp[1] = 1;
    for (u64 p = 2; p * p <= limit; ++p) {
        if (comp[p]) continue;
        for (u64 q = p * p; q <= limit; q += p) comp[q] = 1;
    }
    return comp;
}

}  // namespace

LambdaTable::LambdaTable(u64 limit) : limit_(limit) {
    if (limit == 0) throw std::domain_error("LambdaTable: limit must be >= 1");
    if (limit > std::numeric_limits<std::uint32_t>::max())
        throw std::domain_error("LambdaTable: limit exceeds 2^32-1");
    base_.assign(limit + 1, 0);
    exp_.assign(limit + 1, 0);
    auto comp = composite_flags(limit);
    for (u64 p = 2; p <= limit; ++p) {
        if (comp[p]) continue;
        u64 pw = p;
        unsigned m = 1;
        while (true) {
            base_[pw] = static_cast<std::uint32_t>(p);
            exp_[pw] = static_cast<std::uint8_t>(m);
            if (pw > limit / p) break;
            pw *= p;
            ++m;
        }
    }
}

LambdaTable::LambdaTable(u64 limit, std::vector<std::uint32_t> base,
                         std::vector<std::uint8_t> exp)
    : limit_(limit), base_(std::move(base)), exp_(std::move(exp)) {}

LambdaValue LambdaTable::lambda(u64 n) const {
    if (n == 0) throw std::domain_error("Lambda(0) is undefined");
    if (n > limit_) throw std::domain_error("LambdaTable: n beyond table limit");
    return {base_[n], exp_[n]};
}

LambdaTable build_lambda_table(u64 limit) { return LambdaTable(limit); }

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // n > 37^2 is not required; n odd and coprime to the trial set here.
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set decides primality exactly for all n < 3.3 * 10^24.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

LambdaValue lambda_of(u64 n) {
    if (n == 0) throw std::domain_error("Lambda(0) is undefined");
    if (n >= (1ull << 63))
        throw std::domain_error("lambda_of: argument must be < 2^63");
    if (n == 1) return {};
    if (is_prime(n)) return {n, 1};
    for (unsigned k = 2; k < 64; ++k) {
        if ((static_cast<u128>(1) << k) > n) break;
        u64 r = ikroot(n, k);
        if (r < 2) break;
        if (ipow_capped(r, k, n) == n && is_prime(r)) return {r, k};
    }
    return {};
}

std::vector<u64> primes_up_to(u64 limit) {
    std::vector<u64> primes;
    if (limit < 2) return primes;
    auto comp = composite_flags(limit);
    primes.reserve(limit > 16 ? static_cast<size_t>(
                                    1.2 * limit / std::log(static_cast<double>(limit)))
                              : 8);
    for (u64 n = 2; n <= limit; ++n)
        if (!comp[n]) primes.push_back(n);
    return primes;
}

}  // namespace fracprimes
