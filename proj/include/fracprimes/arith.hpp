#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "fracprimes/int_math.hpp"

namespace fracprimes {

// Lambda(n) kept in exact factor form: (p, m) with p^m = n when n is a prime
// power, base 0 otherwise. log p is derived at summation time so the rounding
// policy lives with the accumulator, not the table.
struct LambdaValue {
    u64 base = 0;
    unsigned exponent = 0;

    bool is_prime_power() const { return base != 0; }
    double log_value() const {
        return base == 0 ? 0.0 : std::log(static_cast<double>(base));
    }
    bool operator==(const LambdaValue&) const = default;
};

// Sieve-built table of Lambda(n) for 1 <= n <= limit. Immutable after
// construction; lookups are pure and safe for concurrent readers.
class LambdaTable {
public:
    explicit LambdaTable(u64 limit);
    // Raw constructor for fixtures; entries are taken as-is.
    LambdaTable(u64 limit, std::vector<std::uint32_t> base,
                std::vector<std::uint8_t> exp);

    u64 limit() const { return limit_; }

    LambdaValue lambda(u64 n) const;

private:
    u64 limit_;
    std::vector<std::uint32_t> base_;  // base_[n] = p, or 0 when Lambda(n) = 0
    std::vector<std::uint8_t> exp_;
};

LambdaTable build_lambda_table(u64 limit);

// Deterministic (Miller-Rabin with a fixed witness set that is exact for all
// 64-bit inputs; no probabilistic answers).
bool is_prime(u64 n);

// Lambda(n) for 1 <= n < 2^63 without a sieve: deterministic primality plus
// perfect-power extraction by exact integer k-th roots.
LambdaValue lambda_of(u64 n);

// Exactly the primes <= limit, ascending. Empty for limit < 2.
std::vector<u64> primes_up_to(u64 limit);

}  // namespace fracprimes
