#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fracprimes/arith.hpp"

using namespace fracprimes;

namespace {

// trial-division oracle, independent of the sieve and Miller-Rabin paths
bool trial_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// prime-power scan by trial division: returns (p, m) or (0, 0)
LambdaValue trial_lambda(u64 n) {
    if (n < 2) return {};
    u64 p = 0;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return {n, 1};  // prime
    unsigned m = 0;
    u64 r = n;
    while (r % p == 0) {
        r /= p;
        ++m;
    }
    return r == 1 ? LambdaValue{p, m} : LambdaValue{};
}

}  // namespace

TEST_CASE("lambda table basics") {
    auto t1 = build_lambda_table(1);
    CHECK(!t1.lambda(1).is_prime_power());
    CHECK(t1.lambda(1).log_value() == 0.0);

    auto t12 = build_lambda_table(12);
    CHECK(t12.lambda(2) == LambdaValue{2, 1});
    CHECK(t12.lambda(2).log_value() == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(t12.lambda(9) == LambdaValue{3, 2});
    CHECK(t12.lambda(9).log_value() == doctest::Approx(std::log(3.0)).epsilon(1e-15));
    CHECK(!t12.lambda(12).is_prime_power());
    CHECK(!t12.lambda(6).is_prime_power());
    CHECK(t12.lambda(8) == LambdaValue{2, 3});

    CHECK_THROWS_AS(build_lambda_table(0), std::domain_error);
    CHECK_THROWS_AS(t12.lambda(0), std::domain_error);
    CHECK_THROWS_AS(t12.lambda(13), std::domain_error);
}

TEST_CASE("chebyshev psi stays near x") {
    const u64 limit = 100000;
    auto table = build_lambda_table(limit);
    double psi = 0;
    for (u64 n = 1; n <= limit; ++n) psi += table.lambda(n).log_value();
    CHECK(psi >= 0.9e5);
    CHECK(psi <= 1.1e5);
    // spot-check the table against the trial-division scan
    for (u64 n = 1; n <= 5000; ++n) CHECK(table.lambda(n) == trial_lambda(n));
}

TEST_CASE("lambda_of examples") {
    CHECK(!lambda_of(1).is_prime_power());
    CHECK(lambda_of(2) == LambdaValue{2, 1});
    CHECK(trial_prime(1000003));
    CHECK(lambda_of(1000003) == LambdaValue{1000003, 1});
    CHECK(lambda_of(1ull << 60) == LambdaValue{2, 60});
    CHECK(lambda_of(3486784401ull) == LambdaValue{3, 20});  // 3^20
    CHECK(lambda_of(1ull << 62) == LambdaValue{2, 62});
    CHECK_THROWS_AS(lambda_of(0), std::domain_error);
    CHECK_THROWS_AS(lambda_of(1ull << 63), std::domain_error);
}

TEST_CASE("lambda_of is deterministic and matches the table") {
    auto table = build_lambda_table(10000);
    for (u64 n = 1; n <= 10000; ++n) {
        CHECK(lambda_of(n) == table.lambda(n));
        CHECK(lambda_of(n) == lambda_of(n));
    }
}

TEST_CASE("products of distinct primes have Lambda zero") {
    const u64 ps[] = {2, 3, 5, 7, 11, 13, 101, 4999, 99991};
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<size_t> pick(0, std::size(ps) - 1);
    for (int i = 0; i < 200; ++i) {
        size_t a = pick(rng), b = pick(rng);
        if (ps[a] == ps[b]) continue;
        CHECK(!lambda_of(ps[a] * ps[b]).is_prime_power());
    }
}

TEST_CASE("divisor sums of Lambda recover log n") {
    auto table = build_lambda_table(10000);
    for (u64 n = 1; n <= 10000; ++n) {
        double sum = 0;
        u128 product = 1;
        for (u64 d = 1; d <= n; ++d) {
            if (n % d) continue;
            LambdaValue lv = table.lambda(d);
            if (!lv.is_prime_power()) continue;
            sum += lv.log_value();
            product *= lv.base;
        }
        // exact in factor form: the prime-power divisors multiply back to n
        CHECK(product == n);
        CHECK(sum == doctest::Approx(std::log(static_cast<double>(n))).epsilon(1e-12));
    }
}

TEST_CASE("primes_up_to") {
    CHECK(primes_up_to(10) == std::vector<u64>{2, 3, 5, 7});
    CHECK(primes_up_to(1) == std::vector<u64>{});
    CHECK(primes_up_to(2) == std::vector<u64>{2});

    auto p100 = primes_up_to(100);
    CHECK(p100.size() == 25);
    for (u64 p : p100) CHECK(trial_prime(p));

    // trial division end to end at the 1e5 scale
    u64 trial_count = 0;
    for (u64 n = 2; n <= 100000; ++n)
        if (trial_prime(n)) ++trial_count;
    CHECK(trial_count == 9592);
    CHECK(primes_up_to(100000).size() == trial_count);

    // independent odds-only sieve to cross-check pi(1e6)
    const u64 limit = 1000000;
    std::vector<char> odd_comp((limit + 1) / 2, 0);
    for (u64 k = 3; k * k <= limit; k += 2)
        if (!odd_comp[k / 2])
            for (u64 q = k * k; q <= limit; q += 2 * k) odd_comp[q / 2] = 1;
    u64 count = 1;  // 2
    for (u64 k = 3; k <= limit; k += 2)
        if (!odd_comp[k / 2]) ++count;
    CHECK(count == 78498);
    CHECK(primes_up_to(limit).size() == count);

    // and Miller-Rabin agrees on a sample
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<u64> dist(2, limit);
    auto primes = primes_up_to(limit);
    for (int i = 0; i < 2000; ++i) {
        u64 n = dist(rng);
        bool in_list = std::binary_search(primes.begin(), primes.end(), n);
        CHECK(in_list == is_prime(n));
    }
}

TEST_CASE("is_prime on 64-bit edge cases") {
    CHECK(!is_prime(0));
    CHECK(!is_prime(1));
    CHECK(is_prime(2));
    CHECK(!is_prime(3215031751ull));          // strong pseudoprime to bases 2,3,5,7
    CHECK(is_prime(18446744073709551557ull)); // largest 64-bit prime
    CHECK(!is_prime(18446744073709551615ull));
    CHECK(!is_prime(3825123056546413051ull)); // pseudoprime to bases 2..23
}
