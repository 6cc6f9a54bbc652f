#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fracprimes/poly.hpp"

using namespace fracprimes;

TEST_CASE("construction and parsing") {
    auto p = IntPolynomial::parse("1,0,1");
    CHECK(p.degree() == 2);
    CHECK(p.coeffs() == std::vector<i64>{1, 0, 1});
    CHECK(p.to_string() == "1,0,1");

    CHECK(IntPolynomial({1, 2, 0, 0}).degree() == 1);  // trailing zeros trimmed
    CHECK(IntPolynomial({0}).is_zero());
    CHECK(IntPolynomial::parse("-3").coeffs() == std::vector<i64>{-3});

    CHECK_THROWS_AS(IntPolynomial::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(IntPolynomial::parse("1,x,2"), std::invalid_argument);
    CHECK_THROWS_AS(IntPolynomial::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(IntPolynomial(std::vector<i64>{}), std::domain_error);
}

TEST_CASE("evaluation") {
    CHECK(evaluate(IntPolynomial({1, 0, 1}), 1) == 2);
    CHECK(evaluate(IntPolynomial({2, 0, 0, 1}), 1) == 3);
    CHECK(evaluate(IntPolynomial({0}), 1000000000) == 0);
    CHECK(evaluate(IntPolynomial({5, -3, 2}), -4) == 5 + 12 + 32);

    // x^8 at 10^5 needs ~133 bits
    std::vector<i64> x8(9, 0);
    x8[8] = 1;
    CHECK_THROWS_AS(evaluate(IntPolynomial(x8), 100000), std::overflow_error);
}

TEST_CASE("fixed divisors of the reference polynomials") {
    struct Case {
        std::vector<i64> coeffs;
        u64 want;
    };
    const Case cases[] = {
        {{2, 3}, 1},        // 3x + 2, gcd(3,2) = 1
        {{1, 0, 1}, 1},     // x^2 + 1
        {{1, 1, 1}, 1},     // x^2 + x + 1
        {{2, 0, 0, 1}, 1},  // x^3 + 2
        {{2, 1, 1}, 2},     // x(x+1) + 2
        {{3, 2, 3, 1}, 3},  // x(x+1)(x+2) + 3
        {{7}, 7},           // constant
        {{2, 2}, 2},        // 2x + 2
    };
    for (const auto& c : cases) {
        IntPolynomial f(c.coeffs);
        CHECK(fixed_divisor_truncated(f) == c.want);
        CHECK(fixed_divisor_factorial(f) == c.want);
    }
    CHECK_THROWS_AS(fixed_divisor_truncated(IntPolynomial({0})), std::domain_error);
    CHECK_THROWS_AS(fixed_divisor_factorial(IntPolynomial({0})), std::domain_error);
}

TEST_CASE("factorial basis examples") {
    // forward differences of 0, 1, 4 are 0, 1, 2
    auto fb = to_factorial_basis(IntPolynomial({0, 0, 1}));
    CHECK(fb.b == std::vector<i128>{0, 1, 2});
    auto fb2 = to_factorial_basis(IntPolynomial({1, 0, 1}));
    CHECK(fb2.b == std::vector<i128>{1, 1, 2});
    auto fbc = to_factorial_basis(IntPolynomial({7}));
    CHECK(fbc.b == std::vector<i128>{7});

    CHECK(from_factorial_basis(fb) == IntPolynomial({0, 0, 1}));
    CHECK(from_factorial_basis(fb2) == IntPolynomial({1, 0, 1}));
}

TEST_CASE("random polynomials: algorithm agreement, divisibility, round-trip") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> deg_dist(0, 6);
    std::uniform_int_distribution<i64> coeff_dist(-100, 100);
    std::uniform_int_distribution<i64> arg_dist(-1000, 1000);
    int tried = 0;
    while (tried < 10000) {
        int d = deg_dist(rng);
        std::vector<i64> cs(static_cast<size_t>(d) + 1);
        for (auto& c : cs) c = coeff_dist(rng);
        IntPolynomial f(cs);
        if (f.is_zero()) continue;
        ++tried;

        u128 dt = fixed_divisor_truncated(f);
        u128 df = fixed_divisor_factorial(f);
        REQUIRE(dt == df);
        REQUIRE(dt >= 1);

        for (int i = 0; i < 50; ++i) {
            i128 v = evaluate(f, arg_dist(rng));
            REQUIRE(abs_u128(v) % dt == 0);
        }

        REQUIRE(from_factorial_basis(to_factorial_basis(f)) == f);
    }
}
