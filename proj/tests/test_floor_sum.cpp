#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fracprimes/arith.hpp"
#include "fracprimes/floor_sum.hpp"

using namespace fracprimes;

namespace {

void check_decomposition(u64 x) {
    auto d = decompose(x);
    REQUIRE(d.x == x);
    REQUIRE(d.blocks.size() <= 2 * isqrt(x) + 1);
    u64 total = 0;
    u64 prev_value = ~static_cast<u64>(0);
    u64 prev_end = 0;
    for (size_t i = 0; i < d.blocks.size(); ++i) {
        const Block& b = d.blocks[i];
        REQUIRE(b.value < prev_value);
        REQUIRE(b.count >= 1);
        u64 nb = d.n_begin(i), ne = d.n_end(i);
        REQUIRE(nb == prev_end + 1);  // no gaps, no overlaps
        REQUIRE(ne - nb + 1 == b.count);
        REQUIRE(x / nb == b.value);
        REQUIRE(x / ne == b.value);
        total += b.count;
        prev_value = b.value;
        prev_end = ne;
    }
    REQUIRE(total == x);
    REQUIRE(prev_end == x);
}

}  // namespace

TEST_CASE("decompose small cases") {
    auto d1 = decompose(1);
    REQUIRE(d1.blocks.size() == 1);
    CHECK(d1.blocks[0].value == 1);
    CHECK(d1.blocks[0].count == 1);

    auto d10 = decompose(10);
    std::vector<Block> want = {{10, 1}, {5, 1}, {3, 1}, {2, 2}, {1, 5}};
    REQUIRE(d10.blocks.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) {
        CHECK(d10.blocks[i].value == want[i].value);
        CHECK(d10.blocks[i].count == want[i].count);
    }

    CHECK_THROWS_AS(decompose(0), std::domain_error);
}

TEST_CASE("decomposition invariants hold exhaustively and at random") {
    for (u64 x = 1; x <= 2000; ++x) check_decomposition(x);
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<u64> dist(1, 1000000);
    for (int i = 0; i < 50; ++i) check_decomposition(dist(rng));
    auto big = decompose(1000000);
    CHECK(big.blocks.size() <= 2001);
}

TEST_CASE("weighted sums") {
    for (u64 x : {1ull, 2ull, 10ull, 999ull, 12345ull})
        CHECK(floor_weighted_sum(x, [](u64) { return 1.0; }) ==
              static_cast<double>(x));

    CHECK(floor_weighted_sum(10, [](u64 v) { return static_cast<double>(v); }) == 27.0);
    CHECK(floor_weighted_sum_bruteforce(10, [](u64 v) {
              return static_cast<double>(v);
          }) == 27.0);
    CHECK(floor_weighted_sum(1, [](u64 v) { return 3.5 * v; }) == 3.5);

    // v^2 is integer-valued at these sizes, so the two routes agree exactly
    auto sq = [](u64 v) { return static_cast<double>(v) * static_cast<double>(v); };
    CHECK(floor_weighted_sum(100, sq) == floor_weighted_sum_bruteforce(100, sq));

    auto lam_shift = [](u64 v) { return lambda_of(v + 1).log_value(); };
    double block = floor_weighted_sum(1000, lam_shift);
    double brute = floor_weighted_sum_bruteforce(1000, lam_shift);
    CHECK(block == doctest::Approx(brute).epsilon(1e-13));
    // value computed independently with 50-digit arithmetic
    CHECK(block == doctest::Approx(854.481359210040996).epsilon(1e-12));
}

TEST_CASE("bruteforce guard") {
    auto one = [](u64) { return 1.0; };
    CHECK_THROWS_AS(floor_weighted_sum_bruteforce(10000001, one), std::domain_error);
    CHECK(floor_weighted_sum_bruteforce(10000001, one, true) == 10000001.0);
    CHECK_THROWS_AS(floor_weighted_sum_bruteforce(0, one), std::domain_error);
}

TEST_CASE("weight errors carry block context") {
    auto bad = [](u64 v) -> double {
        if (v == 3) throw std::domain_error("boom");
        return 0.0;
    };
    try {
        floor_weighted_sum(10, bad);
        FAIL("expected a throw");
    } catch (const std::domain_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("block value 3") != std::string::npos);
        CHECK(msg.find("boom") != std::string::npos);
    }
}
