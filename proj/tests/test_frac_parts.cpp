#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fracprimes/arith.hpp"
#include "fracprimes/frac_parts.hpp"

using namespace fracprimes;

TEST_CASE("quadratic fractional parts") {
    auto rep = quad_frac_parts(50);
    REQUIRE(rep.samples.size() == 4);  // p = 2, 5, 17, 37
    CHECK(rep.samples[0].n == 1);
    CHECK(rep.samples[0].frac == doctest::Approx(0.41421356237309503).epsilon(1e-12));
    CHECK(rep.samples[0].ratio > 1.0);  // small-n exception, informational
    CHECK(rep.samples[1].n == 2);
    CHECK(rep.samples[1].frac == doctest::Approx(0.2360679775).epsilon(1e-9));
    CHECK(rep.samples[1].bound == doctest::Approx(0.2280789337).epsilon(1e-9));
    CHECK(rep.samples[1].ratio == doctest::Approx(1.03502755).epsilon(1e-6));
    CHECK(rep.samples[2].n == 4);
    CHECK(rep.samples[2].frac == doctest::Approx(0.1231056256).epsilon(1e-9));
    CHECK(rep.samples[2].bound == doctest::Approx(0.1236931688).epsilon(1e-9));
    CHECK(rep.samples[2].ratio < 1.0);
    CHECK(rep.asserted_from == 4);
    CHECK(rep.asserted_ok);

    // the bound holds for every prime sample with n >= 4 over a long run
    auto big = quad_frac_parts(1000000);
    CHECK(big.asserted_ok);
    for (const auto& s : big.samples) {
        CHECK(s.frac >= 0.0);
        CHECK(s.frac < 1.0);
        if (s.n >= 4) CHECK(s.frac < s.bound);
    }
    CHECK_THROWS_AS(quad_frac_parts(1), std::domain_error);
}

TEST_CASE("stable quadratic formula agrees with direct long-double subtraction") {
    for (u64 n = 1; n <= 1000; ++n) {
        double stable = 1.0 / (std::sqrt(static_cast<double>(n * n + 1)) +
                               static_cast<double>(n));
        long double direct =
            sqrtl(static_cast<long double>(n) * n + 1.0L) - static_cast<long double>(n);
        CHECK(std::abs(stable - static_cast<double>(direct)) <= 1e-14);
    }
}

TEST_CASE("integer parts are exact") {
    for (u64 n = 1; n <= 100000; n += 7) {
        CHECK(isqrt(n * n + 1) == n);
        CHECK(ikroot(n * n * n + 2, 3) == n);
    }
}

TEST_CASE("normalized quad fracs approach 1 from below") {
    for (u64 n = 2; n <= 1000; ++n) {
        double f = 1.0 / (std::sqrt(static_cast<double>(n * n + 1)) +
                          static_cast<double>(n));
        double v = f * 2.0 * static_cast<double>(n);
        CHECK(v <= 1.0);
        CHECK(v >= 1.0 - 1.0 / (static_cast<double>(n) * static_cast<double>(n)));
    }
}

TEST_CASE("quad partial sums grow and stay under the crude envelope") {
    double s100 = quad_frac_parts(100).sum;
    double s1000 = quad_frac_parts(1000).sum;
    double s10000 = quad_frac_parts(10000).sum;
    CHECK(s100 == doctest::Approx(0.856149695788765).epsilon(1e-12));
    CHECK(s1000 == doctest::Approx(1.03794606235404).epsilon(1e-12));
    CHECK(s10000 == doctest::Approx(1.11367496966883).epsilon(1e-12));
    CHECK(s100 <= s1000);
    CHECK(s1000 <= s10000);
    for (u64 x : {100ull, 1000ull, 10000ull}) {
        double envelope = 1.0;
        for (u64 n = 1; n <= isqrt(x); ++n) envelope += 0.5 / static_cast<double>(n);
        CHECK(quad_frac_parts(x).sum <= envelope);
    }
}

TEST_CASE("cubic fractional parts") {
    auto rep = cubic_frac_parts(30);
    REQUIRE(rep.samples.size() == 2);  // p = 3, 29
    CHECK(rep.samples[0].n == 1);
    CHECK(rep.samples[0].frac == doctest::Approx(0.4422495703).epsilon(1e-9));
    CHECK(rep.samples[1].n == 3);
    CHECK(rep.samples[1].frac == doctest::Approx(0.07231682569).epsilon(1e-9));
    CHECK(rep.samples[1].bound == doctest::Approx(0.07415937165).epsilon(1e-9));
    CHECK(rep.samples[1].ratio < 1.0);
    CHECK(rep.asserted_from == 2);
    CHECK(rep.asserted_ok);

    auto big = cubic_frac_parts(1000000);
    CHECK(big.asserted_ok);
    // normalized fracs: frac * 3n^2/2 -> 1
    for (const auto& s : big.samples) {
        if (s.n < 3) continue;
        double norm = s.frac * 1.5 * static_cast<double>(s.n) *
                      static_cast<double>(s.n);
        CHECK(std::abs(norm - 1.0) <= 1.0 / static_cast<double>(s.n));
    }
    CHECK_THROWS_AS(cubic_frac_parts(2), std::domain_error);
}

TEST_CASE("piatetski-shapiro fractional parts") {
    // beta = 1 recovers all primes; alpha = 2 gives the sqrt shape
    auto rep = ps_frac_parts(2.0, parse_ps_exponent("1"), 1000);
    CHECK(rep.samples.size() == primes_up_to(1000).size());
    for (const auto& s : rep.samples) {
        CHECK(s.frac >= 0.0);
        CHECK(s.frac < 1.0);
        // ratio = frac * sqrt(p)
        CHECK(s.ratio == doctest::Approx(s.frac * std::sqrt(double(s.p))).epsilon(1e-12));
    }
    CHECK(rep.max_ratio > 0.0);
    CHECK(std::isfinite(rep.max_ratio));

    auto rep2 = ps_frac_parts(2.0, parse_ps_exponent("12/11"), 10000);
    CHECK(std::isfinite(rep2.max_ratio));
    CHECK(!rep2.samples.empty());

    // smallest window: at most one sample, no crash
    auto tiny = ps_frac_parts(2.0, parse_ps_exponent("1"), 2);
    CHECK(tiny.samples.size() <= 1);

    // non-integer alpha takes the high-precision path; adjacent alphas agree
    auto a = ps_frac_parts(2.0, parse_ps_exponent("1"), 200);
    auto b = ps_frac_parts(2.0000001, parse_ps_exponent("1"), 200);
    REQUIRE(a.samples.size() == b.samples.size());
    for (size_t i = 0; i < a.samples.size(); ++i)
        CHECK(std::abs(a.samples[i].frac - b.samples[i].frac) <= 1e-4);

    CHECK_THROWS_AS(ps_frac_parts(1.0, parse_ps_exponent("1"), 100),
                    std::domain_error);
    CHECK_THROWS_AS(ps_frac_parts(2.0, parse_ps_exponent("2"), 100),
                    std::domain_error);  // beta outside [1, 12/11]
    CHECK_THROWS_AS(ps_frac_parts(2.0, parse_ps_exponent("1"), 1),
                    std::domain_error);
}

TEST_CASE("fractional parts of x/p") {
    CHECK(dlvp_sum(10) == doctest::Approx(16.0 / 21.0).epsilon(1e-15));
    CHECK(dlvp_sum(2) == 0.0);
    CHECK(dlvp_sum(100) == doctest::Approx(9.28172010488709399).epsilon(1e-12));
    CHECK(dlvp_main_term(1000000) ==
          doctest::Approx((1.0 - 0.5772156649015328606) * 1e6 / std::log(1e6))
              .epsilon(1e-15));
    double ratio = dlvp_sum(1000000) / dlvp_main_term(1000000);
    CHECK(ratio > 0.8);
    CHECK(ratio < 1.2);
    CHECK_THROWS_AS(dlvp_sum(1), std::domain_error);
}
