#include "fracprimes/density.hpp"

#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fracprimes/arith.hpp"
#include "fracprimes/kahan.hpp"

namespace fracprimes {

namespace {

using big_float = boost::multiprecision::mpfr_float;

// |g(n)| as a Lambda argument; overflow and roots are reported with the
// offending n so series callers can surface it.
u64 lambda_argument(const IntPolynomial& g, u64 n) {
    i128 v;
    try {
        v = evaluate(g, static_cast<i128>(n));
    } catch (const std::overflow_error&) {
        throw std::overflow_error("density series: g(n) overflows at n = " +
                                  std::to_string(n));
    }
    u128 a = abs_u128(v);
    if (a == 0)
        throw std::domain_error("density series: Lambda(0) undefined, g(n) = 0 at n = " +
                                std::to_string(n));
    if (a >= (static_cast<u128>(1) << 63))
        throw std::overflow_error("density series: |g(n)| >= 2^63 at n = " +
                                  std::to_string(n));
    return static_cast<u64>(a);
}

void check_series_pre(const IntPolynomial& g, u64 terms) {
    if (g.is_zero()) throw std::domain_error("density series: zero polynomial");
    if (terms == 0) throw std::domain_error("density series: terms must be >= 1");
}

}  // namespace

DensityEstimate density_series(const IntPolynomial& g, u64 terms) {
    check_series_pre(g, terms);
    KahanSum acc;
    for (u64 n = 1; n <= terms; ++n) {
        LambdaValue lv = lambda_of(lambda_argument(g, n));
        if (!lv.is_prime_power()) continue;
        acc.add(lv.log_value() /
                (static_cast<double>(n) * static_cast<double>(n + 1)));
    }
    DensityEstimate e;
    e.value = acc.value();
    e.terms = terms;
    e.kind = "density[" + g.to_string() + "]";
    e.is_lower_bound = true;
    return e;
}

DensityEstimate density_series_extended(const IntPolynomial& g, u64 terms,
                                        unsigned digits) {
    check_series_pre(g, terms);
    if (digits == 0) throw std::domain_error("extended precision: digits must be >= 1");
    // guard digits keep the final rounding below the last requested digit
    big_float::default_precision(digits + 10);
    big_float sum = 0;
    for (u64 n = 1; n <= terms; ++n) {
        LambdaValue lv = lambda_of(lambda_argument(g, n));
        if (!lv.is_prime_power()) continue;
        big_float den = big_float(n) * big_float(n + 1);
        sum += log(big_float(lv.base)) / den;
    }
    DensityEstimate e;
    e.value = sum.convert_to<double>();
    e.value_extended = sum.str(digits);
    e.terms = terms;
    e.kind = "density[" + g.to_string() + "]";
    e.is_lower_bound = true;
    return e;
}

DensityEstimate density_series_pair(const IntPolynomial& g1,
                                    const IntPolynomial& g2, u64 terms) {
    check_series_pre(g1, terms);
    check_series_pre(g2, terms);
    KahanSum acc;
    for (u64 n = 1; n <= terms; ++n) {
        LambdaValue l1 = lambda_of(lambda_argument(g1, n));
        if (!l1.is_prime_power()) continue;
        LambdaValue l2 = lambda_of(lambda_argument(g2, n));
        if (!l2.is_prime_power()) continue;
        acc.add(l1.log_value() * l2.log_value() /
                (static_cast<double>(n) * static_cast<double>(n + 1)));
    }
    DensityEstimate e;
    e.value = acc.value();
    e.terms = terms;
    e.kind = "density_pair[" + g1.to_string() + ";" + g2.to_string() + "]";
    e.is_lower_bound = true;
    return e;
}

namespace {

// Adaptive Simpson on [a, b] for a smooth integrand.
template <typename F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm,
                        double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = f(lm);
    double frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double integrate(const F& f, double a, double b, double tol) {
    double fa = f(a), fb = f(b);
    double m = 0.5 * (a + b);
    double fm = f(m);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

double tail_bound(unsigned degree, u64 from_n, double coeff_slack) {
    if (from_n < 2) throw std::domain_error("tail_bound: N must be >= 2");
    if (coeff_slack < 0) throw std::domain_error("tail_bound: slack must be >= 0");
    const double d = static_cast<double>(degree);
    const double c = std::log1p(coeff_slack);
    // substitute u = 1/t: integral over (0, 1/N] of (-d log u + c)/(1+u) du
    const double upper = 1.0 / static_cast<double>(from_n);
    const double eps = upper * 1e-13;
    auto f = [d, c](double u) { return (-d * std::log(u) + c) / (1.0 + u); };
    double body = integrate(f, eps, upper, 1e-13);
    // head piece bounded analytically: integrand <= -d log u + c on [0, eps]
    double head = eps * (d * (1.0 - std::log(eps)) + c);
    return body + head;
}

EulerProductEstimate euler_product(ProductKind kind, u64 prime_limit,
                                   u64 polignac_m) {
    if (prime_limit < 3)
        throw std::domain_error("euler_product: prime limit must be >= 3");
    if (kind == ProductKind::polignac && polignac_m < 1)
        throw std::domain_error("euler_product: polignac m must be >= 1");

    auto primes = primes_up_to(prime_limit);
    long double prod = 1.0L;
    if (kind == ProductKind::hardy_littlewood_quadratic) {
        for (u64 p : primes) {
            if (p == 2) continue;
            long double chi = (p % 4 == 1) ? 1.0L : -1.0L;
            prod *= 1.0L - chi / static_cast<long double>(p - 1);
        }
    } else {
        for (u64 p : primes) {
            if (p == 2) continue;
            long double q = static_cast<long double>(p - 1);
            prod *= 1.0L - 1.0L / (q * q);
        }
    }

    EulerProductEstimate e;
    e.prime_limit = prime_limit;
    e.kind = kind;
    if (kind == ProductKind::polignac) {
        e.polignac_m = polignac_m;
        double factor = 1.0;
        u64 m = polignac_m;
        for (u64 p = 2; p * p <= m; ++p) {
            if (m % p) continue;
            while (m % p == 0) m /= p;
            if (p > 2)
                factor *= static_cast<double>(p - 1) / static_cast<double>(p - 2);
        }
        if (m > 2) factor *= static_cast<double>(m - 1) / static_cast<double>(m - 2);
        e.value = static_cast<double>(prod) * factor;
    } else {
        e.value = static_cast<double>(prod);
    }
    return e;
}

}  // namespace fracprimes
