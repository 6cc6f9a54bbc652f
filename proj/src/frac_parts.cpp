#include "fracprimes/frac_parts.hpp"

#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <stdexcept>

#include "fracprimes/arith.hpp"
#include "fracprimes/kahan.hpp"

namespace fracprimes {

namespace {

void finalize(FracPartReport& rep) {
    KahanSum s;
    for (const auto& smp : rep.samples) {
        s.add(smp.frac);
        if (smp.ratio > rep.max_ratio) rep.max_ratio = smp.ratio;
        if (smp.n >= rep.asserted_from && smp.frac >= smp.bound)
            rep.asserted_ok = false;
    }
    rep.sum = s.value();
}

}  // namespace

FracPartReport quad_frac_parts(u64 x) {
    if (x < 2) throw std::domain_error("quad_frac_parts: x must be >= 2");
    FracPartReport rep;
    rep.asserted_from = 4;  // 0.49 sqrt(p) < 0.51 n holds iff n^2 > 12
    const double c2 = 0.51;
    const u64 n_max = isqrt(x);
    for (u64 n = 1; n <= n_max; ++n) {
        u64 p = n * n + 1;
        if (p > x) break;
        if (!is_prime(p)) continue;
        double sp = std::sqrt(static_cast<double>(p));
        FracPartSample smp;
        smp.n = n;
        smp.p = p;
        smp.frac = 1.0 / (sp + static_cast<double>(n));
        smp.bound = c2 / sp;
        smp.ratio = smp.frac / smp.bound;
        rep.samples.push_back(smp);
    }
    finalize(rep);
    return rep;
}

FracPartReport cubic_frac_parts(u64 x) {
    if (x < 3) throw std::domain_error("cubic_frac_parts: x must be >= 3");
    FracPartReport rep;
    rep.asserted_from = 2;  // the bound holds for every n >= 3; n=2 gives 10
    const double c3 = 0.70;
    const u64 n_max = ikroot(x, 3);
    for (u64 n = 1; n <= n_max; ++n) {
        u64 p = n * n * n + 2;
        if (p > x) break;
        if (!is_prime(p)) continue;
        double pd = static_cast<double>(p);
        double p13 = std::cbrt(pd);
        double p23 = p13 * p13;
        FracPartSample smp;
        smp.n = n;
        smp.p = p;
        smp.frac = 2.0 / (p23 + static_cast<double>(n) * p13 +
                          static_cast<double>(n) * static_cast<double>(n));
        smp.bound = c3 / p23;
        smp.ratio = smp.frac / smp.bound;
        rep.samples.push_back(smp);
    }
    finalize(rep);
    return rep;
}

namespace {

// {p^(1/k)} for integer k: integer part by exact k-th root, difference via
// expm1 so nothing cancels.
double frac_root_int(u64 p, unsigned k) {
    u64 m = ikroot(p, k);
    u128 mk = ipow(m, k);
    if (mk == p) return 0.0;
    double r = static_cast<double>(p - static_cast<u64>(mk));
    double ratio = r / static_cast<double>(mk);
    return static_cast<double>(m) * std::expm1(std::log1p(ratio) / k);
}

double frac_root_real(u64 p, double alpha) {
    using boost::multiprecision::mpfr_float;
    mpfr_float::default_precision(40);
    mpfr_float t = exp(log(mpfr_float(p)) / mpfr_float(alpha));
    mpfr_float f = t - floor(t);
    return f.convert_to<double>();
}

}  // namespace

FracPartReport ps_frac_parts(double alpha, const PsExponent& beta, u64 x) {
    if (!(alpha > 1.0)) throw std::domain_error("ps_frac_parts: alpha must be > 1");
    if (beta.num < beta.den || beta.num * 11 > beta.den * 12)
        throw std::domain_error("ps_frac_parts: beta must lie in [1, 12/11]");
    if (x < 2) throw std::domain_error("ps_frac_parts: x must be >= 2");
    const bool integral_alpha =
        alpha == std::floor(alpha) && alpha <= 64.0;
    const unsigned k = integral_alpha ? static_cast<unsigned>(alpha) : 0;
    const double shape_exp = 1.0 - 1.0 / alpha;
    FracPartReport rep;
    rep.asserted_from = 0;  // implied constant unspecified; report only
    for (u64 n = 1;; ++n) {
        u64 v = ps_floor(n, beta);
        if (v + 1 > x) break;
        u64 p = v + 1;
        if (!is_prime(p)) continue;
        FracPartSample smp;
        smp.n = n;
        smp.p = p;
        smp.frac = integral_alpha ? frac_root_int(p, k) : frac_root_real(p, alpha);
        smp.bound = std::pow(static_cast<double>(p), -shape_exp);
        smp.ratio = smp.frac / smp.bound;
        rep.samples.push_back(smp);
    }
    finalize(rep);
    return rep;
}

double dlvp_sum(u64 x) {
    if (x < 2) throw std::domain_error("dlvp_sum: x must be >= 2");
    KahanSum acc;
    for (u64 p : primes_up_to(x))
        acc.add(static_cast<double>(x % p) / static_cast<double>(p));
    return acc.value();
}

double dlvp_main_term(u64 x) {
    constexpr double kEulerGamma = 0.5772156649015328606;
    return (1.0 - kEulerGamma) * static_cast<double>(x) /
           std::log(static_cast<double>(x));
}

}  // namespace fracprimes
