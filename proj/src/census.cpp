#include "fracprimes/census.hpp"

#include <algorithm>
#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

#include "fracprimes/arith.hpp"
#include "fracprimes/density.hpp"
#include "fracprimes/floor_sum.hpp"
#include "fracprimes/kahan.hpp"

namespace fracprimes {

namespace {

constexpr u64 kAutoTerms = 100000;

u64 lambda_arg(const IntPolynomial& g, u64 v, u64 x) {
    i128 val;
    try {
        val = evaluate(g, static_cast<i128>(v));
    } catch (const std::overflow_error&) {
        throw std::overflow_error("census: g overflows at value floor(" +
                                  std::to_string(x) + "/n) = " + std::to_string(v));
    }
    u128 a = abs_u128(val);
    if (a == 0)
        throw std::domain_error("census: Lambda(0) undefined, g vanishes at value " +
                                std::to_string(v));
    if (a >= (static_cast<u128>(1) << 63))
        throw std::overflow_error("census: |g| >= 2^63 at value " + std::to_string(v));
    return static_cast<u64>(a);
}

void check_census_pre(const IntPolynomial& g, u64 x) {
    if (x == 0) throw std::domain_error("census: x must be >= 1");
    if (g.is_zero()) throw std::domain_error("census: zero polynomial");
}

}  // namespace

CensusRecord weighted_census(const IntPolynomial& g, u64 x) {
    check_census_pre(g, x);
    auto d = decompose(x);
    KahanSum acc;
    u64 contributing = 0;
    std::set<u64> distinct_primes;
    for (const Block& b : d.blocks) {
        u64 a = lambda_arg(g, b.value, x);
        LambdaValue lv = lambda_of(a);
        if (!lv.is_prime_power()) continue;
        acc.add(static_cast<double>(b.count) * lv.log_value());
        contributing += b.count;
        if (lv.exponent == 1) distinct_primes.insert(a);
    }
    CensusRecord r;
    r.x = x;
    r.weighted_sum = acc.value();
    r.multiplicity_count = contributing;
    r.distinct_prime_count = distinct_primes.size();
    r.predicted = density_series(g, std::min(kAutoTerms, x)).value *
                  static_cast<double>(x);
    r.residual = r.weighted_sum - r.predicted;
    return r;
}

std::vector<u64> fractional_primes(const IntPolynomial& g, u64 x) {
    check_census_pre(g, x);
    auto d = decompose(x);
    std::set<u64> primes;
    for (const Block& b : d.blocks) {
        i128 val = evaluate(g, static_cast<i128>(b.value));
        u128 a = abs_u128(val);
        if (a < 2 || a > x) continue;
        u64 p = static_cast<u64>(a);
        if (is_prime(p)) primes.insert(p);
    }
    return {primes.begin(), primes.end()};
}

CensusRecord fractional_prime_count(const IntPolynomial& g, u64 x) {
    check_census_pre(g, x);
    auto d = decompose(x);
    std::set<u64> primes;
    u64 multiplicity = 0;
    for (const Block& b : d.blocks) {
        i128 val = evaluate(g, static_cast<i128>(b.value));
        u128 a = abs_u128(val);
        if (a < 2 || a > x) continue;
        u64 p = static_cast<u64>(a);
        if (!is_prime(p)) continue;
        primes.insert(p);
        multiplicity += b.count;
    }
    CensusRecord r;
    r.x = x;
    r.distinct_prime_count = primes.size();
    r.multiplicity_count = multiplicity;
    int deg = g.degree();
    if (x >= 2 && deg >= 1)
        r.predicted = std::pow(static_cast<double>(x), 1.0 / deg) /
                      std::log(static_cast<double>(x));
    r.residual = static_cast<double>(r.distinct_prime_count) - r.predicted;
    return r;
}

CensusRecord pair_census(const IntPolynomial& g1, const IntPolynomial& g2, u64 x) {
    check_census_pre(g1, x);
    check_census_pre(g2, x);
    auto d = decompose(x);
    KahanSum acc;
    u64 multiplicity = 0;
    std::set<std::pair<u64, u64>> distinct_pairs;
    for (const Block& b : d.blocks) {
        u64 a1 = lambda_arg(g1, b.value, x);
        u64 a2 = lambda_arg(g2, b.value, x);
        LambdaValue l1 = lambda_of(a1);
        if (l1.is_prime_power()) {
            LambdaValue l2 = lambda_of(a2);
            if (l2.is_prime_power())
                acc.add(static_cast<double>(b.count) * l1.log_value() *
                        l2.log_value());
        }
        if (is_prime(a1) && is_prime(a2)) {
            multiplicity += b.count;
            distinct_pairs.insert({a1, a2});
        }
    }
    CensusRecord r;
    r.x = x;
    r.weighted_sum = acc.value();
    r.multiplicity_count = multiplicity;
    r.distinct_prime_count = distinct_pairs.size();
    r.predicted = density_series_pair(g1, g2, std::min(kAutoTerms, x)).value *
                  static_cast<double>(x);
    r.residual = r.weighted_sum - r.predicted;
    return r;
}

// ---------------------------------------------------------------------------
// Beatty

namespace {

constexpr int kAlphaDigits = 30;  // fractional digits of the fixed-point scale

i128 pow10_i128(int k) {
    i128 r = 1;
    for (int i = 0; i < k; ++i) r *= 10;
    return r;
}

const i128 kAlphaScale = pow10_i128(kAlphaDigits);

// 30-digit literals for the named irrationals
constexpr const char* kSqrt2 = "1.414213562373095048801688724210";
constexpr const char* kPi = "3.141592653589793238462643383280";
constexpr const char* kE = "2.718281828459045235360287471353";

i128 parse_fixed_point(const std::string& s) {
    size_t i = 0;
    if (i < s.size() && s[i] == '+') ++i;
    if (s.empty() || i >= s.size())
        throw std::invalid_argument("empty alpha literal");
    i128 ip = 0;
    bool any = false;
    for (; i < s.size() && s[i] != '.'; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("bad alpha literal: '" + s + "'");
        ip = ip * 10 + (s[i] - '0');
        if (ip > 10'000'000) throw std::domain_error("alpha too large");
        any = true;
    }
    i128 mant = ip * kAlphaScale;
    if (i < s.size() && s[i] == '.') {
        ++i;
        i128 scale = kAlphaScale;
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("bad alpha literal: '" + s + "'");
            if (scale == 1)
                throw std::domain_error("alpha literal beyond " +
                                        std::to_string(kAlphaDigits) + " digits");
            scale /= 10;
            mant += (s[i] - '0') * scale;
            any = true;
        }
    }
    if (!any) throw std::invalid_argument("bad alpha literal: '" + s + "'");
    return mant;
}

}  // namespace

BeattyAlpha BeattyAlpha::parse(const std::string& spec) {
    BeattyAlpha a;
    a.spec_ = spec;
    if (spec == "sqrt2") {
        a.mant_ = parse_fixed_point(kSqrt2);
        a.rational_ = false;
    } else if (spec == "pi") {
        a.mant_ = parse_fixed_point(kPi);
        a.rational_ = false;
    } else if (spec == "e") {
        a.mant_ = parse_fixed_point(kE);
        a.rational_ = false;
    } else {
        a.mant_ = parse_fixed_point(spec);
        a.rational_ = true;
    }
    if (a.mant_ <= kAlphaScale)
        throw std::domain_error("beatty: alpha must be > 1");
    return a;
}

double BeattyAlpha::approx() const {
    return static_cast<double>(mant_) / static_cast<double>(kAlphaScale);
}

u64 BeattyAlpha::floor_mul(u64 n) const {
    if (n == 0) return 0;
    // headroom for the +/- perturbations in floor_stable too
    i128 max_n =
        static_cast<i128>((~static_cast<u128>(0) >> 1) / (2 * static_cast<u128>(mant_)));
    if (static_cast<i128>(n) > max_n)
        throw std::overflow_error("beatty: n too large for exact fixed-point floor");
    return static_cast<u64>(mant_ * static_cast<i128>(n) / kAlphaScale);
}

bool BeattyAlpha::floor_stable(u64 n) const {
    i128 delta = mant_ >> 52;  // about one binary64 ulp of alpha
    if (delta == 0) delta = 1;
    i128 lo = (mant_ - delta) * static_cast<i128>(n) / kAlphaScale;
    i128 hi = (mant_ + delta) * static_cast<i128>(n) / kAlphaScale;
    return lo == hi;
}

BeattyResult beatty_primes(const BeattyAlpha& alpha, u64 limit) {
    if (limit < 2) throw std::domain_error("beatty: limit must be >= 2");
    BeattyResult res;
    res.rational_warning = alpha.rational();
    for (u64 n = 1;; ++n) {
        u64 v = alpha.floor_mul(n);
        if (v > limit) {
            res.terms_scanned = n - 1;
            break;
        }
        if (v >= 2 && is_prime(v)) {
            res.primes.push_back(v);
            if (!alpha.floor_stable(n)) res.unstable.push_back(v);
        }
    }
    res.expected = (1.0 / alpha.approx()) * static_cast<double>(limit) /
                   std::log(static_cast<double>(limit));
    return res;
}

// ---------------------------------------------------------------------------
// Piatetski-Shapiro

PsExponent parse_ps_exponent(const std::string& spec) {
    u64 num = 0, den = 1;
    auto slash = spec.find('/');
    if (slash != std::string::npos) {
        size_t p1 = 0, p2 = 0;
        num = std::stoull(spec.substr(0, slash), &p1);
        den = std::stoull(spec.substr(slash + 1), &p2);
        if (p1 != slash || p2 != spec.size() - slash - 1 || den == 0)
            throw std::invalid_argument("bad exponent: '" + spec + "'");
    } else {
        auto dot = spec.find('.');
        std::string digits = spec;
        int frac = 0;
        if (dot != std::string::npos) {
            digits = spec.substr(0, dot) + spec.substr(dot + 1);
            frac = static_cast<int>(spec.size() - dot - 1);
            if (frac > 18) throw std::invalid_argument("exponent literal too long");
        }
        if (digits.empty() ||
            digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad exponent: '" + spec + "'");
        num = std::stoull(digits);
        for (int i = 0; i < frac; ++i) den *= 10;
    }
    u64 g = static_cast<u64>(gcd(num, den));
    num /= g;
    den /= g;
    if (num < den) throw std::domain_error("ps: beta must be >= 1");
    return {num, den};
}

u64 ps_floor(u64 n, const PsExponent& beta) {
    if (n <= 1) return n;
    if (beta.den == 1 && beta.num == 1) return n;
    // exact path: floor((n^num)^(1/den)) when n^num fits u128
    if (beta.num <= 256) {
        u128 cap = ~static_cast<u128>(0) - 1;
        u128 pw = ipow_capped(n, static_cast<unsigned>(beta.num), cap - 1);
        if (pw < cap) {
            u128 r = ikroot(pw, static_cast<unsigned>(beta.den));
            if (r > static_cast<u128>(~static_cast<u64>(0)))
                throw std::overflow_error("ps_floor: result exceeds 64 bits");
            return static_cast<u64>(r);
        }
    }
    // high-precision fallback; ~530 bits dwarfs the algebraic separation
    // between n^(num/den) and the nearest integer at desk scale
    using boost::multiprecision::mpfr_float;
    mpfr_float::default_precision(160);
    mpfr_float t = exp(mpfr_float(beta.num) / mpfr_float(beta.den) *
                       log(mpfr_float(n)));
    mpfr_float fl = floor(t);
    if (t - fl > 1 - mpfr_float(1e-60)) fl += 1;  // genuine integer power
    if (fl > mpfr_float(std::numeric_limits<std::uint64_t>::max()))
        throw std::overflow_error("ps_floor: result exceeds 64 bits");
    return fl.convert_to<u64>();
}

PsResult piatetski_shapiro_primes(const PsExponent& beta, i64 offset, u64 limit) {
    if (limit < 2) throw std::domain_error("ps: limit must be >= 2");
    if (beta.num < beta.den) throw std::domain_error("ps: beta must be >= 1");
    PsResult res;
    for (u64 n = 1;; ++n) {
        i128 v = static_cast<i128>(ps_floor(n, beta)) + offset;
        if (v > static_cast<i128>(limit)) {
            res.terms_scanned = n - 1;
            break;
        }
        if (v >= 2 && is_prime(static_cast<u64>(v))) {
            u64 p = static_cast<u64>(v);
            if (res.primes.empty() || res.primes.back() != p)
                res.primes.push_back(p);
        }
    }
    res.expected = std::pow(static_cast<double>(limit), 1.0 / beta.value()) /
                   std::log(static_cast<double>(limit));
    return res;
}

// ---------------------------------------------------------------------------
// Gaussian twins

std::vector<GaussianTwinPair> gaussian_twin_pairs(u64 limit) {
    if (limit < 2) throw std::domain_error("gaussian twins: limit must be >= 2");
    std::vector<GaussianTwinPair> out;
    const u64 n_max = isqrt(limit);
    for (u64 n = 1; n <= n_max; ++n) {
        u64 p = n * n + 1;
        if (p > limit) break;
        if (!is_prime(p)) continue;
        if (n >= 2 && p % 4 != 1)
            throw std::logic_error("gaussian twins: p = n^2+1 not 1 mod 4");
        GaussianTwinPair g;
        g.n = n;
        g.p = p;
        g.a1 = static_cast<i64>(n);
        g.b1 = -1;
        g.a2 = static_cast<i64>(n);
        g.b2 = 1;
        out.push_back(g);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reports

ExponentFit error_exponent_report(const IntPolynomial& g,
                                  const std::vector<u64>& x_grid) {
    if (x_grid.size() < 3)
        throw std::invalid_argument("error exponent report: need >= 3 grid points");
    if (!std::is_sorted(x_grid.begin(), x_grid.end()))
        throw std::invalid_argument("error exponent report: grid must be ascending");
    if (density_series(g, std::min(kAutoTerms, x_grid.front())).value <= 0.0)
        throw std::invalid_argument(
            "error exponent report: polynomial has zero density");

    ExponentFit fit;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (u64 x : x_grid) {
        CensusRecord rec = weighted_census(g, x);
        double lx = std::log(static_cast<double>(x));
        double ar = std::abs(rec.residual);
        if (ar == 0.0)
            throw std::invalid_argument("error exponent report: zero residual");
        double ly = std::log(ar);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        fit.ratios.push_back(rec.residual /
                             (std::pow(static_cast<double>(x), 2.0 / 3.0) * lx * lx));
        fit.points.push_back(rec);
    }
    double k = static_cast<double>(x_grid.size());
    fit.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    return fit;
}

InterleavingReport interleaving_report(u64 x) {
    if (x < 10) throw std::domain_error("interleaving report: x must be >= 10");
    InterleavingReport rep;
    rep.x = x;
    rep.pi_x = primes_up_to(x).size();
    rep.pi2 = fractional_primes(IntPolynomial({1, 0, 1}), x).size();
    rep.pi3 = fractional_primes(IntPolynomial({2, 0, 0, 1}), x).size();
    rep.chain_holds = rep.pi_x >= rep.pi2 && rep.pi2 >= rep.pi3;
    return rep;
}

double linking_ratio(u64 x) {
    if (x < 1) throw std::domain_error("linking ratio: x must be >= 1");
    KahanSum direct;
    for (u64 n = 1; n <= x; ++n) {
        u128 a = static_cast<u128>(n) * n + 1;
        if (a >= (static_cast<u128>(1) << 63))
            throw std::overflow_error("linking ratio: n^2+1 >= 2^63");
        LambdaValue lv = lambda_of(static_cast<u64>(a));
        if (lv.is_prime_power()) direct.add(lv.log_value());
    }
    CensusRecord frac = weighted_census(IntPolynomial({1, 0, 1}), x);
    if (frac.weighted_sum == 0.0)
        throw std::domain_error("linking ratio: fractional sum is zero");
    return direct.value() / frac.weighted_sum;
}

}  // namespace fracprimes
