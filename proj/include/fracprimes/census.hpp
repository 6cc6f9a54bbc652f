#pragma once

#include <string>
#include <vector>

#include "fracprimes/int_math.hpp"
#include "fracprimes/poly.hpp"

namespace fracprimes {

struct CensusRecord {
    u64 x = 0;
    double weighted_sum = 0.0;       // sum of Lambda-weights over n <= x
    u64 distinct_prime_count = 0;    // distinct primes (or value-pairs in pair mode)
    u64 multiplicity_count = 0;      // number of n <= x contributing
    double predicted = 0.0;          // density * x, or the counting main term
    double residual = 0.0;
};

// sum_{n<=x} Lambda(|g(floor(x/n))|) via the block decomposition
// (O(sqrt x) Lambda evaluations). predicted = density_series(g, min(1e5, x)) * x.
CensusRecord weighted_census(const IntPolynomial& g, u64 x);

// Distinct primes p <= x of the form |g(v)| with v a value of floor(x/n),
// ascending.
std::vector<u64> fractional_primes(const IntPolynomial& g, u64 x);

// distinct = |fractional_primes|, multiplicity = number of n <= x whose block
// value yields such a prime; predicted = x^(1/d) / log x.
CensusRecord fractional_prime_count(const IntPolynomial& g, u64 x);

// weighted_sum = sum_n Lambda(|g1(v)|) Lambda(|g2(v)|); multiplicity counts n
// with both values prime (not just prime powers); distinct counts value-pairs.
CensusRecord pair_census(const IntPolynomial& g1, const IntPolynomial& g2, u64 x);

// ---------------------------------------------------------------------------
// Beatty sequences floor(alpha * n)

// alpha held as an exact fixed-point decimal (30 fractional digits), so floors
// are integer divisions rather than float roundings. Presets embed 30-digit
// literals for sqrt2, pi, e.
class BeattyAlpha {
public:
    // "sqrt2" | "pi" | "e" | decimal literal such as "2.75"
    static BeattyAlpha parse(const std::string& spec);

    double approx() const;
    // true when the spec was an arbitrary decimal (hence rational)
    bool rational() const { return rational_; }
    std::string spec() const { return spec_; }

    u64 floor_mul(u64 n) const;  // floor(alpha * n), exact for the literal
    // floor invariant under a +/- 1-ulp (binary64) perturbation of alpha
    bool floor_stable(u64 n) const;

private:
    i128 mant_ = 0;  // alpha * 10^30
    bool rational_ = true;
    std::string spec_;
};

struct BeattyResult {
    std::vector<u64> primes;     // ascending primes floor(alpha n) <= limit
    u64 terms_scanned = 0;       // number of n visited
    double expected = 0.0;       // (1/alpha) * limit / log(limit)
    bool rational_warning = false;
    std::vector<u64> unstable;   // emitted primes whose floor is knife-edge
};

BeattyResult beatty_primes(const BeattyAlpha& alpha, u64 limit);

// ---------------------------------------------------------------------------
// Piatetski-Shapiro sequences floor(n^beta) + offset

// beta as an exact rational num/den >= 1 (decimal inputs are rationals).
struct PsExponent {
    u64 num = 1;
    u64 den = 1;
    double value() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    std::string to_string() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// "12/11" or a decimal such as "1.05"
PsExponent parse_ps_exponent(const std::string& spec);

// floor(n^beta), exact: integer den-th root of n^num when it fits 128 bits,
// 512-bit MPFR with an integer-adjacency guard otherwise.
u64 ps_floor(u64 n, const PsExponent& beta);

struct PsResult {
    std::vector<u64> primes;
    u64 terms_scanned = 0;
    double expected = 0.0;  // limit^(1/beta) / log(limit), unnormalized shape
};

PsResult piatetski_shapiro_primes(const PsExponent& beta, i64 offset, u64 limit);

// ---------------------------------------------------------------------------
// Gaussian twin pairs: conjugate factors n -/+ i of primes p = n^2 + 1.

struct GaussianTwinPair {
    u64 n = 0;
    u64 p = 0;           // n^2 + 1, prime
    i64 a1 = 0, b1 = 0;  // first factor  (n, -1)
    i64 a2 = 0, b2 = 0;  // conjugate     (n, +1)
};

std::vector<GaussianTwinPair> gaussian_twin_pairs(u64 limit);

// ---------------------------------------------------------------------------
// Empirical reports

struct ExponentFit {
    double slope = 0.0;               // least-squares slope of log|residual| vs log x
    std::vector<double> ratios;       // residual / (x^(2/3) log^2 x) per grid point
    std::vector<CensusRecord> points;
};

// Requires an ascending grid of >= 3 points and a polynomial with nonzero
// density. Makes no pass/fail claim by itself.
ExponentFit error_exponent_report(const IntPolynomial& g,
                                  const std::vector<u64>& x_grid);

struct InterleavingReport {
    u64 x = 0;
    u64 pi_x = 0;   // primes <= x
    u64 pi2 = 0;    // distinct primes [x/n]^2 + 1 <= x
    u64 pi3 = 0;    // distinct primes [x/n]^3 + 2 <= x
    bool chain_holds = false;
};

InterleavingReport interleaving_report(u64 x);

// Empirical ratio sum_{n<=x} Lambda(n^2+1) / sum_{n<=x} Lambda([x/n]^2+1).
// Exploratory output only; no convergence claim.
double linking_ratio(u64 x);

}  // namespace fracprimes
