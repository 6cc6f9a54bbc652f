#pragma once

#include <vector>

#include "fracprimes/census.hpp"
#include "fracprimes/int_math.hpp"

namespace fracprimes {

struct FracPartSample {
    u64 n = 0;
    u64 p = 0;
    double frac = 0.0;   // fractional part, in [0, 1), stable formula
    double bound = 0.0;  // the claimed right-hand side
    double ratio = 0.0;  // frac / bound
};

struct FracPartReport {
    std::vector<FracPartSample> samples;
    double sum = 0.0;        // sum of the fractional parts
    double max_ratio = 0.0;
    u64 asserted_from = 0;   // bound asserted only for n >= asserted_from
    bool asserted_ok = true; // every asserted sample satisfies frac < bound
};

// {sqrt(p)} for primes p = n^2 + 1 <= x, computed as 1/(sqrt(n^2+1) + n)
// (never sqrt(p) - floor in floating point). Bound 0.51/sqrt(p); the bound
// holds exactly iff n >= 4, so smaller n are reported informationally.
FracPartReport quad_frac_parts(u64 x);

// {p^(1/3)} for primes p = n^3 + 2 <= x via the rationalized difference
// 2 / ((n^3+2)^(2/3) + n (n^3+2)^(1/3) + n^2). Bound 0.70/p^(2/3).
FracPartReport cubic_frac_parts(u64 x);

// {p^(1/alpha)} over primes p = floor(n^beta) + 1 <= x. ratio = frac *
// p^(1-1/alpha), whose maximum estimates the implied constant; bound is the
// shape p^-(1-1/alpha). Integer alpha uses exact k-th roots for the integer
// part; fractional alpha falls back to high-precision evaluation.
FracPartReport ps_frac_parts(double alpha, const PsExponent& beta, u64 x);

// sum_{p<=x} {x/p}, floors by integer division.
double dlvp_sum(u64 x);
// comparison main term (1 - gamma) x / log x
double dlvp_main_term(u64 x);

}  // namespace fracprimes
