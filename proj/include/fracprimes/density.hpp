#pragma once

#include <string>

#include "fracprimes/int_math.hpp"
#include "fracprimes/poly.hpp"

namespace fracprimes {

// Partial sum of a density series. All terms are nonnegative, so a truncation
// is always a lower bound for the full series.
struct DensityEstimate {
    double value = 0.0;
    std::string value_extended;  // decimal string, set only in extended mode
    u64 terms = 0;
    double tail = 0.0;  // upper bound on the dropped tail; 0 when not computed
    std::string kind;
    bool is_lower_bound = true;
};

// sum_{n=1}^{terms} Lambda(|g(n)|) / (n(n+1)), compensated double accumulation.
DensityEstimate density_series(const IntPolynomial& g, u64 terms);

// Same series at `digits` decimal digits of working precision (MPFR).
DensityEstimate density_series_extended(const IntPolynomial& g, u64 terms,
                                        unsigned digits);

// sum_{n=1}^{terms} Lambda(|g1(n)|) * Lambda(|g2(n)|) / (n(n+1)).
DensityEstimate density_series_pair(const IntPolynomial& g1,
                                    const IntPolynomial& g2, u64 terms);

// Upper bound on sum_{n>N} Lambda(|g(n)|)/(n(n+1)) for deg g = d:
// integral_N^inf (d log t + C) / (t(t+1)) dt with C = log(1 + coeff_slack),
// evaluated by adaptive quadrature to ~1e-12 plus an analytic remainder so the
// result stays an upper bound.
double tail_bound(unsigned degree, u64 from_n, double coeff_slack = 0.0);

enum class ProductKind { twin, hardy_littlewood_quadratic, polignac };

struct EulerProductEstimate {
    double value = 0.0;
    u64 prime_limit = 0;
    ProductKind kind = ProductKind::twin;
    u64 polignac_m = 0;
};

// Truncated products over odd primes <= prime_limit:
//   twin:      prod (1 - 1/(p-1)^2)
//   hl2:       prod (1 - chi(p)/(p-1)), chi the nontrivial character mod 4
//   polignac:  twin product times prod_{p | m, p > 2} (p-1)/(p-2)
EulerProductEstimate euler_product(ProductKind kind, u64 prime_limit,
                                   u64 polignac_m = 0);

}  // namespace fracprimes
