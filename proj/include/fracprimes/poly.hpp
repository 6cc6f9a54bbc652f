#pragma once

#include <string>
#include <vector>

#include "fracprimes/int_math.hpp"

namespace fracprimes {

// Exact integer polynomial, coefficients ascending: c0 + c1 x + ... + cd x^d.
// Evaluation is exact in 128-bit arithmetic and throws on overflow instead of
// wrapping.
class IntPolynomial {
public:
    IntPolynomial() : coeffs_{0} {}
    explicit IntPolynomial(std::vector<i64> coeffs);

    // Comma-separated ascending coefficients, e.g. "1,0,1" = x^2 + 1.
    static IntPolynomial parse(const std::string& csv);

    const std::vector<i64>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

    // Sum of |coefficients| minus one: |f(n)| <= (1 + slack) * n^d for n >= 1.
    double coeff_slack() const;

    std::string to_string() const;  // same csv form parse() accepts
    bool operator==(const IntPolynomial&) const = default;

private:
    std::vector<i64> coeffs_;
};

// Horner evaluation, exact; throws std::overflow_error beyond 128 bits.
i128 evaluate(const IntPolynomial& f, i128 n);

// gcd{ |f(n)| : 0 <= n <= deg f }, with gcd(0, m) = m.
u128 fixed_divisor_truncated(const IntPolynomial& f);

// Coefficients over the binomial basis: f(x) = sum b_k * C(x, k); the b_k are
// the forward differences of f at 0.
struct FactorialBasis {
    std::vector<i128> b;
};

FactorialBasis to_factorial_basis(const IntPolynomial& f);
IntPolynomial from_factorial_basis(const FactorialBasis& fb);

// gcd(b_0, ..., b_d); agrees with fixed_divisor_truncated on every input.
u128 fixed_divisor_factorial(const IntPolynomial& f);

}  // namespace fracprimes
