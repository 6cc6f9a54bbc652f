#include "fracprimes/poly.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fracprimes {

IntPolynomial::IntPolynomial(std::vector<i64> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::domain_error("IntPolynomial: coefficient list must be nonempty");
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::parse(const std::string& csv) {
    std::vector<i64> cs;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        i64 v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad polynomial coefficient: '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos])))
            ++pos;
        if (pos != tok.size())
            throw std::invalid_argument("bad polynomial coefficient: '" + tok + "'");
        cs.push_back(v);
    }
    if (cs.empty()) throw std::invalid_argument("empty polynomial spec");
    return IntPolynomial(std::move(cs));
}

double IntPolynomial::coeff_slack() const {
    double s = 0;
    for (i64 c : coeffs_) s += std::abs(static_cast<double>(c));
    return s > 1 ? s - 1 : 0;
}

std::string IntPolynomial::to_string() const {
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coeffs_[i]);
    }
    return out;
}

i128 evaluate(const IntPolynomial& f, i128 n) {
    const auto& c = f.coeffs();
    i128 acc = 0;
    for (size_t i = c.size(); i-- > 0;) {
        acc = checked_add(checked_mul(acc, n), static_cast<i128>(c[i]));
    }
    return acc;
}

u128 fixed_divisor_truncated(const IntPolynomial& f) {
    if (f.is_zero())
        throw std::domain_error("fixed divisor of the zero polynomial is undefined");
    u128 g = 0;
    for (int n = 0; n <= f.degree(); ++n)
        g = gcd(g, abs_u128(evaluate(f, n)));
    return g;
}

FactorialBasis to_factorial_basis(const IntPolynomial& f) {
    if (f.is_zero())
        throw std::domain_error("factorial basis of the zero polynomial is undefined");
    int d = f.degree();
    std::vector<i128> v(static_cast<size_t>(d) + 1);
    for (int n = 0; n <= d; ++n) v[static_cast<size_t>(n)] = evaluate(f, n);
    // b_k = k-th forward difference at 0, computed in place
    for (int k = 1; k <= d; ++k)
        for (int j = d; j >= k; --j)
            v[static_cast<size_t>(j)] =
                checked_sub(v[static_cast<size_t>(j)], v[static_cast<size_t>(j - 1)]);
    return {std::move(v)};
}

IntPolynomial from_factorial_basis(const FactorialBasis& fb) {
    if (fb.b.empty()) throw std::domain_error("empty factorial basis");
    int d = static_cast<int>(fb.b.size()) - 1;
    if (d > 32) throw std::overflow_error("factorial basis degree too large");
    // work over a common denominator d! so all intermediates stay integral
    i128 dfact = 1;
    for (int k = 2; k <= d; ++k) dfact = checked_mul(dfact, k);
    std::vector<i128> scaled(static_cast<size_t>(d) + 1, 0);
    // ff = coefficients of x(x-1)...(x-k+1), built incrementally
    std::vector<i128> ff{1};
    i128 kfact = 1;
    for (int k = 0; k <= d; ++k) {
        if (k > 0) {
            kfact = checked_mul(kfact, k);
            // ff *= (x - (k-1))
            std::vector<i128> next(ff.size() + 1, 0);
            for (size_t j = 0; j < ff.size(); ++j) {
                next[j + 1] = checked_add(next[j + 1], ff[j]);
                next[j] = checked_sub(next[j], checked_mul(ff[j], k - 1));
            }
            ff = std::move(next);
        }
        i128 w = checked_mul(fb.b[static_cast<size_t>(k)], dfact / kfact);
        for (size_t j = 0; j < ff.size(); ++j)
            scaled[j] = checked_add(scaled[j], checked_mul(w, ff[j]));
    }
    std::vector<i64> coeffs(static_cast<size_t>(d) + 1);
    for (size_t j = 0; j < scaled.size(); ++j) {
        if (scaled[j] % dfact != 0)
            throw std::logic_error("factorial basis round-trip: non-integer coefficient");
        i128 cv = scaled[j] / dfact;
        if (cv > std::numeric_limits<i64>::max() || cv < std::numeric_limits<i64>::min())
            throw std::overflow_error("factorial basis round-trip: coefficient overflow");
        coeffs[j] = static_cast<i64>(cv);
    }
    return IntPolynomial(std::move(coeffs));
}

u128 fixed_divisor_factorial(const IntPolynomial& f) {
    if (f.is_zero())
        throw std::domain_error("fixed divisor of the zero polynomial is undefined");
    auto fb = to_factorial_basis(f);
    u128 g = 0;
    for (i128 b : fb.b) g = gcd(g, abs_u128(b));
    return g;
}

}  // namespace fracprimes
