#include "fracprimes/floor_sum.hpp"

#include <stdexcept>
#include <string>

#include "fracprimes/kahan.hpp"

namespace fracprimes {

BlockDecomposition decompose(u64 x) {
    if (x == 0) throw std::domain_error("decompose: x must be >= 1");
    BlockDecomposition d;
    d.x = x;
    u64 s = isqrt(x);
    u64 t = x / (s + 1);
    d.blocks.reserve(static_cast<size_t>(t + s));
    // values > s occur for exactly one n each
    for (u64 n = 1; n <= t; ++n) d.blocks.push_back({x / n, 1});
    // values v <= s cover the n-interval (x/(v+1), x/v]
    for (u64 v = s; v >= 1; --v) {
        u64 c = x / v - x / (v + 1);
        if (c > 0) d.blocks.push_back({v, c});
    }
    return d;
}

double floor_weighted_sum(u64 x, const WeightFn& w) {
    auto d = decompose(x);
    KahanSum acc;
    for (const Block& b : d.blocks) {
        double wv;
        try {
            wv = w(b.value);
        } catch (const std::exception& e) {
            throw std::domain_error("weight failed at block value " +
                                    std::to_string(b.value) + " (count " +
                                    std::to_string(b.count) + "): " + e.what());
        }
        acc.add(static_cast<double>(b.count) * wv);
    }
    return acc.value();
}

double floor_weighted_sum_bruteforce(u64 x, const WeightFn& w, bool allow_large) {
    if (x == 0) throw std::domain_error("floor_weighted_sum_bruteforce: x must be >= 1");
    if (x > 10'000'000ull && !allow_large)
        throw std::domain_error(
            "floor_weighted_sum_bruteforce: x > 10^7 refused (pass allow_large "
            "to override)");
    KahanSum acc;
    for (u64 n = 1; n <= x; ++n) acc.add(w(x / n));
    return acc.value();
}

}  // namespace fracprimes
