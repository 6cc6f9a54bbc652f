#pragma once

#include <functional>
#include <vector>

#include "fracprimes/int_math.hpp"

namespace fracprimes {

struct Block {
    u64 value;  // v = floor(x/n) shared by every n in the block
    u64 count;  // number of n in [1, x] with that value
};

// Run-length encoding of n -> floor(x/n). Values are strictly decreasing,
// counts partition [1, x], and there are at most 2*floor(sqrt(x)) + 1 blocks.
struct BlockDecomposition {
    u64 x = 0;
    std::vector<Block> blocks;

    // n-interval [n_begin, n_end] of block i, reconstructed from its value
    u64 n_begin(size_t i) const {
        return static_cast<u64>(x / (static_cast<u128>(blocks[i].value) + 1)) + 1;
    }
    u64 n_end(size_t i) const { return x / blocks[i].value; }
};

// O(sqrt x) time and space. Two phases: n <= x/(s+1) hit each large value
// exactly once; small values v <= s = floor(sqrt x) are recovered by interval
// inversion, which also keeps the phases disjoint at the boundary.
BlockDecomposition decompose(u64 x);

using WeightFn = std::function<double(u64)>;

// sum_{n<=x} w(floor(x/n)) = sum over blocks of count * w(value).
// w is invoked once per distinct value; accumulation is compensated and in
// fixed block order, so results are bit-stable.
double floor_weighted_sum(u64 x, const WeightFn& w);

// Literal loop oracle. Guarded against accidental huge runs: x > 10^7 is
// refused unless allow_large is set.
double floor_weighted_sum_bruteforce(u64 x, const WeightFn& w,
                                     bool allow_large = false);

}  // namespace fracprimes
