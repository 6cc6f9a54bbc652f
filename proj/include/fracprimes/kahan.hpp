#pragma once

#include <cmath>

namespace fracprimes {

// Neumaier-compensated summation. Accumulation order is fixed by the caller,
// so results are bit-stable run to run.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

}  // namespace fracprimes
