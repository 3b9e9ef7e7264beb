#ifndef CYCOUNT_COUNTS_HPP
#define CYCOUNT_COUNTS_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cycount {

using BigInt = mpz_class;

// Per-length count series, lengths 1..ell. Graphs whose weights are all
// integral (including signed +-1) take the exact arbitrary-precision
// pipeline; any non-integer weight switches to compensated double-precision
// accumulation, flagged by exact = false with a per-length condition
// estimate (max partial-sum magnitude / |result|).
struct CountSeries {
    int ell = 0;
    bool exact = true;
    bool truncated = false;  // requested bound exceeded the graph's maximum
    std::vector<BigInt> exact_values;
    std::vector<double> approx_values;
    std::vector<double> condition;

    const BigInt& at(int k) const { return exact_values[k - 1]; }
    double approx_at(int k) const { return approx_values[k - 1]; }
    std::string str_at(int k) const;
};

struct CycleCounts {
    CountSeries gamma;
};

struct RootedCycleCounts {
    int root = -1;
    CountSeries gamma;
};

struct PathCounts {
    int from = -1;
    int to = -1;
    CountSeries pi;
};

}  // namespace cycount

#endif
