#ifndef CYCOUNT_BASELINES_HPP
#define CYCOUNT_BASELINES_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cycount/counts.hpp"
#include "cycount/graph.hpp"

namespace cycount {

// Per-length tallies from an enumeration baseline. `count` is the number of
// objects (cycles or paths); `weight` / `weight_approx` the sums of
// edge-weight products, matching the sieve's series on weighted graphs. For
// unit weights the two columns agree.
struct LengthCensus {
    int ell = 0;
    bool exact = true;
    std::vector<std::uint64_t> count;
    std::vector<BigInt> weight;
    std::vector<double> weight_approx;

    std::uint64_t total() const;
};

// Exhaustive anchored DFS over vertex sequences. Simple and independent of
// the other baselines; exponential, for cross-checking small graphs only.
LengthCensus brute_force_cycle_counts(const Graph& g, int ell);
LengthCensus brute_force_path_counts(const Graph& g, int from, int to, int ell);

// Length-capped simple cycle enumeration: Johnson's blocked backtracking over
// strongly connected components, with the block lists conservatively released
// whenever the depth cap prunes a branch (a pruned branch may hide a longer
// cycle, so its vertices cannot stay blocked). `emit`, when set, receives each cycle's vertex
// sequence; the first vertex is the cycle's minimum. On undirected graphs the
// two traversal orientations of a cycle of length >= 3 are distinct and a
// 2-cycle per edge appears once, matching the algebraic counts. Returns the
// number of cycles found.
using CycleSink = std::function<void(std::span<const int>)>;
std::uint64_t enumerate_cycles_capped(const Graph& g, int ell, const CycleSink& emit = {});

LengthCensus enumeration_cycle_counts(const Graph& g, int ell);

}  // namespace cycount

#endif
