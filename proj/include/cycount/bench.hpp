#ifndef CYCOUNT_BENCH_HPP
#define CYCOUNT_BENCH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "cycount/counts.hpp"
#include "cycount/graph.hpp"

namespace cycount {

// Erdos-Renyi sample, deterministic in (n, p, seed, directed): pair (u, v)
// is examined in a fixed order and an edge placed when the next 64-bit draw,
// scaled to [0, 1), falls below p.
Graph gen_er(int n, double p, std::uint64_t seed, bool directed);

struct SweepPoint {
    double p = 0.0;
    double sieve_ms = 0.0;
    double enum_ms = 0.0;
    double mean_cycles = 0.0;
    bool sieve_wins = false;
};

struct SweepOptions {
    int reps = 3;
    int streak = 3;            // consecutive sieve wins that settle the crossover
    int ell = 0;               // 0 means use n
    std::uint64_t seed = 1;
};

// Times the sieve against cycle enumeration on shared random graphs at each
// density, scanning upward until the sieve has won `streak` consecutive
// points; the crossover is the first density of that run. Densities past the
// run are not evaluated (enumeration cost grows steeply there).
struct SweepResult {
    int n = 0;
    int ell = 0;
    bool conclusive = false;
    double crossover_p = 0.0;
    std::vector<SweepPoint> points;
};

SweepResult sweep_crossover(int n, std::span<const double> ps, const SweepOptions& opts);

// Least squares for y = a + b / n.
struct InverseFit {
    double a = 0.0, b = 0.0, rmse = 0.0;
};
InverseFit fit_inverse_n(std::span<const double> ns, std::span<const double> ys);

// Least squares for y_k = scale * ratio^k + offset; the ratio acts as an
// effective branching factor of the measured growth. Grid search over the
// ratio with the closed-form inner fit, refined to high precision.
struct GeometricFit {
    double ratio = 1.0, scale = 0.0, offset = 0.0, rmse = 0.0;
};
GeometricFit fit_geometric(std::span<const int> ks, std::span<const double> ys);

// Splits cycle counts of a +1/-1 edge-signed graph into positively and
// negatively signed cycles (sign = product of edge signs along the cycle).
struct SignedSplit {
    int ell = 0;
    std::vector<BigInt> positive;
    std::vector<BigInt> negative;
};
SignedSplit signed_cycle_split(const Graph& g, int ell);

// Nested instances obtained by deleting edges of low multiplicity: scanning
// thresholds upward, an instance is emitted whenever at least `min_removed`
// edges vanished since the previous instance. The first instance is the
// graph itself. Isolated vertices are dropped, names kept.
std::vector<Graph> prune_by_multiplicity(const Graph& g, std::int64_t min_removed);

enum class Algorithm { Sieve, Enumeration };

// Compares the sieve cost model (ell^2 / max_degree + 1 work per connected
// induced subgraph) against the number of simple cycles, which enumeration
// touches once each. Both censuses are computed exactly, so this is a
// diagnostic for modest graphs rather than a planner.
struct Advice {
    Algorithm choice = Algorithm::Enumeration;
    std::uint64_t subgraph_count = 0;
    std::uint64_t cycle_count = 0;
    double sieve_cost = 0.0;
};
Advice advise_algorithm(const Graph& g, int ell);

}  // namespace cycount

#endif
