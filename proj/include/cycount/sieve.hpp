#ifndef CYCOUNT_SIEVE_HPP
#define CYCOUNT_SIEVE_HPP

#include <vector>

#include "cycount/counts.hpp"
#include "cycount/graph.hpp"

namespace cycount {

// Exact traces of A^1 .. A^k_max; every entry of `a` must be integral.
std::vector<BigInt> trace_powers(const DenseMatrix& a, int k_max);
std::vector<double> trace_powers_real(const DenseMatrix& a, int k_max);

// C(n, k), zero whenever k < 0 or k > n.
BigInt binomial(long long n, long long k);

// Simple cycle counts gamma(1..ell) from the connected induced subgraph
// sieve. Weighted graphs produce sums of cycle weight products; graphs with
// unit weights produce plain counts. Requesting ell > N clips to N and sets
// the truncated flag.
CycleCounts count_cycles(const Graph& g, int ell);

// gamma_i(1..ell): cycles through `root`, counted with multiplicity (a cycle
// visiting root contributes once; the sum over all roots of gamma_i(k) is
// k * gamma(k)).
RootedCycleCounts count_cycles_through(const Graph& g, int root, int ell);

// Simple path counts pi_{from -> to}(1..ell) by edge count; from != to.
PathCounts count_paths(const Graph& g, int from, int to, int ell);

// All ordered pairs in one enumeration sweep; result[i][j] is empty series
// when i == j. Intended for small graphs (guarded against n^2 * ell blowup).
std::vector<std::vector<PathCounts>> count_paths_all_pairs(const Graph& g, int ell);

// Cross-check: k * gamma(k) must equal the sum over vertices of gamma_i(k).
struct ConsistencyReport {
    bool pass = true;
    bool exact = true;
    int ell = 0;
    std::vector<BigInt> residuals;        // exact pipeline
    std::vector<double> residuals_approx; // float pipeline
};

ConsistencyReport verify_consistency(const Graph& g, int ell);

}  // namespace cycount

#endif
