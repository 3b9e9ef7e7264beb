#ifndef CYCOUNT_TESTS_SUPPORT_HPP
#define CYCOUNT_TESTS_SUPPORT_HPP

// Shared fixtures for the test binaries: tiny graph builders, exhaustive
// reference oracles kept deliberately naive and separate from the library's
// own baselines, and a random-graph corpus generator.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "cycount/graph.hpp"

namespace cycount::testing {

inline Graph make_graph(int n, bool directed,
                        const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::tuple<int, int, double, long long>> rows;
    rows.reserve(edges.size());
    for (auto [u, v] : edges) rows.push_back({u, v, 1.0, 1});
    return Graph::build(n, directed, std::move(rows));
}

inline Graph make_wgraph(int n, bool directed,
                         const std::vector<std::tuple<int, int, double>>& edges) {
    std::vector<std::tuple<int, int, double, long long>> rows;
    rows.reserve(edges.size());
    for (auto [u, v, w] : edges) rows.push_back({u, v, w, 1});
    return Graph::build(n, directed, std::move(rows));
}

// Every vertex set of size 1..bound inducing a connected subgraph of the
// undirected version, found by scanning the full powerset. Usable up to
// n ~ 20.
inline std::set<std::vector<int>> connected_sets_powerset(const Graph& g, int bound) {
    int n = g.n_vertices();
    std::set<std::vector<int>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) verts.push_back(v);
        if (static_cast<int>(verts.size()) > bound) continue;
        std::vector<int> stack{verts[0]};
        std::set<int> seen{verts[0]};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            auto grow = [&](int w) {
                if ((mask & (1u << w)) && !seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
            };
            for (const Edge& e : g.out(u)) grow(e.to);
            for (const Edge& e : g.in(u)) grow(e.to);
        }
        if (seen.size() == verts.size()) out.insert(verts);
    }
    return out;
}

// Emits every simple cycle of length <= ell as its vertex sequence: start at
// the cycle's minimum vertex, each traversal orientation once. Plain sequence
// DFS with no pruning beyond the length bound.
template <typename F>
void for_each_cycle(const Graph& g, int ell, F&& fn) {
    if (ell < 1) return;
    int n = g.n_vertices();
    std::vector<int> seq;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto step = [&](auto&& self, int u) -> void {
        int start = seq.front();
        for (const Edge& e : g.out(u)) {
            int v = e.to;
            if (v == start) {
                fn(std::as_const(seq));
                continue;
            }
            if (v < start || used[v] || static_cast<int>(seq.size()) >= ell) continue;
            used[v] = 1;
            seq.push_back(v);
            self(self, v);
            seq.pop_back();
            used[v] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        seq.assign(1, s);
        used[s] = 1;
        step(step, s);
        used[s] = 0;
    }
}

// Emits every simple path from -> to with <= ell edges as its vertex
// sequence, endpoints included.
template <typename F>
void for_each_path(const Graph& g, int from, int to, int ell, F&& fn) {
    if (from == to || ell < 1) return;
    std::vector<int> seq{from};
    std::vector<char> used(static_cast<std::size_t>(g.n_vertices()), 0);
    used[from] = 1;
    auto step = [&](auto&& self, int u) -> void {
        for (const Edge& e : g.out(u)) {
            int v = e.to;
            if (used[v]) continue;
            if (v == to) {
                if (static_cast<int>(seq.size()) <= ell) {
                    seq.push_back(v);
                    fn(std::as_const(seq));
                    seq.pop_back();
                }
                continue;
            }
            if (static_cast<int>(seq.size()) >= ell) continue;
            used[v] = 1;
            seq.push_back(v);
            self(self, v);
            seq.pop_back();
            used[v] = 0;
        }
    };
    step(step, from);
}

inline long edge_w(const Graph& g, int u, int v) {
    return std::lround(g.weight(u, v));
}

// Weight sums per length (plain counts on unit graphs), lengths 1..ell.
inline std::vector<mpz_class> oracle_cycle_weights(const Graph& g, int ell) {
    std::vector<mpz_class> out(static_cast<std::size_t>(ell));
    for_each_cycle(g, ell, [&](const std::vector<int>& seq) {
        mpz_class w = 1;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) w *= edge_w(g, seq[i], seq[i + 1]);
        w *= edge_w(g, seq.back(), seq.front());
        out[seq.size() - 1] += w;
    });
    return out;
}

inline std::vector<mpz_class> oracle_path_weights(const Graph& g, int from, int to, int ell) {
    std::vector<mpz_class> out(static_cast<std::size_t>(ell));
    for_each_path(g, from, to, ell, [&](const std::vector<int>& seq) {
        mpz_class w = 1;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) w *= edge_w(g, seq[i], seq[i + 1]);
        out[seq.size() - 2] += w;
    });
    return out;
}

inline std::vector<double> oracle_cycle_weights_real(const Graph& g, int ell) {
    std::vector<double> out(static_cast<std::size_t>(ell), 0.0);
    for_each_cycle(g, ell, [&](const std::vector<int>& seq) {
        double w = 1.0;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) w *= g.weight(seq[i], seq[i + 1]);
        w *= g.weight(seq.back(), seq.front());
        out[seq.size() - 1] += w;
    });
    return out;
}

enum class CorpusWeights { Unit, Signed, SmallInt };

// Deterministic mixed corpus: sizes nmin..nmax, densities {0.2, 0.4, 0.7},
// alternating orientation, self-loops on roughly a fifth of the vertices.
inline std::vector<Graph> random_corpus(int count, unsigned seed, int nmin, int nmax,
                                        CorpusWeights wmode = CorpusWeights::Unit) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    const double ps[3] = {0.2, 0.4, 0.7};
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(count));
    auto wgen = [&]() -> double {
        switch (wmode) {
            case CorpusWeights::Unit: return 1.0;
            case CorpusWeights::Signed: return (rng() & 1) ? 1.0 : -1.0;
            default: return 1.0 + static_cast<double>(rng() % 3);
        }
    };
    for (int i = 0; i < count; ++i) {
        int n = nmin + static_cast<int>(rng() % static_cast<unsigned>(nmax - nmin + 1));
        bool directed = (i & 1) != 0;
        double p = ps[rng() % 3];
        std::vector<std::tuple<int, int, double, long long>> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (u == v) {
                    if (U(rng) < 0.2) edges.push_back({u, u, wgen(), 1});
                    continue;
                }
                if (!directed && u > v) continue;
                if (U(rng) < p) edges.push_back({u, v, wgen(), 1});
            }
        }
        out.push_back(Graph::build(n, directed, std::move(edges)));
    }
    return out;
}

}  // namespace cycount::testing

#endif
