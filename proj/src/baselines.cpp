#include "cycount/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cycount {

namespace {

void require_length(int ell) {
    if (ell < 1) throw std::invalid_argument("length bound must be at least 1");
}

LengthCensus make_census(const Graph& g, int ell) {
    LengthCensus c;
    c.ell = ell;
    c.exact = g.integral_weights();
    c.count.assign(static_cast<std::size_t>(ell), 0);
    if (c.exact)
        c.weight.assign(static_cast<std::size_t>(ell), BigInt(0));
    else
        c.weight_approx.assign(static_cast<std::size_t>(ell), 0.0);
    return c;
}

// Arc lists with self-loops stripped. Undirected adjacency is already
// symmetric, so each undirected edge shows up as the expected arc pair.
std::vector<std::vector<int>> plain_arcs(const Graph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n_vertices()));
    for (int v = 0; v < g.n_vertices(); ++v)
        for (const Edge& e : g.out(v))
            if (e.to != v) adj[static_cast<std::size_t>(v)].push_back(e.to);
    return adj;
}

// Anchored sequence search: every cycle is generated exactly once as the
// vertex sequence starting at its minimal vertex, visiting only larger ids.
struct BruteForce {
    const Graph& g;
    std::vector<std::vector<int>> adj;
    LengthCensus census;
    int cap;
    int anchor = -1;
    std::vector<signed char> on_path;
    std::vector<int> path;
    std::vector<mpz_class> prod;    // prod[d]: weight product of the first d arcs
    std::vector<double> prod_real;

    BruteForce(const Graph& graph, int ell, int cap_)
        : g(graph), adj(plain_arcs(graph)), census(make_census(graph, ell)), cap(cap_) {
        on_path.assign(static_cast<std::size_t>(g.n_vertices()), 0);
        prod.assign(static_cast<std::size_t>(cap) + 1, BigInt(1));
        prod_real.assign(static_cast<std::size_t>(cap) + 1, 1.0);
    }

    void record(int length, int depth, double closing_weight) {
        ++census.count[static_cast<std::size_t>(length - 1)];
        if (census.exact) {
            mpz_class w = prod[static_cast<std::size_t>(depth)] *
                          static_cast<long>(std::llround(closing_weight));
            census.weight[static_cast<std::size_t>(length - 1)] += w;
        } else {
            census.weight_approx[static_cast<std::size_t>(length - 1)] +=
                prod_real[static_cast<std::size_t>(depth)] * closing_weight;
        }
    }

    void extend(int v, int depth, int w) {
        if (census.exact)
            prod[static_cast<std::size_t>(depth) + 1] =
                prod[static_cast<std::size_t>(depth)] *
                static_cast<long>(std::llround(g.weight(v, w)));
        else
            prod_real[static_cast<std::size_t>(depth) + 1] =
                prod_real[static_cast<std::size_t>(depth)] * g.weight(v, w);
    }

    void cycles_from(int v, int depth) {
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (w == anchor) {
                if (depth + 1 >= 2) record(depth + 1, depth, g.weight(v, anchor));
                continue;
            }
            if (w < anchor || on_path[static_cast<std::size_t>(w)]) continue;
            if (depth + 1 >= cap) continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            extend(v, depth, w);
            cycles_from(w, depth + 1);
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    }

    void paths_from(int v, int depth, int target) {
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (w == target) {
                record(depth + 1, depth, g.weight(v, target));
                continue;
            }
            if (on_path[static_cast<std::size_t>(w)]) continue;
            if (depth + 1 >= cap) continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            extend(v, depth, w);
            paths_from(w, depth + 1, target);
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    }
};

// Johnson-style blocked search, restricted to one strongly connected
// component, rooted at its minimal vertex. When the depth cap prunes a
// branch the branch is treated as if a cycle had been found: leaving its
// vertices blocked could hide cycles that are merely longer than the probe
// that blocked them.
struct BlockedSearch {
    const std::vector<std::vector<int>>& adj;
    const std::vector<signed char>& in_comp;
    const CycleSink& emit;
    std::uint64_t& found;
    int cap;
    int root = -1;
    std::vector<signed char> blocked;
    std::vector<std::vector<int>> blist;
    std::vector<int> stack;

    BlockedSearch(const std::vector<std::vector<int>>& a, const std::vector<signed char>& ic,
                  const CycleSink& e, std::uint64_t& f, int cap_)
        : adj(a), in_comp(ic), emit(e), found(f), cap(cap_) {
        int n = static_cast<int>(adj.size());
        blocked.assign(static_cast<std::size_t>(n), 0);
        blist.resize(static_cast<std::size_t>(n));
    }

    void unblock(int u) {
        blocked[static_cast<std::size_t>(u)] = 0;
        std::vector<int> pending;
        pending.swap(blist[static_cast<std::size_t>(u)]);
        for (int w : pending)
            if (blocked[static_cast<std::size_t>(w)]) unblock(w);
    }

    bool circuit(int v) {
        bool progressed = false;
        stack.push_back(v);
        blocked[static_cast<std::size_t>(v)] = 1;
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!in_comp[static_cast<std::size_t>(w)]) continue;
            if (w == root) {
                ++found;
                if (emit) emit(std::span<const int>(stack.data(), stack.size()));
                progressed = true;
            } else if (static_cast<int>(stack.size()) < cap) {
                if (!blocked[static_cast<std::size_t>(w)] && circuit(w)) progressed = true;
            } else {
                progressed = true;  // pruned by the cap, not proven dead
            }
        }
        if (progressed) {
            unblock(v);
        } else {
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (!in_comp[static_cast<std::size_t>(w)]) continue;
                std::vector<int>& bw = blist[static_cast<std::size_t>(w)];
                if (std::find(bw.begin(), bw.end(), v) == bw.end()) bw.push_back(v);
            }
        }
        stack.pop_back();
        return progressed;
    }
};

// Iterative Tarjan over the subgraph induced by `members`.
std::vector<std::vector<int>> strong_components(const std::vector<std::vector<int>>& adj,
                                                const std::vector<int>& members) {
    int n = static_cast<int>(adj.size());
    std::vector<signed char> in_sub(static_cast<std::size_t>(n), 0);
    for (int v : members) in_sub[static_cast<std::size_t>(v)] = 1;

    std::vector<int> index(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<signed char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<int> scc_stack;
    std::vector<std::vector<int>> comps;
    int counter = 0;

    struct Frame {
        int v;
        std::size_t ei;
    };
    std::vector<Frame> frames;

    for (int start : members) {
        if (index[static_cast<std::size_t>(start)] != -1) continue;
        frames.push_back({start, 0});
        index[static_cast<std::size_t>(start)] = low[static_cast<std::size_t>(start)] = counter++;
        scc_stack.push_back(start);
        on_stack[static_cast<std::size_t>(start)] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const std::vector<int>& row = adj[static_cast<std::size_t>(f.v)];
            bool descended = false;
            while (f.ei < row.size()) {
                int w = row[f.ei++];
                if (!in_sub[static_cast<std::size_t>(w)]) continue;
                if (index[static_cast<std::size_t>(w)] == -1) {
                    index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] =
                        counter++;
                    scc_stack.push_back(w);
                    on_stack[static_cast<std::size_t>(w)] = 1;
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[static_cast<std::size_t>(w)])
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)],
                                 index[static_cast<std::size_t>(w)]);
            }
            if (descended) continue;
            int v = f.v;
            frames.pop_back();
            if (!frames.empty())
                low[static_cast<std::size_t>(frames.back().v)] =
                    std::min(low[static_cast<std::size_t>(frames.back().v)],
                             low[static_cast<std::size_t>(v)]);
            if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                std::vector<int> comp;
                while (true) {
                    int w = scc_stack.back();
                    scc_stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = 0;
                    comp.push_back(w);
                    if (w == v) break;
                }
                comps.push_back(std::move(comp));
            }
        }
    }
    return comps;
}

}  // namespace

std::uint64_t LengthCensus::total() const {
    std::uint64_t t = 0;
    for (std::uint64_t c : count) t += c;
    return t;
}

LengthCensus brute_force_cycle_counts(const Graph& g, int ell) {
    require_length(ell);
    int n = g.n_vertices();
    int eff = std::min(ell, std::max(n, 1));
    BruteForce bf(g, ell, eff);
    for (int s = 0; s < n; ++s) {
        double loop = g.weight(s, s);
        if (loop != 0.0) bf.record(1, 0, loop);
        if (eff < 2) continue;
        bf.anchor = s;
        bf.on_path[static_cast<std::size_t>(s)] = 1;
        bf.cycles_from(s, 0);
        bf.on_path[static_cast<std::size_t>(s)] = 0;
    }
    return bf.census;
}

LengthCensus brute_force_path_counts(const Graph& g, int from, int to, int ell) {
    require_length(ell);
    int n = g.n_vertices();
    if (from < 0 || from >= n || to < 0 || to >= n)
        throw std::invalid_argument("path endpoint out of range");
    if (from == to) throw std::invalid_argument("path endpoints must differ");
    int eff = std::min(ell, std::max(n - 1, 1));
    BruteForce bf(g, ell, eff);
    bf.on_path[static_cast<std::size_t>(from)] = 1;
    bf.paths_from(from, 0, to);
    bf.on_path[static_cast<std::size_t>(from)] = 0;
    return bf.census;
}

std::uint64_t enumerate_cycles_capped(const Graph& g, int ell, const CycleSink& emit) {
    require_length(ell);
    int n = g.n_vertices();
    std::uint64_t found = 0;

    for (int v = 0; v < n; ++v) {
        if (g.weight(v, v) != 0.0) {
            ++found;
            if (emit) {
                int seq[1] = {v};
                emit(std::span<const int>(seq, 1));
            }
        }
    }
    if (ell < 2 || n < 2) return found;

    std::vector<std::vector<int>> adj = plain_arcs(g);
    std::vector<signed char> in_comp(static_cast<std::size_t>(n), 0);

    // Work list of vertex sets still to decompose. Each strongly connected
    // component is searched from its minimal vertex, then re-decomposed
    // without it.
    std::vector<std::vector<int>> work;
    {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
        work.push_back(std::move(all));
    }
    while (!work.empty()) {
        std::vector<int> members = std::move(work.back());
        work.pop_back();
        if (members.size() < 2) continue;
        std::vector<std::vector<int>> comps = strong_components(adj, members);
        std::sort(comps.begin(), comps.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                      return *std::min_element(a.begin(), a.end()) <
                             *std::min_element(b.begin(), b.end());
                  });
        for (std::vector<int>& comp : comps) {
            if (comp.size() < 2) continue;
            int root = *std::min_element(comp.begin(), comp.end());
            for (int v : comp) in_comp[static_cast<std::size_t>(v)] = 1;
            BlockedSearch search(adj, in_comp, emit, found, ell);
            search.root = root;
            search.circuit(root);
            for (int v : comp) in_comp[static_cast<std::size_t>(v)] = 0;
            comp.erase(std::find(comp.begin(), comp.end(), root));
            work.push_back(std::move(comp));
        }
    }
    return found;
}

LengthCensus enumeration_cycle_counts(const Graph& g, int ell) {
    require_length(ell);
    LengthCensus census = make_census(g, ell);
    enumerate_cycles_capped(g, ell, [&](std::span<const int> seq) {
        int k = static_cast<int>(seq.size());
        ++census.count[static_cast<std::size_t>(k - 1)];
        if (census.exact) {
            mpz_class w = 1;
            for (int i = 0; i < k; ++i)
                w *= static_cast<long>(
                    std::llround(g.weight(seq[static_cast<std::size_t>(i)],
                                           seq[static_cast<std::size_t>((i + 1) % k)])));
            census.weight[static_cast<std::size_t>(k - 1)] += w;
        } else {
            double w = 1.0;
            for (int i = 0; i < k; ++i)
                w *= g.weight(seq[static_cast<std::size_t>(i)],
                              seq[static_cast<std::size_t>((i + 1) % k)]);
            census.weight_approx[static_cast<std::size_t>(k - 1)] += w;
        }
    });
    return census;
}

}  // namespace cycount
