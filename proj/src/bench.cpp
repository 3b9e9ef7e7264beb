#include "cycount/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include "cycount/baselines.hpp"
#include "cycount/sieve.hpp"
#include "cycount/subgraph_enum.hpp"

namespace cycount {

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

}  // namespace

Graph gen_er(int n, double p, std::uint64_t seed, bool directed) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in [0, 1]");
    std::mt19937_64 rng(seed);
    // Scale to [0, 1) with the full 64 bits; strictly-below keeps p = 0 and
    // p = 1 exact.
    const long double threshold = static_cast<long double>(p) * 18446744073709551616.0L;
    std::vector<std::tuple<int, int, double, long long>> edges;
    for (int u = 0; u < n; ++u) {
        int v0 = directed ? 0 : u + 1;
        for (int v = v0; v < n; ++v) {
            if (v == u) continue;
            if (static_cast<long double>(rng()) < threshold)
                edges.emplace_back(u, v, 1.0, 1);
        }
    }
    return Graph::build(n, directed, std::move(edges));
}

SweepResult sweep_crossover(int n, std::span<const double> ps, const SweepOptions& opts) {
    if (n < 1) throw std::invalid_argument("vertex count must be positive");
    if (opts.reps < 1) throw std::invalid_argument("reps must be positive");
    if (opts.streak < 1) throw std::invalid_argument("streak must be positive");
    int ell = opts.ell > 0 ? opts.ell : n;

    SweepResult res;
    res.n = n;
    res.ell = ell;
    int run = 0;
    for (std::size_t ip = 0; ip < ps.size(); ++ip) {
        SweepPoint pt;
        pt.p = ps[ip];
        double sieve_total = 0.0, enum_total = 0.0, cycles_total = 0.0;
        for (int r = 0; r < opts.reps; ++r) {
            std::uint64_t seed = mix(mix(mix(opts.seed, static_cast<std::uint64_t>(n)), ip),
                                     static_cast<std::uint64_t>(r));
            Graph g = gen_er(n, pt.p, seed, true);

            double t0 = now_ms();
            CycleCounts sieve = count_cycles(g, ell);
            double t1 = now_ms();
            std::uint64_t found = enumerate_cycles_capped(g, ell);
            double t2 = now_ms();

            sieve_total += t1 - t0;
            enum_total += t2 - t1;
            cycles_total += static_cast<double>(found);

            // Both algorithms must agree; a sweep that compares divergent
            // computations would be meaningless.
            BigInt total = 0;
            for (const BigInt& v : sieve.gamma.exact_values) total += v;
            if (total != static_cast<unsigned long>(found))
                throw std::runtime_error("sweep cross-check failed: sieve != enumeration");
        }
        pt.sieve_ms = sieve_total / opts.reps;
        pt.enum_ms = enum_total / opts.reps;
        pt.mean_cycles = cycles_total / opts.reps;
        pt.sieve_wins = pt.sieve_ms < pt.enum_ms;
        res.points.push_back(pt);

        run = pt.sieve_wins ? run + 1 : 0;
        if (run >= opts.streak) {
            res.conclusive = true;
            res.crossover_p = res.points[res.points.size() - opts.streak].p;
            break;
        }
    }
    if (!res.conclusive) res.crossover_p = std::numeric_limits<double>::quiet_NaN();
    return res;
}

InverseFit fit_inverse_n(std::span<const double> ns, std::span<const double> ys) {
    if (ns.size() != ys.size() || ns.size() < 2)
        throw std::invalid_argument("fit needs at least two (n, y) samples");
    std::size_t m = ns.size();
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (ns[i] <= 0) throw std::invalid_argument("fit needs positive n");
        sx += 1.0 / ns[i];
        sy += ys[i];
    }
    double xbar = sx / m, ybar = sy / m;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        double dx = 1.0 / ns[i] - xbar;
        sxx += dx * dx;
        sxy += dx * (ys[i] - ybar);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit needs at least two distinct n");
    InverseFit fit;
    fit.b = sxy / sxx;
    fit.a = ybar - fit.b * xbar;
    double rss = 0;
    for (std::size_t i = 0; i < m; ++i) {
        double r = ys[i] - (fit.a + fit.b / ns[i]);
        rss += r * r;
    }
    fit.rmse = std::sqrt(rss / m);
    return fit;
}

namespace {

// Closed-form inner least squares of y = scale * ratio^k + offset at fixed
// ratio; returns the residual sum of squares.
double geometric_rss(std::span<const int> ks, std::span<const double> ys, double ratio,
                     double& scale, double& offset) {
    std::size_t m = ks.size();
    double su = 0, suu = 0, sy = 0, suy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        double u = std::pow(ratio, ks[i]);
        su += u;
        suu += u * u;
        sy += ys[i];
        suy += u * ys[i];
    }
    double det = m * suu - su * su;
    if (!(std::abs(det) > 1e-12 * std::max(1.0, suu * m))) {
        // ratio ~ 1 (or 0): the basis degenerates to a constant
        scale = 0.0;
        offset = sy / m;
    } else {
        scale = (m * suy - su * sy) / det;
        offset = (sy - scale * su) / m;
    }
    double rss = 0;
    for (std::size_t i = 0; i < m; ++i) {
        double r = ys[i] - (scale * std::pow(ratio, ks[i]) + offset);
        rss += r * r;
    }
    return rss;
}

}  // namespace

GeometricFit fit_geometric(std::span<const int> ks, std::span<const double> ys) {
    if (ks.size() != ys.size() || ks.size() < 3)
        throw std::invalid_argument("fit needs at least three (k, y) samples");

    // Bracket the ratio by the largest consecutive growth factor.
    double max_ratio = 1.0;
    for (std::size_t i = 1; i < ks.size(); ++i) {
        if (ys[i - 1] != 0.0 && ks[i] > ks[i - 1]) {
            double r = std::abs(ys[i] / ys[i - 1]);
            max_ratio = std::max(max_ratio, std::pow(r, 1.0 / (ks[i] - ks[i - 1])));
        }
    }
    double lo = 1e-3, hi = 2.0 * max_ratio + 2.0;

    GeometricFit best;
    best.rmse = std::numeric_limits<double>::infinity();
    const int grid = 512;
    for (int round = 0; round < 48; ++round) {
        double best_x = lo;
        double best_rss = std::numeric_limits<double>::infinity();
        for (int i = 0; i <= grid; ++i) {
            double x = lo + (hi - lo) * i / grid;
            double s, o;
            double rss = geometric_rss(ks, ys, x, s, o);
            if (rss < best_rss) {
                best_rss = rss;
                best_x = x;
            }
        }
        double step = (hi - lo) / grid;
        lo = std::max(1e-9, best_x - 2 * step);
        hi = best_x + 2 * step;
        if (step < 1e-15 * std::max(1.0, best_x)) break;
    }
    double mid = (lo + hi) / 2;
    double s, o;
    double rss = geometric_rss(ks, ys, mid, s, o);
    best.ratio = mid;
    best.scale = s;
    best.offset = o;
    best.rmse = std::sqrt(rss / ks.size());
    return best;
}

SignedSplit signed_cycle_split(const Graph& g, int ell) {
    for (int v = 0; v < g.n_vertices(); ++v)
        for (const Edge& e : g.out(v))
            if (e.weight != 1.0 && e.weight != -1.0)
                throw std::invalid_argument("signed split requires all edge weights in {+1, -1}");

    CycleCounts net = count_cycles(g, ell);

    std::vector<std::tuple<int, int, double, long long>> edges;
    for (int v = 0; v < g.n_vertices(); ++v)
        for (const Edge& e : g.out(v)) {
            if (!g.directed() && e.to < v) continue;
            edges.emplace_back(v, e.to, 1.0, e.multiplicity);
        }
    Graph unsigned_g =
        Graph::build(g.n_vertices(), g.directed(), std::move(edges), std::vector<std::string>(g.names().begin(), g.names().end()));
    CycleCounts gross = count_cycles(unsigned_g, ell);

    SignedSplit out;
    out.ell = ell;
    out.positive.resize(static_cast<std::size_t>(ell));
    out.negative.resize(static_cast<std::size_t>(ell));
    for (int k = 1; k <= ell; ++k) {
        const BigInt& total = gross.gamma.exact_values[static_cast<std::size_t>(k - 1)];
        const BigInt& diff = net.gamma.exact_values[static_cast<std::size_t>(k - 1)];
        BigInt twice_pos = total + diff;
        if (mpz_odd_p(twice_pos.get_mpz_t()))
            throw std::runtime_error(
                "internal consistency failure: signed and unsigned counts differ in parity");
        BigInt pos = twice_pos / 2;
        BigInt negv = total - pos;
        if (pos < 0 || negv < 0)
            throw std::runtime_error(
                "internal consistency failure: signed count exceeds unsigned total");
        out.positive[static_cast<std::size_t>(k - 1)] = pos;
        out.negative[static_cast<std::size_t>(k - 1)] = negv;
    }
    return out;
}

std::vector<Graph> prune_by_multiplicity(const Graph& g, std::int64_t min_removed) {
    if (min_removed < 1) throw std::invalid_argument("removal threshold must be positive");

    struct Arc {
        int u, v;
        double w;
        long long mult;
    };
    std::vector<Arc> arcs;
    for (int u = 0; u < g.n_vertices(); ++u)
        for (const Edge& e : g.out(u)) {
            if (!g.directed() && e.to < u) continue;
            arcs.push_back({u, e.to, e.weight, e.multiplicity});
        }

    std::vector<long long> thresholds;
    for (const Arc& a : arcs) thresholds.push_back(a.mult);
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    auto instance_at = [&](long long t) {
        std::vector<int> new_id(static_cast<std::size_t>(g.n_vertices()), -1);
        std::vector<std::string> names;
        std::vector<std::tuple<int, int, double, long long>> edges;
        auto id_of = [&](int v) {
            int& id = new_id[static_cast<std::size_t>(v)];
            if (id < 0) {
                id = static_cast<int>(names.size());
                names.push_back(std::string(g.name(v)));
            }
            return id;
        };
        for (const Arc& a : arcs)
            if (a.mult >= t) edges.emplace_back(id_of(a.u), id_of(a.v), a.w, a.mult);
        int kept_n = static_cast<int>(names.size());
        return Graph::build(kept_n, g.directed(), std::move(edges), std::move(names));
    };

    std::vector<Graph> out;
    if (thresholds.empty()) return out;
    out.push_back(instance_at(thresholds.front()));
    std::int64_t last_kept = static_cast<std::int64_t>(arcs.size());
    for (std::size_t i = 1; i < thresholds.size(); ++i) {
        long long t = thresholds[i];
        std::int64_t kept = 0;
        for (const Arc& a : arcs)
            if (a.mult >= t) ++kept;
        if (last_kept - kept >= min_removed) {
            out.push_back(instance_at(t));
            last_kept = kept;
        }
    }
    return out;
}

Advice advise_algorithm(const Graph& g, int ell) {
    if (ell < 1) throw std::invalid_argument("length bound must be at least 1");
    int eff = std::min(ell, std::max(g.n_vertices(), 1));
    Advice adv;
    if (g.n_vertices() == 0) return adv;
    adv.subgraph_count = enumerate_connected_induced(g, eff, {});
    adv.cycle_count = enumerate_cycles_capped(g, eff);
    int delta = g.max_degree_undirected();
    if (delta == 0) {
        adv.sieve_cost = std::numeric_limits<double>::infinity();
    } else {
        adv.sieve_cost = (static_cast<double>(eff) * eff / delta + 1.0) *
                         static_cast<double>(adv.subgraph_count);
    }
    adv.choice = adv.sieve_cost <= static_cast<double>(adv.cycle_count) ? Algorithm::Sieve
                                                                        : Algorithm::Enumeration;
    return adv;
}

}  // namespace cycount
