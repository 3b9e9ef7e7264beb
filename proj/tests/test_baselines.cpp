#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "cycount/baselines.hpp"
#include "cycount/graph.hpp"
#include "support.hpp"

using namespace cycount;
using namespace cycount::testing;

TEST_CASE("brute force census on K3 and K4") {
    Graph k3 = make_graph(3, false, {{0, 1}, {0, 2}, {1, 2}});
    LengthCensus c = brute_force_cycle_counts(k3, 3);
    CHECK(c.count == std::vector<std::uint64_t>{0, 3, 2});
    CHECK(c.total() == 5);
    CHECK(c.exact);

    // cap below the longest cycle
    Graph k4 = make_graph(4, false, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    LengthCensus capped = brute_force_cycle_counts(k4, 3);
    CHECK(capped.count == std::vector<std::uint64_t>{0, 6, 8});
}

TEST_CASE("blocked search equals brute force across the corpus") {
    auto corpus = random_corpus(50, 4242, 2, 8);
    for (const Graph& g : corpus) {
        int n = g.n_vertices();
        for (int ell : {2, n, n + 3}) {
            if (ell < 1) continue;
            LengthCensus a = brute_force_cycle_counts(g, ell);
            LengthCensus b = enumeration_cycle_counts(g, ell);
            CHECK(a.count == b.count);
            CHECK(a.weight == b.weight);
        }
    }
}

TEST_CASE("emitted sequences are genuine cycles, minimum first, no repeats") {
    Graph g = make_graph(5, true,
                         {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 1}, {3, 4}, {4, 0}, {2, 2}});
    std::set<std::vector<int>> seen;
    std::uint64_t n = enumerate_cycles_capped(g, 5, [&](std::span<const int> seq) {
        std::vector<int> s(seq.begin(), seq.end());
        CHECK(seen.insert(s).second);  // exactly once
        CHECK(*std::min_element(s.begin(), s.end()) == s.front());
        for (std::size_t i = 0; i < s.size(); ++i)
            CHECK(g.has_edge(s[i], s[(i + 1) % s.size()]));
    });
    CHECK(n == seen.size());
    CHECK(n == brute_force_cycle_counts(g, 5).total());
}

TEST_CASE("the depth cap does not hide shorter cycles") {
    // 4-ring with a chord: cutting depth at 3 must still find both triangles
    Graph g = make_graph(4, true, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 0}});
    LengthCensus c3 = enumeration_cycle_counts(g, 3);
    CHECK(c3.count[2] == 1);
    LengthCensus c4 = enumeration_cycle_counts(g, 4);
    CHECK(c4.count[2] == 1);
    CHECK(c4.count[3] == 1);

    auto corpus = random_corpus(30, 5150, 3, 8);
    for (const Graph& g2 : corpus) {
        int n = g2.n_vertices();
        for (int cap = 2; cap <= n; ++cap) {
            LengthCensus a = brute_force_cycle_counts(g2, cap);
            LengthCensus b = enumeration_cycle_counts(g2, cap);
            CHECK(a.count == b.count);
        }
    }
}

TEST_CASE("weighted and signed censuses carry weight sums beside counts") {
    Graph s = make_wgraph(3, false, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, -1.0}});
    LengthCensus c = brute_force_cycle_counts(s, 3);
    CHECK(c.count == std::vector<std::uint64_t>{0, 3, 2});
    CHECK(c.weight[1] == 3);
    CHECK(c.weight[2] == -2);

    Graph f = make_wgraph(2, false, {{0, 1, 0.5}});
    LengthCensus cf = brute_force_cycle_counts(f, 2);
    CHECK(!cf.exact);
    CHECK(cf.count[1] == 1);
    CHECK(cf.weight_approx[1] == 0.25);
}

TEST_CASE("self-loops count as length-1 cycles in both baselines") {
    Graph g = make_graph(3, true, {{0, 0}, {1, 1}, {1, 2}, {2, 1}});
    CHECK(brute_force_cycle_counts(g, 3).count[0] == 2);
    CHECK(enumeration_cycle_counts(g, 3).count[0] == 2);
    CHECK(enumeration_cycle_counts(g, 3).count[1] == 1);
}

TEST_CASE("brute force paths agree with the sequence oracle") {
    auto corpus = random_corpus(20, 606, 2, 7, CorpusWeights::SmallInt);
    for (const Graph& g : corpus) {
        int n = g.n_vertices();
        if (n < 2) continue;
        for (int trial = 0; trial < 4; ++trial) {
            int from = trial % n;
            int to = (trial + 1) % n;
            if (from == to) continue;
            LengthCensus got = brute_force_path_counts(g, from, to, n - 1);
            auto want = oracle_path_weights(g, from, to, n - 1);
            for (int k = 1; k <= n - 1; ++k) CHECK(got.weight[k - 1] == want[k - 1]);
        }
    }
}
