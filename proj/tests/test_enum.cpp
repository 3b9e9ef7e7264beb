#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "cycount/graph.hpp"
#include "cycount/subgraph_enum.hpp"
#include "support.hpp"

using namespace cycount;
using namespace cycount::testing;

namespace {

std::set<std::vector<int>> collect(const Graph& g, int bound,
                                   std::span<const int> filter = {}) {
    std::set<std::vector<int>> sets;
    enumerate_connected_induced(
        g, bound,
        [&](const SubgraphVisit& v) {
            sets.insert(std::vector<int>(v.vertices.begin(), v.vertices.end()));
        },
        filter);
    return sets;
}

}  // namespace

TEST_CASE("complete graphs: every nonempty subset is connected") {
    Graph k3 = make_graph(3, false, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(collect(k3, 3).size() == 7);
    std::vector<std::uint64_t> census = count_connected_induced(k3, 3);
    CHECK(census == std::vector<std::uint64_t>{3, 3, 1});

    Graph k4 = make_graph(4, false, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(count_connected_induced(k4, 4) == std::vector<std::uint64_t>{4, 6, 4, 1});
}

TEST_CASE("star and path censuses") {
    // K_{1,3}: center 0
    Graph star = make_graph(4, false, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(collect(star, 4).size() == 11);

    Graph p4 = make_graph(4, false, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(collect(p4, 2).size() == 7);  // 4 singletons + 3 edges
}

TEST_CASE("directed graphs enumerate over weak connectivity") {
    Graph chain = make_graph(3, true, {{0, 1}, {1, 2}});
    Graph undirected_chain = make_graph(3, false, {{0, 1}, {1, 2}});
    CHECK(collect(chain, 3) == collect(undirected_chain, 3));
}

TEST_CASE("filter restricts to supersets without changing them") {
    Graph k3 = make_graph(3, false, {{0, 1}, {0, 2}, {1, 2}});
    std::vector<int> filter{0};
    auto filtered = collect(k3, 3, filter);
    CHECK(filtered.size() == 4);
    for (const auto& s : filtered) CHECK(std::find(s.begin(), s.end(), 0) != s.end());

    auto all = collect(k3, 3);
    for (const auto& s : filtered) CHECK(all.count(s) == 1);
}

TEST_CASE("visits carry sorted vertices, correct neighbor counts and adjacency") {
    Graph g = make_wgraph(5, true,
                          {{0, 1, 2.0}, {1, 2, -1.0}, {2, 0, 1.0}, {2, 3, 5.0},
                           {3, 4, 1.0}, {4, 4, 3.0}});
    enumerate_connected_induced(g, 5, [&](const SubgraphVisit& v) {
        CHECK(std::is_sorted(v.vertices.begin(), v.vertices.end()));
        std::vector<int> verts(v.vertices.begin(), v.vertices.end());
        CHECK(v.neighbor_count == neighbor_count(g, verts));
        DenseMatrix d = induced_dense(g, verts);
        CHECK(d.m == v.size());
        for (int i = 0; i < d.m; ++i)
            for (int j = 0; j < d.m; ++j) CHECK(d.at(i, j) == v.at(i, j));
    });
}

TEST_CASE("neighbor_count uses the either-direction definition") {
    Graph g = make_graph(4, true, {{0, 1}, {2, 1}, {1, 3}});
    std::vector<int> h{1};
    CHECK(neighbor_count(g, h) == 3);  // 0 and 2 point in, 3 is pointed at
    std::vector<int> h2{0, 3};
    CHECK(neighbor_count(g, h2) == 1);
}

TEST_CASE("bound semantics") {
    Graph k3 = make_graph(3, false, {{0, 1}, {0, 2}, {1, 2}});
    CHECK_THROWS_AS(enumerate_connected_induced(k3, 0, [](const SubgraphVisit&) {}),
                    std::invalid_argument);
    CHECK(collect(k3, 1).size() == 3);
    CHECK(collect(k3, 17).size() == 7);  // bound past n clips
    Graph empty = Graph::build(0, false, {});
    CHECK(enumerate_connected_induced(empty, 3, [](const SubgraphVisit&) {}) == 0);
}

TEST_CASE("agreement with the powerset oracle on a random corpus") {
    auto corpus = random_corpus(60, 2024, 2, 8);
    for (const Graph& g : corpus) {
        for (int bound = 1; bound <= g.n_vertices(); ++bound) {
            auto got = collect(g, bound);
            auto want = connected_sets_powerset(g, bound);
            CHECK(got == want);
        }
    }
}

TEST_CASE("wide graphs take the list enumerator and agree with the mask one") {
    // same structure, once at n = 9 (bitmask path) and once padded to n = 70
    // (adjacency-list path) with isolated vertices
    auto corpus = random_corpus(12, 515, 4, 9);
    for (const Graph& small : corpus) {
        int n = small.n_vertices();
        std::vector<std::tuple<int, int, double, long long>> edges;
        for (int u = 0; u < n; ++u)
            for (const Edge& e : small.out(u))
                if (small.directed() || u <= e.to) edges.push_back({u, e.to, e.weight, 1});
        Graph wide = Graph::build(70, small.directed(), edges);

        auto base = collect(small, n);
        auto padded = collect(wide, n);
        std::set<std::vector<int>> expect = base;
        for (int v = n; v < 70; ++v) expect.insert({v});
        CHECK(padded == expect);

        // neighbor counts must agree between the two enumerators
        std::vector<std::uint64_t> small_census = count_connected_induced(small, n);
        std::vector<std::uint64_t> wide_census = count_connected_induced(wide, n);
        CHECK(wide_census[0] == small_census[0] + (70 - n));
        for (int k = 2; k <= n; ++k) CHECK(wide_census[k - 1] == small_census[k - 1]);
    }
}

TEST_CASE("census sums match an independent subgraph count") {
    Graph g = make_graph(6, false, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {4, 5}});
    auto census = count_connected_induced(g, 6);
    auto oracle = connected_sets_powerset(g, 6);
    std::uint64_t total = 0;
    for (auto c : census) total += c;
    CHECK(total == oracle.size());
}
