#ifndef CYCOUNT_SUBGRAPH_ENUM_HPP
#define CYCOUNT_SUBGRAPH_ENUM_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cycount/graph.hpp"

namespace cycount {

// One weakly connected induced subgraph H, delivered to the enumeration
// visitor. The spans point into buffers owned by the enumerator and reused
// between visits; copy what you need to keep.
struct SubgraphVisit {
    std::span<const int> vertices;     // sorted ascending
    int neighbor_count = 0;            // |N(H)|, either-direction definition
    std::span<const double> dense;     // row-major |H| x |H|, original-graph weights

    int size() const { return static_cast<int>(vertices.size()); }
    double at(int i, int j) const { return dense[static_cast<std::size_t>(i) * vertices.size() + j]; }
};

using SubgraphVisitor = std::function<void(const SubgraphVisit&)>;

// Streams every vertex set H with 1 <= |H| <= bound whose induced subgraph of
// undirected_version(g) is connected, each exactly once, by reverse search:
// the canonical parent of H is H minus its largest-id removable (non-cut)
// vertex. Working memory stays proportional to the graph plus one search
// path; no subgraph list is materialized.
//
// With a non-empty `filter`, only sets containing every filter vertex are
// delivered (the search still traverses the full forest). Returns the number
// of emitted sets.
std::uint64_t enumerate_connected_induced(const Graph& g, int bound,
                                          const SubgraphVisitor& visitor,
                                          std::span<const int> filter = {});

// |N(H)|: vertices outside H with at least one edge to or from H.
int neighbor_count(const Graph& g, std::span<const int> vertices);

// Per-size counts |S_{=k}|, k = 1..bound; their sum is |S_bound|.
std::vector<std::uint64_t> count_connected_induced(const Graph& g, int bound);

}  // namespace cycount

#endif
