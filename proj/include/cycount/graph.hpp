#ifndef CYCOUNT_GRAPH_HPP
#define CYCOUNT_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cycount {

// One adjacency entry. `multiplicity` records how many parallel input edges
// collapsed into this one (the counting definitions need a simple graph; the
// multiplicities drive prune_by_multiplicity in the bench module).
struct Edge {
    int to = 0;
    double weight = 1.0;
    long long multiplicity = 1;
};

// Immutable after construction; safe to read from any number of threads.
//
// Vertex ids are dense 0..n-1. Undirected graphs store each logical edge once
// but expose it from both endpoints; a self-loop appears once, in out(v).
// For directed graphs, in() is the exact transpose of out().
class Graph {
public:
    Graph() = default;

    // `edges` are (u, v, weight, multiplicity) tuples with dense ids.
    // Parallel entries (same endpoints, same orientation for directed, either
    // orientation for undirected) collapse: first weight kept, multiplicities
    // summed. Adjacency lists come out sorted by target id.
    static Graph build(int n_vertices, bool directed,
                       std::vector<std::tuple<int, int, double, long long>> edges,
                       std::vector<std::string> names = {});

    int n_vertices() const { return n_; }
    bool directed() const { return directed_; }

    // M: arcs for directed graphs, logical edges for undirected ones.
    std::int64_t edge_count() const { return m_; }

    std::span<const Edge> out(int v) const { return out_[v]; }
    std::span<const Edge> in(int v) const { return directed_ ? std::span<const Edge>(in_[v]) : std::span<const Edge>(out_[v]); }

    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return directed_ ? static_cast<int>(in_[v].size()) : out_degree(v); }

    // Weight of arc u->v (or edge {u,v}); 0 when absent.
    double weight(int u, int v) const;
    bool has_edge(int u, int v) const;

    // Maximum degree over the undirected version (self-loops count once).
    int max_degree_undirected() const { return max_degree_undir_; }

    bool has_weights() const { return has_weights_; }     // any weight != 1
    bool integral_weights() const { return integral_weights_; }
    bool all_unit_weights() const { return !has_weights_; }

    const std::string& name(int v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }

    // Vertex labels for label-constrained counting. Unlabeled graphs have an
    // empty label vector.
    bool labeled() const { return !labels_.empty(); }
    int label(int v) const { return labels_[v]; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    void attach_labels(std::vector<int> labels, std::vector<std::string> alphabet);

    // Dense id of a vertex name, -1 if unknown.
    int vertex_by_name(const std::string& name) const;

    long long multiplicity(int u, int v) const;

private:
    int n_ = 0;
    bool directed_ = false;
    std::int64_t m_ = 0;
    int max_degree_undir_ = 0;
    bool has_weights_ = false;
    bool integral_weights_ = true;
    std::vector<std::vector<Edge>> out_;
    std::vector<std::vector<Edge>> in_;   // directed only
    std::vector<std::string> names_;
    std::vector<int> labels_;
    std::vector<std::string> alphabet_;
};

enum class FileFormat { Auto, EdgeList, Konect };

struct LoadOptions {
    FileFormat format = FileFormat::Auto;
    bool directed = false;
    // Use the third column as an edge weight. Otherwise the third column of a
    // KONECT file is a multiplicity and the third column of an edge list is
    // ignored (weight 1, one multiplicity unit per input line).
    bool use_weights = false;
};

// Edge-list format: "u v [w]" per line, '#' starts a comment, blank lines
// ignored, vertices are arbitrary tokens mapped to dense ids in order of
// first appearance. KONECT format: '%' lines skipped, columns 1-2 endpoints,
// optional column 3 multiplicity (or weight, see LoadOptions), further
// columns ignored. Malformed lines raise std::runtime_error with "path:line".
Graph load_graph(const std::string& path, const LoadOptions& opts = {});
Graph parse_graph(std::istream& input, const LoadOptions& opts, const std::string& origin = "<stream>");

// One edge per line, original vertex names, weight column present only when
// the graph carries non-unit weights.
void write_edge_list(const Graph& g, std::ostream& out);

// Labels file: "vertex label" per line, '#' comments. Every graph vertex must
// receive a label; the alphabet is built in first-appearance order.
void load_labels(Graph& g, const std::string& path);

struct PreprocessResult {
    Graph graph;
    std::vector<int> kept;   // kept[new_id] = old id
};

// Iteratively removes sources, sinks and isolated vertices (zero in- or
// out-degree when directed, zero degree when undirected) until a fixpoint.
// No simple cycle visits such a vertex, so cycle counts are unchanged.
PreprocessResult preprocess(const Graph& g);

// Structure-only undirected version: edge {u,v} iff u->v or v->u exists.
// Idempotent on undirected inputs.
Graph undirected_version(const Graph& g);

// Square row-major matrix of a small induced subgraph; dimension <= l+1 in
// all sieve uses.
struct DenseMatrix {
    int m = 0;
    std::vector<double> a;

    DenseMatrix() = default;
    explicit DenseMatrix(int dim) : m(dim), a(static_cast<std::size_t>(dim) * dim, 0.0) {}

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * m + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * m + j]; }
    bool integral() const;
};

// Adjacency of g restricted to `vertices` (sorted ascending), in that index
// order; the diagonal carries self-loop weights. Out-of-range or unsorted
// input raises std::invalid_argument.
DenseMatrix induced_dense(const Graph& g, std::span<const int> vertices);

}  // namespace cycount

#endif
